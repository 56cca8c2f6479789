#pragma once

#include <cstdint>
#include <string_view>

#include "iwasawa/numkernel.hpp"

namespace iwasawa {

// Signature (p, q) of the form J = diag(1 x p, -1 x q).
class Signature {
 public:
  Signature(int p, int q);

  int p() const noexcept { return p_; }
  int q() const noexcept { return q_; }
  int n() const noexcept { return p_ + q_; }
  std::size_t dim() const noexcept { return static_cast<std::size_t>(p_ + q_); }

  double sign(std::size_t i) const noexcept {
    return i < static_cast<std::size_t>(p_) ? 1.0 : -1.0;
  }
  CMatrix form() const;

  friend bool operator==(const Signature&, const Signature&) = default;

 private:
  int p_;
  int q_;
};

enum class ConeClass { Timelike, Null, Spacelike };

std::string_view to_string(ConeClass c);

// <x, y> = sum_{i<=p} x_i conj(y_i) - sum_{j>p} x_j conj(y_j)
Complex pairing(const CVector& x, const CVector& y, const Signature& sig);

double norm_sq(const CVector& x, const Signature& sig);

// Timelike if norm_sq > tol ||x||^2, Spacelike if < -tol ||x||^2, else Null.
ConeClass classify(const CVector& x, const Signature& sig,
                   double tol = kDefaultTol);

// A^dagger = J A^* J, the adjoint for the indefinite pairing.
CMatrix dagger(const CMatrix& a, const Signature& sig);

// Unit-length random vector of the requested class. Null samples satisfy
// |norm_sq| <= 1e-12.
CVector sample_cone(ConeClass cls, const Signature& sig, std::uint64_t seed);

}  // namespace iwasawa
