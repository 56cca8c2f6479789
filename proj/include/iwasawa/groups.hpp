#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "iwasawa/indefinite.hpp"
#include "iwasawa/numkernel.hpp"

namespace iwasawa {

enum class GroupTag { G, G0, A, N, AN, Q };

std::string_view to_string(GroupTag tag);

// Membership in SL(n), SU(p,q), the positive diagonal subgroup A, the
// unipotent upper triangular N, their product AN, and the dagger-fixed set Q.
bool is_member(const CMatrix& m, GroupTag tag, const Signature& sig,
               double tol = kDefaultTol);

// Exponent vector (lambda_1..lambda_p ; mu_1..mu_q), each block
// non-increasing, with lambda_p > mu_1 and zero sum.
class AdmissibleDiagonal {
 public:
  // Throws InvalidArgument when any invariant fails.
  AdmissibleDiagonal(std::vector<double> lambdas, std::vector<double> mus);

  const std::vector<double>& lambdas() const noexcept { return lambdas_; }
  const std::vector<double>& mus() const noexcept { return mus_; }
  Signature signature() const;

  // lambda_p - mu_1
  double gap() const noexcept { return lambdas_.back() - mus_.front(); }
  std::vector<double> exponents() const;
  // diag(exponents)
  CMatrix generator() const;
  // exp(diag(exponents))
  CMatrix exp_matrix() const;

 private:
  std::vector<double> lambdas_;
  std::vector<double> mus_;
};

// exp(X) for random X with dagger(X) = -X, tr X = 0 and ||X||_F = spread.
CMatrix random_g0(const Signature& sig, std::uint64_t seed, double spread);

// Upper triangular, diagonal log-uniform in [e^-spread, e^spread] rescaled to
// det 1, strict upper part complex Gaussian scaled by spread. Entries below
// the diagonal are exactly zero.
CMatrix random_an(const Signature& sig, std::uint64_t seed, double spread);

// min(lambda) - max(mu) >= gap, zero sum.
AdmissibleDiagonal random_admissible_diag(const Signature& sig,
                                          std::uint64_t seed, double gap);

}  // namespace iwasawa
