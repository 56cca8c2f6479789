#include "iwasawa/indefinite.hpp"

#include <cmath>
#include <string>

#include "iwasawa/random.hpp"

namespace iwasawa {

namespace {

void require_dim(const CVector& x, const Signature& sig, const char* what) {
  if (x.size() != sig.dim()) {
    throw Error(ErrorCode::DimensionMismatch,
                std::string(what) + ": vector length " + std::to_string(x.size()) +
                    " does not match signature dimension " +
                    std::to_string(sig.n()));
  }
}

}  // namespace

Signature::Signature(int p, int q) : p_(p), q_(q) {
  if (p < 1 || q < 1) {
    throw Error(ErrorCode::InvalidArgument,
                "signature needs p >= 1 and q >= 1, got (" + std::to_string(p) +
                    ", " + std::to_string(q) + ")");
  }
}

CMatrix Signature::form() const {
  CMatrix j(dim(), dim());
  for (std::size_t i = 0; i < dim(); ++i) j(i, i) = sign(i);
  return j;
}

std::string_view to_string(ConeClass c) {
  switch (c) {
    case ConeClass::Timelike: return "timelike";
    case ConeClass::Null: return "null";
    case ConeClass::Spacelike: return "spacelike";
  }
  return "unknown";
}

Complex pairing(const CVector& x, const CVector& y, const Signature& sig) {
  require_dim(x, sig, "pairing");
  require_dim(y, sig, "pairing");
  Complex acc{};
  for (std::size_t i = 0; i < x.size(); ++i) acc += sig.sign(i) * x[i] * std::conj(y[i]);
  return acc;
}

double norm_sq(const CVector& x, const Signature& sig) {
  require_dim(x, sig, "norm_sq");
  double timelike = 0.0;
  double spacelike = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    (sig.sign(i) > 0 ? timelike : spacelike) += std::norm(x[i]);
  }
  return timelike - spacelike;
}

ConeClass classify(const CVector& x, const Signature& sig, double tol) {
  const double nsq = norm_sq(x, sig);
  const double len2 = x.norm() * x.norm();
  if (len2 == 0.0) throw Error(ErrorCode::ZeroVector, "classify: zero vector");
  if (nsq > tol * len2) return ConeClass::Timelike;
  if (nsq < -tol * len2) return ConeClass::Spacelike;
  return ConeClass::Null;
}

CMatrix dagger(const CMatrix& a, const Signature& sig) {
  if (a.rows() != sig.dim() || a.cols() != sig.dim()) {
    throw Error(ErrorCode::DimensionMismatch,
                "dagger: matrix is " + std::to_string(a.rows()) + "x" +
                    std::to_string(a.cols()) + ", signature dimension " +
                    std::to_string(sig.n()));
  }
  CMatrix d(sig.dim(), sig.dim());
  for (std::size_t i = 0; i < sig.dim(); ++i)
    for (std::size_t j = 0; j < sig.dim(); ++j)
      d(i, j) = sig.sign(i) * sig.sign(j) * std::conj(a(j, i));
  return d;
}

CVector sample_cone(ConeClass cls, const Signature& sig, std::uint64_t seed) {
  Rng rng(seed);
  const auto p = static_cast<std::size_t>(sig.p());
  CVector u(sig.dim());
  CVector v(sig.dim());
  for (std::size_t i = 0; i < sig.dim(); ++i) (i < p ? u : v)[i] = rng.complex_normal();
  const double nu = u.norm();
  const double nv = v.norm();

  // x = u + rho v' with ||v'|| = ||u|| (or the mirror image for spacelike);
  // rho in [0, 1) keeps the class, rho = 1 lands on the null cone.
  CVector x;
  switch (cls) {
    case ConeClass::Timelike:
      x = u + (rng.uniform(0.0, 1.0 - 1e-6) * nu / nv) * v;
      break;
    case ConeClass::Null:
      x = u + (nu / nv) * v;
      break;
    case ConeClass::Spacelike:
      x = (rng.uniform(0.0, 1.0 - 1e-6) * nv / nu) * u + v;
      break;
  }
  x *= 1.0 / x.norm();
  return x;
}

}  // namespace iwasawa
