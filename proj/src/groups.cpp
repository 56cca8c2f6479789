#include "iwasawa/groups.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <string>

#include "iwasawa/random.hpp"

namespace iwasawa {

namespace {

double strict_lower_max(const CMatrix& m) {
  double worst = 0.0;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < i; ++j) worst = std::max(worst, std::abs(m(i, j)));
  return worst;
}

double off_diagonal_max(const CMatrix& m) {
  double worst = strict_lower_max(m);
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = i + 1; j < m.cols(); ++j) worst = std::max(worst, std::abs(m(i, j)));
  return worst;
}

// Upper triangular with real positive diagonal whose product is 1.
bool positive_triangular(const CMatrix& m, double tol) {
  const double scale = std::max(1.0, m.frobenius_norm());
  if (strict_lower_max(m) > tol * scale) return false;
  double det = 1.0;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    const Complex d = m(i, i);
    if (!(d.real() > 0.0) || std::abs(d.imag()) > tol * d.real()) return false;
    det *= d.real();
  }
  return std::abs(det - 1.0) <= tol;
}

}  // namespace

std::string_view to_string(GroupTag tag) {
  switch (tag) {
    case GroupTag::G: return "G";
    case GroupTag::G0: return "G0";
    case GroupTag::A: return "A";
    case GroupTag::N: return "N";
    case GroupTag::AN: return "AN";
    case GroupTag::Q: return "Q";
  }
  return "unknown";
}

bool is_member(const CMatrix& m, GroupTag tag, const Signature& sig, double tol) {
  if (m.rows() != sig.dim() || m.cols() != sig.dim()) {
    throw Error(ErrorCode::DimensionMismatch,
                "is_member: matrix is " + std::to_string(m.rows()) + "x" +
                    std::to_string(m.cols()) + ", signature dimension " +
                    std::to_string(sig.n()));
  }
  if (!m.all_finite()) return false;
  const std::size_t n = sig.dim();
  const auto unit_det = [&] { return std::abs(determinant(m) - 1.0) <= tol; };

  switch (tag) {
    case GroupTag::G:
      return unit_det();
    case GroupTag::G0:
      return (dagger(m, sig) * m - CMatrix::identity(n)).frobenius_norm() <= tol &&
             unit_det();
    case GroupTag::A:
      return off_diagonal_max(m) <= tol * std::max(1.0, m.frobenius_norm()) &&
             positive_triangular(m, tol);
    case GroupTag::N: {
      if (strict_lower_max(m) > tol * std::max(1.0, m.frobenius_norm())) return false;
      for (std::size_t i = 0; i < n; ++i)
        if (std::abs(m(i, i) - 1.0) > tol) return false;
      return true;
    }
    case GroupTag::AN:
      return positive_triangular(m, tol);
    case GroupTag::Q:
      return (dagger(m, sig) - m).frobenius_norm() <= tol * m.frobenius_norm() &&
             unit_det();
  }
  return false;
}

AdmissibleDiagonal::AdmissibleDiagonal(std::vector<double> lambdas,
                                       std::vector<double> mus)
    : lambdas_(std::move(lambdas)), mus_(std::move(mus)) {
  if (lambdas_.empty() || mus_.empty()) {
    throw Error(ErrorCode::InvalidArgument,
                "admissible diagonal needs at least one lambda and one mu");
  }
  const auto non_increasing = [](const std::vector<double>& v) {
    return std::is_sorted(v.begin(), v.end(), std::greater<>());
  };
  if (!non_increasing(lambdas_) || !non_increasing(mus_)) {
    throw Error(ErrorCode::InvalidArgument,
                "admissible diagonal blocks must be non-increasing");
  }
  if (!(lambdas_.back() > mus_.front())) {
    throw Error(ErrorCode::InvalidArgument,
                "admissible diagonal violates lambda_p > mu_1");
  }
  double sum = 0.0;
  double mag = 1.0;
  for (double x : exponents()) {
    if (!std::isfinite(x)) {
      throw Error(ErrorCode::NonFinite, "admissible diagonal has non-finite entry");
    }
    sum += x;
    mag += std::abs(x);
  }
  if (std::abs(sum) > 1e-12 * mag) {
    throw Error(ErrorCode::InvalidArgument,
                "admissible diagonal exponents must sum to zero");
  }
}

Signature AdmissibleDiagonal::signature() const {
  return Signature(static_cast<int>(lambdas_.size()), static_cast<int>(mus_.size()));
}

std::vector<double> AdmissibleDiagonal::exponents() const {
  std::vector<double> all = lambdas_;
  all.insert(all.end(), mus_.begin(), mus_.end());
  return all;
}

CMatrix AdmissibleDiagonal::generator() const {
  const auto e = exponents();
  return CMatrix::diagonal(std::span<const double>(e));
}

CMatrix AdmissibleDiagonal::exp_matrix() const {
  auto e = exponents();
  for (auto& x : e) x = std::exp(x);
  return CMatrix::diagonal(std::span<const double>(e));
}

CMatrix random_g0(const Signature& sig, std::uint64_t seed, double spread) {
  if (!(spread > 0.0)) {
    throw Error(ErrorCode::InvalidArgument, "random_g0: spread must be positive");
  }
  Rng rng(seed);
  const std::size_t n = sig.dim();
  CMatrix y(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) y(i, j) = rng.complex_normal();
  // dagger-antisymmetric part; its trace is purely imaginary, so removing it
  // keeps the antisymmetry.
  CMatrix x = 0.5 * (y - dagger(y, sig));
  const Complex shift = x.trace() / static_cast<double>(n);
  for (std::size_t i = 0; i < n; ++i) x(i, i) -= shift;
  x *= spread / x.frobenius_norm();
  return mat_exp(x);
}

CMatrix random_an(const Signature& sig, std::uint64_t seed, double spread) {
  if (!(spread > 0.0)) {
    throw Error(ErrorCode::InvalidArgument, "random_an: spread must be positive");
  }
  Rng rng(seed);
  const std::size_t n = sig.dim();
  std::vector<double> logs(n);
  for (auto& l : logs) l = rng.uniform(-spread, spread);
  const double mean = std::accumulate(logs.begin(), logs.end(), 0.0) / n;
  CMatrix b(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    b(i, i) = std::exp(logs[i] - mean);
    for (std::size_t j = i + 1; j < n; ++j) b(i, j) = spread * rng.complex_normal();
  }
  return b;
}

AdmissibleDiagonal random_admissible_diag(const Signature& sig,
                                          std::uint64_t seed, double gap) {
  if (!(gap > 0.0)) {
    throw Error(ErrorCode::InvalidArgument,
                "random_admissible_diag: gap must be positive");
  }
  Rng rng(seed);
  std::vector<double> lambdas(static_cast<std::size_t>(sig.p()));
  std::vector<double> mus(static_cast<std::size_t>(sig.q()));
  for (auto& l : lambdas) l = 0.5 * gap + rng.uniform();
  for (auto& m : mus) m = -0.5 * gap - rng.uniform();
  double mean = 0.0;
  for (double l : lambdas) mean += l;
  for (double m : mus) mean += m;
  mean /= sig.n();
  for (auto& l : lambdas) l -= mean;
  for (auto& m : mus) m -= mean;
  std::sort(lambdas.begin(), lambdas.end(), std::greater<>());
  std::sort(mus.begin(), mus.end(), std::greater<>());
  return AdmissibleDiagonal(std::move(lambdas), std::move(mus));
}

}  // namespace iwasawa
