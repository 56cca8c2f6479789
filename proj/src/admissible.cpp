#include "iwasawa/admissible.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "iwasawa/random.hpp"

namespace iwasawa {

namespace {

constexpr std::uint64_t kConeStream = 0x636f6e65;

AdmissibilityReport reject(AdmissibilityReport report, std::string reason) {
  report.admissible = false;
  report.margin = 0.0;
  report.reason = std::move(reason);
  return report;
}

}  // namespace

bool is_admissible_diag(std::span<const double> d, const Signature& sig) {
  if (d.size() != sig.dim()) {
    throw Error(ErrorCode::DimensionMismatch,
                "is_admissible_diag: expected " + std::to_string(sig.n()) +
                    " entries, got " + std::to_string(d.size()));
  }
  const auto p = static_cast<std::size_t>(sig.p());
  const double min_timelike = *std::min_element(d.begin(), d.begin() + p);
  const double max_spacelike = *std::max_element(d.begin() + p, d.end());
  return min_timelike > max_spacelike;
}

AdmissibilityReport check_admissible_q(const CMatrix& s, const Signature& sig,
                                       double tol) {
  if (!is_member(s, GroupTag::Q, sig, tol)) {
    throw Error(ErrorCode::NotInQ, "check_admissible_q: matrix is not in Q");
  }
  EigenResult spectrum;
  try {
    spectrum = eig(s);
  } catch (const Error& e) {
    throw Error(ErrorCode::EigenFailure,
                std::string("check_admissible_q: ") + e.what());
  }

  AdmissibilityReport report;
  report.eigenvalues = spectrum.values;
  double scale = 0.0;
  for (const auto& v : spectrum.values) scale = std::max(scale, std::abs(v));

  for (const auto& v : spectrum.values) {
    if (std::abs(v.imag()) > tol * (1.0 + std::abs(v.real()))) {
      return reject(std::move(report), "complex eigenvalue");
    }
  }
  for (const auto& v : spectrum.values) {
    if (!(v.real() > 0.0)) return reject(std::move(report), "non-positive eigenvalue");
  }
  if (spectrum.defective) return reject(std::move(report), "defective eigenvalue");

  // Eigenvalues arrive sorted by real part; equal ones (to tol) form one
  // eigenspace whose inertia comes from the Gram matrix of the pairing.
  const std::size_t n = sig.dim();
  std::size_t start = 0;
  while (start < n) {
    std::size_t stop = start + 1;
    while (stop < n && spectrum.values[stop - 1].real() - spectrum.values[stop].real() <=
                           tol * scale) {
      ++stop;
    }
    const std::size_t k = stop - start;
    CMatrix gram(k, k);
    for (std::size_t i = 0; i < k; ++i) {
      const CVector vi = spectrum.vectors.column(start + i);
      for (std::size_t j = 0; j < k; ++j) {
        gram(i, j) = pairing(spectrum.vectors.column(start + j), vi, sig);
      }
    }
    std::vector<double> inertia;
    if (k == 1) {
      inertia.push_back(gram(0, 0).real());
    } else {
      for (const auto& g : eig(gram).values) inertia.push_back(g.real());
    }
    for (std::size_t i = 0; i < k; ++i) {
      const double lambda = spectrum.values[start + i].real();
      if (std::abs(inertia[i]) <= tol) {
        return reject(std::move(report), "null eigenvector");
      }
      (inertia[i] > 0 ? report.timelike_values : report.spacelike_values)
          .push_back(lambda);
    }
    start = stop;
  }

  if (report.timelike_values.size() != static_cast<std::size_t>(sig.p()) ||
      report.spacelike_values.size() != static_cast<std::size_t>(sig.q())) {
    return reject(std::move(report), "wrong inertia");
  }
  std::sort(report.timelike_values.begin(), report.timelike_values.end(), std::greater<>());
  std::sort(report.spacelike_values.begin(), report.spacelike_values.end(), std::greater<>());
  report.margin = report.timelike_values.back() - report.spacelike_values.front();
  report.admissible = report.margin > tol * scale;
  report.reason = report.admissible ? "admissible" : "gap violated";
  return report;
}

AdmissibilityReport check_admissible_an(const CMatrix& b, const Signature& sig,
                                        double tol) {
  if (!is_member(b, GroupTag::AN, sig, tol)) {
    throw Error(ErrorCode::NotInAN, "check_admissible_an: matrix is not in AN");
  }
  return check_admissible_q(dagger(b, sig) * b, sig, tol);
}

std::optional<CVector> find_cone_violation(const CMatrix& s, const Signature& sig,
                                           int trials, std::uint64_t seed) {
  for (int t = 0; t < trials; ++t) {
    const ConeClass cls = t % 2 == 0 ? ConeClass::Timelike : ConeClass::Null;
    CVector x = sample_cone(cls, sig, derive_seed(seed, kConeStream, t));
    const CVector image = s * x;
    if (image.norm() == 0.0 || classify(image, sig) != ConeClass::Timelike) {
      return x;
    }
  }
  return std::nullopt;
}

bool cone_preservation_check(const CMatrix& s, const Signature& sig, int trials,
                             std::uint64_t seed) {
  return !find_cone_violation(s, sig, trials, seed).has_value();
}

double pseudo_rayleigh(const CMatrix& s, const CVector& x, const Signature& sig,
                       double tol) {
  if (classify(x, sig, tol) != ConeClass::Timelike) {
    throw Error(ErrorCode::NotTimelike, "pseudo_rayleigh: x is not timelike");
  }
  return pairing(s * x, x, sig).real() / norm_sq(x, sig);
}

std::vector<Complex> leading_minors(const CMatrix& s) {
  if (!s.is_square()) {
    throw Error(ErrorCode::DimensionMismatch, "leading_minors: matrix is not square");
  }
  std::vector<Complex> minors;
  minors.reserve(s.rows());
  for (std::size_t k = 1; k <= s.rows(); ++k) {
    minors.push_back(determinant(s.leading_block(k)));
  }
  return minors;
}

}  // namespace iwasawa
