#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "iwasawa/groups.hpp"
#include "iwasawa/indefinite.hpp"
#include "iwasawa/numkernel.hpp"

namespace iwasawa {

// min of the first p entries strictly exceeds max of the last q.
bool is_admissible_diag(std::span<const double> d, const Signature& sig);

struct AdmissibilityReport {
  bool admissible = false;
  std::vector<Complex> eigenvalues;
  std::vector<double> timelike_values;
  std::vector<double> spacelike_values;
  // min(timelike_values) - max(spacelike_values); 0 when undefined
  double margin = 0.0;
  std::string reason;
};

// Eigen-structure test for s in Q: real positive spectrum, p timelike and q
// spacelike eigenvectors, and every timelike-attached eigenvalue above every
// spacelike-attached one. Throws NotInQ / EigenFailure.
AdmissibilityReport check_admissible_q(const CMatrix& s, const Signature& sig,
                                       double tol = kDefaultTol);

// check_admissible_q(dagger(b) b). Throws NotInAN.
AdmissibilityReport check_admissible_an(const CMatrix& b, const Signature& sig,
                                        double tol = kDefaultTol);

// Samples alternate timelike / null; returns the first x whose image s x is
// not timelike.
std::optional<CVector> find_cone_violation(const CMatrix& s, const Signature& sig,
                                           int trials, std::uint64_t seed);

// Monte-Carlo necessary check that s maps the closed timelike cone (minus 0)
// into the open timelike cone.
bool cone_preservation_check(const CMatrix& s, const Signature& sig, int trials,
                             std::uint64_t seed);

// <s x, x> / <x, x> for timelike x.
double pseudo_rayleigh(const CMatrix& s, const CVector& x, const Signature& sig,
                       double tol = kDefaultTol);

// Delta_1 .. Delta_n, Delta_n = det s.
std::vector<Complex> leading_minors(const CMatrix& s);

}  // namespace iwasawa
