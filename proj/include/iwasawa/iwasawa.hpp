#pragma once

#include <vector>

#include "iwasawa/admissible.hpp"
#include "iwasawa/indefinite.hpp"
#include "iwasawa/numkernel.hpp"

namespace iwasawa {

// g = s b with s in SU(p,q) and b = diag(a) n_factor in AN.
struct DecompPair {
  CMatrix s;
  CMatrix b;
  std::vector<double> a;
  CMatrix n_factor;
  // ||g - s b||_F
  double residual = 0.0;
  // Signed squared pseudo-norm of each Gram-Schmidt residual before
  // normalization (Gram-Schmidt route only; empty for the Gauss route).
  std::vector<double> column_norm_sq;
};

// b g = g_prime b_prime
struct DressResult {
  CMatrix g_prime;
  CMatrix b_prime;
  double residual = 0.0;
};

struct AdmissibleFactorization {
  CMatrix h;
  CMatrix b;
  // square roots of the spectrum of dagger(g) g, descending
  std::vector<double> singular_spectrum;
  AdmissibilityReport report;
};

// dagger(b) b. Throws NotInAN.
CMatrix sym(const CMatrix& b, const Signature& sig, double tol = kDefaultTol);

// Pseudo-Gram-Schmidt on the columns of g. Column k <= p must leave a
// timelike residual, column k > p a spacelike one; otherwise throws
// NotDecomposable(k), with boundary() set when the residual is null to
// tolerance. Throws NotInG when det g != 1.
DecompPair decompose_gs(const CMatrix& g, const Signature& sig,
                        double tol = kDefaultTol);

// Gauss route: signed LDL of J dagger(g) g = n^* (J a^2) n. Throws
// SingularMinor(k) when the k-th leading minor vanishes, WrongInertia(k) when
// pivot k has the wrong sign for the signature, NotInG when det g != 1.
DecompPair decompose_gauss(const CMatrix& g, const Signature& sig,
                           double tol = kDefaultTol);

// Right dressing b^g. Throws NotInAN / NotInG0 on bad input and
// NotDecomposable when b g has no decomposition.
DressResult dress(const CMatrix& b, const CMatrix& g, const Signature& sig,
                  double tol = kDefaultTol);

// Inverse of exp on admissible elements of Q. Throws NotAdmissible.
CMatrix q_log(const CMatrix& s, const Signature& sig, double tol = kDefaultTol);

// g = h b with h in SU(p,q) and admissible b. Throws NotDecomposable or
// NotAdmissible.
AdmissibleFactorization decompose_g_admissible(const CMatrix& g,
                                               const Signature& sig,
                                               double tol = kDefaultTol);

}  // namespace iwasawa
