#include "iwasawa/iwasawa.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "iwasawa/groups.hpp"

namespace iwasawa {

namespace {

void require_shape(const CMatrix& m, const Signature& sig, const char* what) {
  if (m.rows() != sig.dim() || m.cols() != sig.dim()) {
    throw Error(ErrorCode::DimensionMismatch,
                std::string(what) + ": matrix is " + std::to_string(m.rows()) + "x" +
                    std::to_string(m.cols()) + ", signature dimension " +
                    std::to_string(sig.n()));
  }
  if (!m.all_finite()) {
    throw Error(ErrorCode::NonFinite, std::string(what) + ": non-finite entry");
  }
}

void require_in_g(const CMatrix& g, const Signature& sig, double tol,
                  const char* what) {
  require_shape(g, sig, what);
  if (!is_member(g, GroupTag::G, sig, tol)) {
    throw Error(ErrorCode::NotInG, std::string(what) + ": det g != 1");
  }
}

// Tolerance for SU(p,q) membership of a computed factor; rounding in s grows
// with the conditioning of the input, which ||g||_F^2 bounds.
double g0_tolerance(const CMatrix& g, double tol) {
  const double scale = g.frobenius_norm();
  return tol * std::max(1.0, scale * scale);
}

void finish(DecompPair& pair, const CMatrix& g, const Signature& sig, double tol,
            const char* what) {
  pair.residual = (g - pair.s * pair.b).frobenius_norm();
  const std::size_t n = sig.dim();
  const double drift =
      (dagger(pair.s, sig) * pair.s - CMatrix::identity(n)).frobenius_norm();
  if (drift > g0_tolerance(g, tol)) {
    throw Error(ErrorCode::NotDecomposable,
                std::string(what) + ": unitary factor drifted out of SU(p,q) (" +
                    std::to_string(drift) + ")");
  }
}

Error as_not_decomposable(const Error& e, const char* what) {
  return Error(ErrorCode::NotDecomposable,
               std::string(what) + ": " + e.what(), e.index(), e.boundary());
}

}  // namespace

CMatrix sym(const CMatrix& b, const Signature& sig, double tol) {
  require_shape(b, sig, "sym");
  if (!is_member(b, GroupTag::AN, sig, tol)) {
    throw Error(ErrorCode::NotInAN, "sym: matrix is not in AN");
  }
  return dagger(b, sig) * b;
}

DecompPair decompose_gs(const CMatrix& g, const Signature& sig, double tol) {
  require_in_g(g, sig, tol, "decompose_gs");
  const std::size_t n = sig.dim();
  DecompPair pair;
  pair.s = CMatrix(n, n);
  pair.b = CMatrix(n, n);
  pair.a.resize(n);
  pair.column_norm_sq.resize(n);

  std::vector<CVector> basis;
  basis.reserve(n);
  for (std::size_t k = 0; k < n; ++k) {
    CVector w = g.column(k);
    // modified Gram-Schmidt, two passes; m_{lk} = sign_l <v_k, u_l>
    for (int pass = 0; pass < 2; ++pass) {
      for (std::size_t l = 0; l < k; ++l) {
        const Complex m = sig.sign(l) * pairing(w, basis[l], sig);
        w -= m * basis[l];
        pair.b(l, k) += m;
      }
    }
    const double nsq = norm_sq(w, sig);
    const double len2 = w.norm() * w.norm();
    pair.column_norm_sq[k] = nsq;
    const int column = static_cast<int>(k + 1);
    if (std::abs(nsq) <= tol * len2) {
      throw Error(ErrorCode::NotDecomposable,
                  "decompose_gs: residual of column " + std::to_string(column) +
                      " is null to tolerance",
                  column, true);
    }
    if ((nsq > 0) != (sig.sign(k) > 0)) {
      throw Error(ErrorCode::NotDecomposable,
                  "decompose_gs: residual of column " + std::to_string(column) +
                      " is " + (nsq > 0 ? "timelike" : "spacelike") +
                      ", wrong causal type",
                  column, false);
    }
    const double r = std::sqrt(std::abs(nsq));
    w *= 1.0 / r;
    pair.s.set_column(k, w);
    pair.b(k, k) = r;
    pair.a[k] = r;
    basis.push_back(std::move(w));
  }
  pair.n_factor = CMatrix::identity(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) pair.n_factor(i, j) = pair.b(i, j) / pair.a[i];
  finish(pair, g, sig, tol, "decompose_gs");
  return pair;
}

DecompPair decompose_gauss(const CMatrix& g, const Signature& sig, double tol) {
  require_in_g(g, sig, tol, "decompose_gauss");
  const std::size_t n = sig.dim();
  const CMatrix j = sig.form();
  // J dagger(g) g = g^* J g
  CMatrix jh = g.adjoint() * (j * g);
  jh = 0.5 * (jh + jh.adjoint());

  const LdlFactors f = signed_ldl(jh, tol);
  DecompPair pair;
  pair.a.resize(n);
  for (std::size_t k = 0; k < n; ++k) {
    if ((f.d[k] > 0) != (sig.sign(k) > 0)) {
      throw Error(ErrorCode::WrongInertia,
                  "decompose_gauss: pivot " + std::to_string(k + 1) + " is " +
                      (f.d[k] > 0 ? "positive" : "negative") +
                      ", wrong sign for the signature",
                  static_cast<int>(k + 1));
    }
    pair.a[k] = std::sqrt(std::abs(f.d[k]));
  }
  pair.n_factor = f.lower.adjoint();
  pair.b = CMatrix(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = r; c < n; ++c) pair.b(r, c) = pair.a[r] * pair.n_factor(r, c);
  pair.s = g * solve_upper_triangular(pair.b, CMatrix::identity(n));
  finish(pair, g, sig, tol, "decompose_gauss");
  return pair;
}

DressResult dress(const CMatrix& b, const CMatrix& g, const Signature& sig,
                  double tol) {
  require_shape(b, sig, "dress");
  require_shape(g, sig, "dress");
  if (!is_member(b, GroupTag::AN, sig, tol)) {
    throw Error(ErrorCode::NotInAN, "dress: b is not in AN");
  }
  if (!is_member(g, GroupTag::G0, sig, g0_tolerance(g, tol))) {
    throw Error(ErrorCode::NotInG0, "dress: g is not in SU(p,q)");
  }
  const CMatrix bg = b * g;
  DecompPair pair;
  try {
    pair = decompose_gauss(bg, sig, tol);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::NotInG) throw;
    throw as_not_decomposable(e, "dress");
  }
  return DressResult{std::move(pair.s), std::move(pair.b), pair.residual};
}

CMatrix q_log(const CMatrix& s, const Signature& sig, double tol) {
  require_shape(s, sig, "q_log");
  const AdmissibilityReport report = check_admissible_q(s, sig, tol);
  if (!report.admissible) {
    throw Error(ErrorCode::NotAdmissible, "q_log: " + report.reason);
  }
  const EigenResult e = eig(s);
  const std::size_t n = sig.dim();
  std::vector<Complex> logs(n);
  for (std::size_t i = 0; i < n; ++i) logs[i] = std::log(e.values[i].real());
  CMatrix x = e.vectors * CMatrix::diagonal(std::span<const Complex>(logs)) *
              inverse(e.vectors);
  x = 0.5 * (x + dagger(x, sig));
  const Complex shift = x.trace() / static_cast<double>(n);
  for (std::size_t i = 0; i < n; ++i) x(i, i) -= shift;
  return x;
}

AdmissibleFactorization decompose_g_admissible(const CMatrix& g,
                                               const Signature& sig, double tol) {
  DecompPair pair;
  try {
    pair = decompose_gauss(g, sig, tol);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::NotInG) throw;
    throw as_not_decomposable(e, "decompose_g_admissible");
  }
  AdmissibleFactorization out;
  out.report = check_admissible_an(pair.b, sig, tol);
  if (!out.report.admissible) {
    throw Error(ErrorCode::NotAdmissible,
                "decompose_g_admissible: b factor is not admissible (" +
                    out.report.reason + ")");
  }
  const EigenResult e = eig(dagger(g, sig) * g);
  for (const auto& v : e.values) out.singular_spectrum.push_back(std::sqrt(v.real()));
  std::sort(out.singular_spectrum.begin(), out.singular_spectrum.end(), std::greater<>());
  out.h = std::move(pair.s);
  out.b = std::move(pair.b);
  return out;
}

}  // namespace iwasawa
