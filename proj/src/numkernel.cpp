#include "iwasawa/numkernel.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

namespace iwasawa {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

void require_square(const CMatrix& m, const char* what) {
  if (!m.is_square()) {
    throw Error(ErrorCode::DimensionMismatch,
                std::string(what) + ": matrix is " + std::to_string(m.rows()) +
                    "x" + std::to_string(m.cols()) + ", expected square");
  }
}

void require_finite(const CMatrix& m, const char* what) {
  if (!m.all_finite()) {
    throw Error(ErrorCode::NonFinite,
                std::string(what) + ": non-finite matrix entry");
  }
}

bool finite(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

struct LuFactors {
  CMatrix lu;
  std::vector<std::size_t> perm;
  int sign = 1;
  std::size_t zero_pivot = 0;  // 1-based, 0 when all pivots nonzero
};

LuFactors lu_decompose(const CMatrix& m) {
  const std::size_t n = m.rows();
  LuFactors f{m, std::vector<std::size_t>(n), 1, 0};
  std::iota(f.perm.begin(), f.perm.end(), std::size_t{0});
  CMatrix& a = f.lu;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    double best = std::abs(a(k, k));
    for (std::size_t i = k + 1; i < n; ++i) {
      if (std::abs(a(i, k)) > best) {
        best = std::abs(a(i, k));
        piv = i;
      }
    }
    if (best == 0.0) {
      if (f.zero_pivot == 0) f.zero_pivot = k + 1;
      continue;
    }
    if (piv != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(piv, j));
      std::swap(f.perm[k], f.perm[piv]);
      f.sign = -f.sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      const Complex factor = a(i, k) / a(k, k);
      a(i, k) = factor;
      for (std::size_t j = k + 1; j < n; ++j) a(i, j) -= factor * a(k, j);
    }
  }
  return f;
}

// Rotation G = [[c, s], [-conj(s), c]] with G [a; b] = [r; 0].
struct Givens {
  double c;
  Complex s;
};

Givens make_givens(Complex a, Complex b) {
  if (b == Complex{}) return {1.0, Complex{}};
  if (a == Complex{}) return {0.0, std::conj(b) / std::abs(b)};
  const double aa = std::abs(a);
  const double r = std::hypot(aa, std::abs(b));
  return {aa / r, (a / aa) * std::conj(b) / r};
}

// rows k, k+1 <- G * rows, over columns [from, to)
void rotate_rows(CMatrix& h, const Givens& g, std::size_t k, std::size_t from,
                 std::size_t to) {
  for (std::size_t j = from; j < to; ++j) {
    const Complex x = h(k, j);
    const Complex y = h(k + 1, j);
    h(k, j) = g.c * x + g.s * y;
    h(k + 1, j) = -std::conj(g.s) * x + g.c * y;
  }
}

// cols k, k+1 <- cols * G^*, over rows [from, to)
void rotate_cols(CMatrix& h, const Givens& g, std::size_t k, std::size_t from,
                 std::size_t to) {
  for (std::size_t i = from; i < to; ++i) {
    const Complex x = h(i, k);
    const Complex y = h(i, k + 1);
    h(i, k) = g.c * x + std::conj(g.s) * y;
    h(i, k + 1) = -g.s * x + g.c * y;
  }
}

// Householder reduction to upper Hessenberg form, accumulating into z.
void reduce_hessenberg(CMatrix& h, CMatrix& z) {
  const std::size_t n = h.rows();
  if (n < 3) return;
  std::vector<Complex> v;
  for (std::size_t k = 0; k + 2 < n; ++k) {
    const std::size_t len = n - k - 1;
    v.assign(len, Complex{});
    double alpha = 0.0;
    for (std::size_t i = 0; i < len; ++i) {
      v[i] = h(k + 1 + i, k);
      alpha = std::hypot(alpha, std::abs(v[i]));
    }
    if (alpha == 0.0) continue;
    const Complex phase =
        v[0] == Complex{} ? Complex{1.0} : v[0] / std::abs(v[0]);
    v[0] += phase * alpha;
    double vnorm2 = 0.0;
    for (const auto& x : v) vnorm2 += std::norm(x);
    if (vnorm2 == 0.0) continue;
    const double beta = 2.0 / vnorm2;

    for (std::size_t j = 0; j < n; ++j) {
      Complex s{};
      for (std::size_t i = 0; i < len; ++i) s += std::conj(v[i]) * h(k + 1 + i, j);
      s *= beta;
      for (std::size_t i = 0; i < len; ++i) h(k + 1 + i, j) -= v[i] * s;
    }
    for (std::size_t i = 0; i < n; ++i) {
      Complex s{};
      for (std::size_t j = 0; j < len; ++j) s += h(i, k + 1 + j) * v[j];
      s *= beta;
      for (std::size_t j = 0; j < len; ++j) h(i, k + 1 + j) -= s * std::conj(v[j]);
    }
    for (std::size_t i = 0; i < n; ++i) {
      Complex s{};
      for (std::size_t j = 0; j < len; ++j) s += z(i, k + 1 + j) * v[j];
      s *= beta;
      for (std::size_t j = 0; j < len; ++j) z(i, k + 1 + j) -= s * std::conj(v[j]);
    }
    for (std::size_t i = k + 2; i < n; ++i) h(i, k) = Complex{};
  }
}

Complex wilkinson_shift(const CMatrix& h, std::size_t hi) {
  const Complex a = h(hi - 1, hi - 1);
  const Complex b = h(hi - 1, hi);
  const Complex c = h(hi, hi - 1);
  const Complex d = h(hi, hi);
  const Complex half = 0.5 * (a - d);
  const Complex disc = std::sqrt(half * half + b * c);
  const Complex mid = 0.5 * (a + d);
  const Complex r1 = mid + disc;
  const Complex r2 = mid - disc;
  return std::abs(r1 - d) < std::abs(r2 - d) ? r1 : r2;
}

// One explicitly shifted QR sweep on the active window [lo, hi].
void qr_sweep(CMatrix& h, CMatrix& z, std::size_t lo, std::size_t hi,
              Complex shift) {
  const std::size_t n = h.rows();
  for (std::size_t i = lo; i <= hi; ++i) h(i, i) -= shift;
  std::vector<Givens> rots;
  rots.reserve(hi - lo);
  for (std::size_t k = lo; k < hi; ++k) {
    const Givens g = make_givens(h(k, k), h(k + 1, k));
    rotate_rows(h, g, k, k, n);
    h(k + 1, k) = Complex{};
    rots.push_back(g);
  }
  for (std::size_t k = lo; k < hi; ++k) {
    const Givens& g = rots[k - lo];
    rotate_cols(h, g, k, 0, std::min(k + 2, hi) + 1);
    rotate_cols(z, g, k, 0, n);
  }
  for (std::size_t i = lo; i <= hi; ++i) h(i, i) += shift;
}

}  // namespace

double CVector::norm() const {
  double acc = 0.0;
  for (const auto& x : data_) acc += std::norm(x);
  return std::sqrt(acc);
}

bool CVector::all_finite() const {
  return std::all_of(data_.begin(), data_.end(), finite);
}

CVector& CVector::operator+=(const CVector& other) {
  if (other.size() != size()) {
    throw Error(ErrorCode::DimensionMismatch, "vector sum: length mismatch");
  }
  for (std::size_t i = 0; i < size(); ++i) data_[i] += other.data_[i];
  return *this;
}

CVector& CVector::operator-=(const CVector& other) {
  if (other.size() != size()) {
    throw Error(ErrorCode::DimensionMismatch, "vector difference: length mismatch");
  }
  for (std::size_t i = 0; i < size(); ++i) data_[i] -= other.data_[i];
  return *this;
}

CVector& CVector::operator*=(Complex factor) {
  for (auto& x : data_) x *= factor;
  return *this;
}

CVector operator+(CVector lhs, const CVector& rhs) { return lhs += rhs; }
CVector operator-(CVector lhs, const CVector& rhs) { return lhs -= rhs; }
CVector operator*(Complex factor, CVector v) { return v *= factor; }

CMatrix::CMatrix(std::initializer_list<std::initializer_list<Complex>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
  data_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) {
      throw Error(ErrorCode::DimensionMismatch, "ragged matrix literal");
    }
    data_.insert(data_.end(), row.begin(), row.end());
  }
}

CMatrix CMatrix::identity(std::size_t n) {
  CMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

CMatrix CMatrix::diagonal(std::span<const Complex> entries) {
  CMatrix m(entries.size(), entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) m(i, i) = entries[i];
  return m;
}

CMatrix CMatrix::diagonal(std::span<const double> entries) {
  CMatrix m(entries.size(), entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) m(i, i) = entries[i];
  return m;
}

CVector CMatrix::column(std::size_t j) const {
  CVector v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
  return v;
}

void CMatrix::set_column(std::size_t j, const CVector& v) {
  if (v.size() != rows_) {
    throw Error(ErrorCode::DimensionMismatch, "set_column: length mismatch");
  }
  for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = v[i];
}

CMatrix CMatrix::leading_block(std::size_t k) const {
  CMatrix m(k, k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) m(i, j) = (*this)(i, j);
  return m;
}

CMatrix CMatrix::adjoint() const {
  CMatrix m(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) m(j, i) = std::conj((*this)(i, j));
  return m;
}

double CMatrix::frobenius_norm() const {
  double acc = 0.0;
  for (const auto& x : data_) acc += std::norm(x);
  return std::sqrt(acc);
}

Complex CMatrix::trace() const {
  Complex t{};
  for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
  return t;
}

bool CMatrix::all_finite() const {
  return std::all_of(data_.begin(), data_.end(), finite);
}

CMatrix& CMatrix::operator+=(const CMatrix& other) {
  if (other.rows_ != rows_ || other.cols_ != cols_) {
    throw Error(ErrorCode::DimensionMismatch, "matrix sum: shape mismatch");
  }
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += other.data_[i];
  return *this;
}

CMatrix& CMatrix::operator-=(const CMatrix& other) {
  if (other.rows_ != rows_ || other.cols_ != cols_) {
    throw Error(ErrorCode::DimensionMismatch, "matrix difference: shape mismatch");
  }
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= other.data_[i];
  return *this;
}

CMatrix& CMatrix::operator*=(Complex factor) {
  for (auto& x : data_) x *= factor;
  return *this;
}

CMatrix operator+(CMatrix lhs, const CMatrix& rhs) { return lhs += rhs; }
CMatrix operator-(CMatrix lhs, const CMatrix& rhs) { return lhs -= rhs; }
CMatrix operator*(Complex factor, CMatrix m) { return m *= factor; }
CMatrix operator*(const CMatrix& a, const CMatrix& b) { return mat_mul(a, b); }

CVector operator*(const CMatrix& a, const CVector& x) {
  if (a.cols() != x.size()) {
    throw Error(ErrorCode::DimensionMismatch, "matrix-vector product: shape mismatch");
  }
  CVector y(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    Complex acc{};
    for (std::size_t j = 0; j < a.cols(); ++j) acc += a(i, j) * x[j];
    y[i] = acc;
  }
  return y;
}

CMatrix mat_mul(const CMatrix& a, const CMatrix& b) {
  if (a.cols() != b.rows()) {
    throw Error(ErrorCode::DimensionMismatch,
                "mat_mul: " + std::to_string(a.rows()) + "x" +
                    std::to_string(a.cols()) + " times " +
                    std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
  }
  CMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Complex aik = a(i, k);
      if (aik == Complex{}) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += aik * b(k, j);
    }
  }
  return c;
}

CMatrix mat_exp(const CMatrix& x) {
  require_square(x, "mat_exp");
  require_finite(x, "mat_exp");
  const std::size_t n = x.rows();
  const double norm = x.frobenius_norm();
  int squarings = 0;
  if (norm > 0.25) squarings = static_cast<int>(std::ceil(std::log2(norm / 0.25)));
  const CMatrix y = std::ldexp(1.0, -squarings) * x;

  CMatrix result = CMatrix::identity(n);
  CMatrix term = CMatrix::identity(n);
  for (int k = 1; k <= 40; ++k) {
    term = (1.0 / k) * (term * y);
    result += term;
    if (term.frobenius_norm() <= 1e-18 * result.frobenius_norm()) break;
  }
  for (int i = 0; i < squarings; ++i) result = result * result;
  return result;
}

Complex determinant(const CMatrix& m) {
  require_square(m, "determinant");
  const LuFactors f = lu_decompose(m);
  if (f.zero_pivot != 0) return Complex{};
  Complex det = static_cast<double>(f.sign);
  for (std::size_t i = 0; i < m.rows(); ++i) det *= f.lu(i, i);
  return det;
}

CMatrix inverse(const CMatrix& m) {
  require_square(m, "inverse");
  const std::size_t n = m.rows();
  const LuFactors f = lu_decompose(m);
  if (f.zero_pivot != 0) {
    throw Error(ErrorCode::SingularDiagonal, "inverse: singular matrix",
                static_cast<int>(f.zero_pivot));
  }
  CMatrix inv(n, n);
  for (std::size_t col = 0; col < n; ++col) {
    std::vector<Complex> x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = f.perm[i] == col ? 1.0 : 0.0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < i; ++k) x[i] -= f.lu(i, k) * x[k];
    for (std::size_t i = n; i-- > 0;) {
      for (std::size_t k = i + 1; k < n; ++k) x[i] -= f.lu(i, k) * x[k];
      x[i] /= f.lu(i, i);
    }
    for (std::size_t i = 0; i < n; ++i) inv(i, col) = x[i];
  }
  return inv;
}

EigenResult eig(const CMatrix& m, double tol_eig) {
  require_square(m, "eig");
  require_finite(m, "eig");
  const std::size_t n = m.rows();
  if (n == 0 || n > kEigSizeCap) {
    throw Error(ErrorCode::InvalidArgument,
                "eig: size " + std::to_string(n) + " outside [1, " +
                    std::to_string(kEigSizeCap) + "]");
  }

  CMatrix t = m;
  CMatrix z = CMatrix::identity(n);
  reduce_hessenberg(t, z);

  const double mnorm = m.frobenius_norm();
  const std::size_t budget = 100 * n;
  std::size_t sweeps = 0;
  std::size_t since_deflation = 0;
  std::size_t hi = n - 1;
  while (hi > 0) {
    std::size_t lo = hi;
    while (lo > 0) {
      double scale = std::abs(t(lo - 1, lo - 1)) + std::abs(t(lo, lo));
      if (scale == 0.0) scale = mnorm;
      if (std::abs(t(lo, lo - 1)) <= kEps * scale) {
        t(lo, lo - 1) = Complex{};
        break;
      }
      --lo;
    }
    if (lo == hi) {
      --hi;
      since_deflation = 0;
      continue;
    }
    if (sweeps >= budget) {
      throw Error(ErrorCode::NoConvergence,
                  "eig: QR iteration budget of " + std::to_string(budget) +
                      " sweeps exhausted");
    }
    ++sweeps;
    ++since_deflation;
    Complex shift;
    if (since_deflation % 10 == 0) {
      // exceptional shift to break cycles
      const double kick = std::abs(t(hi, hi - 1)) +
                          (hi >= 2 ? std::abs(t(hi - 1, hi - 2)) : 0.0);
      shift = t(hi, hi) + Complex(0.75 * kick, 0.4375 * kick);
    } else {
      shift = wilkinson_shift(t, hi);
    }
    qr_sweep(t, z, lo, hi, shift);
  }

  // Eigenvectors of the triangular factor, then back to the original basis.
  const double tnorm = t.frobenius_norm();
  const double smin = std::max(kEps * tnorm, std::numeric_limits<double>::min());
  EigenResult result;
  result.values.resize(n);
  CMatrix vecs(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    const Complex lambda = t(k, k);
    result.values[k] = lambda;
    std::vector<Complex> x(n);
    x[k] = 1.0;
    double xmax = 1.0;
    for (std::size_t j = k; j-- > 0;) {
      Complex num{};
      for (std::size_t l = j + 1; l <= k; ++l) num += t(j, l) * x[l];
      Complex den = t(j, j) - lambda;
      if (std::abs(den) < smin) {
        if (std::abs(num) <= 100.0 * n * kEps * tnorm * xmax) {
          x[j] = Complex{};
          continue;
        }
        den = smin;
        result.defective = true;
      }
      x[j] = -num / den;
      xmax = std::max(xmax, std::abs(x[j]));
      if (xmax > 1e100) {
        for (auto& v : x) v /= xmax;
        xmax = 1.0;
      }
    }
    CVector v = z * CVector(std::move(x));
    const double len = v.norm();
    v *= 1.0 / len;
    vecs.set_column(k, v);
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    const Complex va = result.values[a];
    const Complex vb = result.values[b];
    if (va.real() != vb.real()) return va.real() > vb.real();
    return va.imag() > vb.imag();
  });
  std::vector<Complex> sorted(n);
  result.vectors = CMatrix(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    sorted[k] = result.values[order[k]];
    result.vectors.set_column(k, vecs.column(order[k]));
  }
  result.values = std::move(sorted);

  for (std::size_t k = 0; k < n; ++k) {
    const CVector v = result.vectors.column(k);
    const CVector r = m * v - result.values[k] * v;
    result.max_residual = std::max(result.max_residual, r.norm());
  }
  if (result.max_residual > tol_eig * std::max(mnorm, 1.0) && !result.defective) {
    throw Error(ErrorCode::NoConvergence,
                "eig: residual " + std::to_string(result.max_residual) +
                    " exceeds tolerance");
  }
  return result;
}

LdlFactors signed_ldl(const CMatrix& h, double tol) {
  require_square(h, "signed_ldl");
  require_finite(h, "signed_ldl");
  const std::size_t n = h.rows();
  const double hnorm = h.frobenius_norm();
  if ((h - h.adjoint()).frobenius_norm() > tol * hnorm) {
    throw Error(ErrorCode::NotHermitian, "signed_ldl: input is not Hermitian");
  }
  LdlFactors f{CMatrix::identity(n), std::vector<double>(n)};
  for (std::size_t j = 0; j < n; ++j) {
    double dj = h(j, j).real();
    for (std::size_t k = 0; k < j; ++k) dj -= std::norm(f.lower(j, k)) * f.d[k];
    if (std::abs(dj) <= tol * hnorm) {
      throw Error(ErrorCode::SingularMinor,
                  "signed_ldl: leading principal minor " + std::to_string(j + 1) +
                      " vanishes to tolerance",
                  static_cast<int>(j + 1));
    }
    f.d[j] = dj;
    for (std::size_t i = j + 1; i < n; ++i) {
      Complex acc = h(i, j);
      for (std::size_t k = 0; k < j; ++k)
        acc -= f.lower(i, k) * std::conj(f.lower(j, k)) * f.d[k];
      f.lower(i, j) = acc / dj;
    }
  }
  return f;
}

CMatrix solve_upper_triangular(const CMatrix& u, const CMatrix& b) {
  require_square(u, "solve_upper_triangular");
  if (u.rows() != b.rows()) {
    throw Error(ErrorCode::DimensionMismatch,
                "solve_upper_triangular: right-hand side has wrong row count");
  }
  const std::size_t n = u.rows();
  for (std::size_t k = 0; k < n; ++k) {
    if (u(k, k) == Complex{}) {
      throw Error(ErrorCode::SingularDiagonal,
                  "solve_upper_triangular: zero diagonal entry " +
                      std::to_string(k + 1),
                  static_cast<int>(k + 1));
    }
  }
  CMatrix x = b;
  for (std::size_t col = 0; col < b.cols(); ++col) {
    for (std::size_t i = n; i-- > 0;) {
      Complex acc = x(i, col);
      for (std::size_t k = i + 1; k < n; ++k) acc -= u(i, k) * x(k, col);
      x(i, col) = acc / u(i, i);
    }
  }
  return x;
}

}  // namespace iwasawa
