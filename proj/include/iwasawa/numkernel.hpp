#pragma once

// Dense complex linear algebra kernel: the matrix/vector value types plus the
// handful of factorizations the decomposition code is built on. Everything
// here is a pure function of its arguments.

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "iwasawa/error.hpp"

namespace iwasawa {

using Complex = std::complex<double>;

inline constexpr double kDefaultTolEig = 1e-10;
inline constexpr double kDefaultTol = 1e-9;
inline constexpr std::size_t kEigSizeCap = 32;

class CVector {
 public:
  CVector() = default;
  explicit CVector(std::size_t n) : data_(n) {}
  CVector(std::initializer_list<Complex> values) : data_(values) {}
  explicit CVector(std::vector<Complex> values) : data_(std::move(values)) {}

  std::size_t size() const noexcept { return data_.size(); }
  Complex& operator[](std::size_t i) { return data_[i]; }
  const Complex& operator[](std::size_t i) const { return data_[i]; }

  auto begin() noexcept { return data_.begin(); }
  auto end() noexcept { return data_.end(); }
  auto begin() const noexcept { return data_.begin(); }
  auto end() const noexcept { return data_.end(); }

  std::span<const Complex> values() const noexcept { return data_; }

  // Euclidean length.
  double norm() const;
  bool all_finite() const;

  CVector& operator+=(const CVector& other);
  CVector& operator-=(const CVector& other);
  CVector& operator*=(Complex factor);

  friend bool operator==(const CVector&, const CVector&) = default;

 private:
  std::vector<Complex> data_;
};

CVector operator+(CVector lhs, const CVector& rhs);
CVector operator-(CVector lhs, const CVector& rhs);
CVector operator*(Complex factor, CVector v);

// Row-major dense complex matrix.
class CMatrix {
 public:
  CMatrix() = default;
  CMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}
  CMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

  static CMatrix identity(std::size_t n);
  static CMatrix zeros(std::size_t rows, std::size_t cols) {
    return CMatrix(rows, cols);
  }
  static CMatrix diagonal(std::span<const Complex> entries);
  static CMatrix diagonal(std::span<const double> entries);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  Complex& operator()(std::size_t i, std::size_t j) {
    return data_[i * cols_ + j];
  }
  const Complex& operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  std::span<const Complex> values() const noexcept { return data_; }

  CVector column(std::size_t j) const;
  void set_column(std::size_t j, const CVector& v);
  // Top-left k x k block.
  CMatrix leading_block(std::size_t k) const;

  // Conjugate transpose.
  CMatrix adjoint() const;
  double frobenius_norm() const;
  Complex trace() const;
  bool all_finite() const;

  CMatrix& operator+=(const CMatrix& other);
  CMatrix& operator-=(const CMatrix& other);
  CMatrix& operator*=(Complex factor);

  friend bool operator==(const CMatrix&, const CMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Complex> data_;
};

CMatrix operator+(CMatrix lhs, const CMatrix& rhs);
CMatrix operator-(CMatrix lhs, const CMatrix& rhs);
CMatrix operator*(Complex factor, CMatrix m);
CMatrix operator*(const CMatrix& a, const CMatrix& b);
CVector operator*(const CMatrix& a, const CVector& x);

CMatrix mat_mul(const CMatrix& a, const CMatrix& b);

// Scaling and squaring around a truncated Taylor series.
CMatrix mat_exp(const CMatrix& x);

// Determinant by LU with partial pivoting.
Complex determinant(const CMatrix& m);

// General inverse by LU with partial pivoting; throws SingularDiagonal when a
// pivot vanishes.
CMatrix inverse(const CMatrix& m);

struct EigenResult {
  std::vector<Complex> values;
  CMatrix vectors;
  double max_residual = 0.0;
  // Set when back-substitution met a (numerically) repeated eigenvalue with a
  // non-trivial coupling, i.e. the returned vectors do not span the space.
  bool defective = false;
};

// Hessenberg reduction followed by shifted complex QR. Eigenvalues come back
// sorted by descending real part, ties by descending imaginary part; vectors
// are unit Euclidean length.
EigenResult eig(const CMatrix& m, double tol_eig = kDefaultTolEig);

struct LdlFactors {
  CMatrix lower;           // unit lower triangular
  std::vector<double> d;   // real pivots
};

// H = L diag(d) L^* without pivoting. Fails with SingularMinor(k) instead of
// pivoting when the k-th pivot drops below tol * ||H||_F.
LdlFactors signed_ldl(const CMatrix& h, double tol = kDefaultTol);

// Back-substitution for U X = B. Only the upper triangle of U is read.
CMatrix solve_upper_triangular(const CMatrix& u, const CMatrix& b);

}  // namespace iwasawa
