#pragma once

// Independent reference computations used by the tests. Nothing here calls
// the library's own kernels, so agreement is a genuine cross-check.

#include <cmath>
#include <complex>
#include <cstddef>
#include <utility>
#include <vector>

#include "iwasawa/numkernel.hpp"

namespace testing_support {

using iwasawa::CMatrix;
using iwasawa::Complex;

// Determinant by cofactor expansion along the first row.
inline Complex cofactor_det(const std::vector<std::vector<Complex>>& m) {
  const std::size_t n = m.size();
  if (n == 1) return m[0][0];
  Complex total = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<std::vector<Complex>> minor;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<Complex> row;
      for (std::size_t k = 0; k < n; ++k) {
        if (k != j) row.push_back(m[i][k]);
      }
      minor.push_back(std::move(row));
    }
    const double sign = j % 2 == 0 ? 1.0 : -1.0;
    total += sign * m[0][j] * cofactor_det(minor);
  }
  return total;
}

inline Complex cofactor_det(const CMatrix& m, std::size_t k) {
  std::vector<std::vector<Complex>> rows(k, std::vector<Complex>(k));
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) rows[i][j] = m(i, j);
  }
  return cofactor_det(rows);
}

inline Complex cofactor_det(const CMatrix& m) { return cofactor_det(m, m.rows()); }

// Roots of x^2 - t x + d, larger real part first.
inline std::pair<Complex, Complex> quadratic_roots(Complex t, Complex d) {
  const Complex disc = std::sqrt(t * t - 4.0 * d);
  Complex r1 = (t + disc) / 2.0;
  Complex r2 = (t - disc) / 2.0;
  if (r2.real() > r1.real()) std::swap(r1, r2);
  return {r1, r2};
}

// Triple-loop product, written out independently of the library operator.
inline CMatrix naive_mul(const CMatrix& a, const CMatrix& b) {
  CMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < b.cols(); ++j) {
      Complex acc = 0.0;
      for (std::size_t k = 0; k < a.cols(); ++k) acc += a(i, k) * b(k, j);
      c(i, j) = acc;
    }
  }
  return c;
}

// J A* J written entrywise: conj(A_ji) * s_i * s_j.
inline CMatrix naive_dagger(const CMatrix& a, int p) {
  CMatrix r(a.cols(), a.rows());
  for (std::size_t i = 0; i < r.rows(); ++i) {
    for (std::size_t j = 0; j < r.cols(); ++j) {
      const double si = static_cast<int>(i) < p ? 1.0 : -1.0;
      const double sj = static_cast<int>(j) < p ? 1.0 : -1.0;
      r(i, j) = si * sj * std::conj(a(j, i));
    }
  }
  return r;
}

inline double distance(const CMatrix& a, const CMatrix& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) s += std::norm(a(i, j) - b(i, j));
  }
  return std::sqrt(s);
}

inline CMatrix real_diag(std::vector<double> d) {
  CMatrix m(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

}  // namespace testing_support
