#include "iwasawa/su11_oracle.hpp"

#include <cmath>

namespace iwasawa::su11 {

Sl2Element Sl2Element::from_matrix(const CMatrix& m) {
  if (m.rows() != 2 || m.cols() != 2) {
    throw Error(ErrorCode::DimensionMismatch, "su11: expected a 2x2 matrix");
  }
  Sl2Element g{m(0, 0), m(0, 1), m(1, 0), m(1, 1)};
  if (std::abs(g.a * g.d - g.b * g.c - 1.0) > 1e-12) {
    throw Error(ErrorCode::NotInG, "su11: determinant is not 1");
  }
  return g;
}

CMatrix Sl2Element::matrix() const { return CMatrix{{a, b}, {c, d}}; }

CMatrix QElement::matrix() const { return CMatrix{{t1, m}, {-std::conj(m), t2}}; }

CMatrix ANElement::matrix() const { return CMatrix{{r, n}, {0.0, 1.0 / r}}; }

Decomposition decompose(const Sl2Element& g) {
  const double gap = std::norm(g.a) - std::norm(g.c);
  if (!(std::abs(g.a) > std::abs(g.c)) || !(gap > 0.0)) {
    throw Error(ErrorCode::NotDecomposable, "su11: |a| <= |c|", 1);
  }
  const double delta = std::sqrt(gap);
  Decomposition out;
  out.k = Sl2Element{g.a / delta, std::conj(g.c) / delta, g.c / delta,
                     std::conj(g.a) / delta};
  out.b = ANElement{delta, (std::conj(g.a) * g.b - std::conj(g.c) * g.d) / delta};
  return out;
}

Complex printed_upper_entry(const Sl2Element& g) {
  const double delta2 = std::norm(g.a) - std::norm(g.c);
  return (g.b - std::conj(g.c) / delta2) * std::sqrt(delta2) / g.a;
}

bool q_admissible(const QElement& s) { return s.t1 + s.t2 > 2.0 && s.t1 > 1.0; }

bool an_admissible(const ANElement& b) {
  return b.r > 1.0 && b.r * b.r + 1.0 / (b.r * b.r) - std::norm(b.n) > 2.0;
}

}  // namespace iwasawa::su11
