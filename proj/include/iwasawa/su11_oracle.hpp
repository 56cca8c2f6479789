#pragma once

// Closed-form p = q = 1 formulas, kept independent of the general algorithms
// so they can serve as a differential-testing oracle.

#include "iwasawa/numkernel.hpp"

namespace iwasawa::su11 {

// [[a, b], [c, d]] with ad - bc = 1 (to 1e-12).
struct Sl2Element {
  Complex a, b, c, d;

  static Sl2Element from_matrix(const CMatrix& m);
  CMatrix matrix() const;
};

// [[t1, m], [-conj(m), t2]] with t1 t2 + |m|^2 = 1
struct QElement {
  double t1;
  double t2;
  Complex m;

  CMatrix matrix() const;
};

// [[r, n], [0, 1/r]], r > 0
struct ANElement {
  double r;
  Complex n;

  CMatrix matrix() const;
};

struct Decomposition {
  Sl2Element k;
  ANElement b;
};

// Requires |a| > |c|; throws NotDecomposable otherwise. With
// delta = sqrt(|a|^2 - |c|^2): k = [[a, conj c], [c, conj a]] / delta,
// r = delta, n = (conj(a) b - conj(c) d) / delta.
Decomposition decompose(const Sl2Element& g);

// The upper entry of b in the original printed form (b - conj(c)/delta^2) delta / a.
Complex printed_upper_entry(const Sl2Element& g);

// t1 + t2 > 2 and t1 > 1
bool q_admissible(const QElement& s);

// r > 1 and r^2 + r^-2 - |n|^2 > 2
bool an_admissible(const ANElement& b);

}  // namespace iwasawa::su11
