#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <numbers>

#include "../support.hpp"
#include "iwasawa/admissible.hpp"
#include "iwasawa/error.hpp"
#include "iwasawa/groups.hpp"
#include "iwasawa/iwasawa.hpp"
#include "iwasawa/random.hpp"
#include "iwasawa/su11_oracle.hpp"

using namespace iwasawa;
using namespace testing_support;

namespace {

const Signature k11(1, 1);
const double kRoot2 = std::numbers::sqrt2;
const double kRoot3 = std::sqrt(3.0);

// Random SL(2,C) element with |a| > |c|.
su11::Sl2Element random_decomposable(Rng& rng) {
  const Complex a = std::polar(std::exp(rng.uniform(-1, 1)), rng.uniform(0, 2 * std::numbers::pi));
  const Complex c =
      std::polar(rng.uniform(0, 0.95) * std::abs(a), rng.uniform(0, 2 * std::numbers::pi));
  const Complex b = rng.complex_normal();
  // ad - bc = 1 fixes d.
  return {a, b, c, (1.0 + b * c) / a};
}

}  // namespace

TEST_CASE("decompose closed forms") {
  const su11::Decomposition id = su11::decompose({1, 0, 0, 1});
  CHECK(distance(id.k.matrix(), CMatrix::identity(2)) == 0.0);
  CHECK(id.b.r == 1.0);
  CHECK(id.b.n == Complex{});

  const su11::Decomposition d = su11::decompose({2, 1, 1, 1});
  CHECK(distance(d.k.matrix(), (1 / kRoot3) * CMatrix{{2, 1}, {1, 2}}) <= 1e-15);
  CHECK(d.b.r == doctest::Approx(kRoot3));
  CHECK(std::abs(d.b.n - 1 / kRoot3) <= 1e-15);
  CHECK(distance(naive_mul(d.k.matrix(), d.b.matrix()), CMatrix{{2, 1}, {1, 1}}) <= 1e-15);
  CHECK(is_member(d.k.matrix(), GroupTag::G0, k11));

  Error caught(ErrorCode::InvalidArgument, "");
  try {
    su11::decompose({1, 0, 1, 1});
  } catch (const Error& e) {
    caught = e;
  }
  CHECK(caught.code() == ErrorCode::NotDecomposable);
}

TEST_CASE("from_matrix checks the determinant") {
  const auto g = su11::Sl2Element::from_matrix(CMatrix{{2, 1}, {1, 1}});
  CHECK(g.a == Complex(2));
  CHECK(g.d == Complex(1));
  CHECK_THROWS_AS(su11::Sl2Element::from_matrix(CMatrix{{2, 0}, {0, 2}}), Error);
}

TEST_CASE("the rearranged upper entry equals the printed formula") {
  Rng rng(20);
  for (int t = 0; t < 20; ++t) {
    const su11::Sl2Element g = random_decomposable(rng);
    const Complex printed = su11::printed_upper_entry(g);
    CHECK(std::abs(su11::decompose(g).b.n - printed) <= 1e-12 * (1 + std::abs(printed)));
  }
}

TEST_CASE("closed form reproduces g and agrees with both general algorithms") {
  Rng rng(21);
  for (int t = 0; t < 2000; ++t) {
    const su11::Sl2Element g = random_decomposable(rng);
    const CMatrix gm = g.matrix();
    const su11::Decomposition d = su11::decompose(g);
    const double scale = gm.frobenius_norm();
    CHECK(distance(naive_mul(d.k.matrix(), d.b.matrix()), gm) <= 1e-12 * scale);
    for (const DecompPair& general : {decompose_gs(gm, k11), decompose_gauss(gm, k11)}) {
      CHECK(distance(general.s, d.k.matrix()) <= 1e-10 * scale);
      CHECK(distance(general.b, d.b.matrix()) <= 1e-10 * scale);
    }
  }
}

TEST_CASE("Q predicate closed forms") {
  CHECK(su11::q_admissible({2, 0.25, 1 / kRoot2}));
  CHECK_FALSE(su11::q_admissible({1, 1, 0}));
  CHECK(su11::q_admissible({3, 1.0 / 3, 0}));
  const su11::QElement s{2, 0.25, 1 / kRoot2};
  CHECK(distance(s.matrix(), CMatrix{{2, 1 / kRoot2}, {-1 / kRoot2, 0.25}}) == 0.0);
}

TEST_CASE("AN predicate closed forms") {
  CHECK(su11::an_admissible({2, 0}));
  CHECK_FALSE(su11::an_admissible({1, 0}));
  CHECK(su11::an_admissible({kRoot2, 0.25}));
  CHECK_FALSE(su11::an_admissible({kRoot2, 1}));
  CHECK(distance(su11::ANElement{2, 0}.matrix(), real_diag({2, 0.5})) == 0.0);
}

TEST_CASE("closed-form predicates agree with the general admissibility checks") {
  Rng rng(22);
  for (int t = 0; t < 2000; ++t) {
    // AN side.
    const su11::ANElement b{std::exp(rng.uniform(-1, 1.5)), rng.uniform(0, 2) * rng.complex_normal()};
    const double an_value = b.r * b.r + 1 / (b.r * b.r) - std::norm(b.n) - 2.0;
    if (std::abs(an_value) > 1e-8 && std::abs(b.r - 1) > 1e-8) {
      CHECK(su11::an_admissible(b) == check_admissible_an(b.matrix(), k11).admissible);
    }
    // Q side: t1 t2 + |m|^2 = 1.
    const double t1 = std::exp(rng.uniform(-1.5, 1.5));
    const double m_abs = rng.uniform(0, 2);
    const Complex m = std::polar(m_abs, rng.uniform(0, 2 * std::numbers::pi));
    const su11::QElement s{t1, (1 - m_abs * m_abs) / t1, m};
    if (std::abs(s.t1 + s.t2 - 2) > 1e-8 && std::abs(s.t1 - 1) > 1e-8) {
      CHECK(su11::q_admissible(s) == check_admissible_q(s.matrix(), k11).admissible);
    }
  }
}

TEST_CASE("products of admissible 2x2 AN elements are admissible") {
  Rng rng(23);
  int tested = 0;
  while (tested < 500) {
    const su11::ANElement b1{std::exp(rng.uniform(0, 1.5)), rng.uniform(0, 1) * rng.complex_normal()};
    const su11::ANElement b2{std::exp(rng.uniform(0, 1.5)), rng.uniform(0, 1) * rng.complex_normal()};
    if (!su11::an_admissible(b1) || !su11::an_admissible(b2)) continue;
    ++tested;
    const CMatrix prod = b1.matrix() * b2.matrix();
    const su11::ANElement b{prod(0, 0).real(), prod(0, 1)};
    CHECK(su11::an_admissible(b));
    CHECK(check_admissible_an(prod, k11).admissible);
  }
}
