#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <numbers>
#include <numeric>

#include "../support.hpp"
#include "iwasawa/error.hpp"
#include "iwasawa/groups.hpp"

using namespace iwasawa;
using namespace testing_support;

namespace {
const Signature k11(1, 1);
constexpr GroupTag kAllTags[] = {GroupTag::G, GroupTag::G0, GroupTag::A,
                                 GroupTag::N, GroupTag::AN, GroupTag::Q};
}  // namespace

TEST_CASE("identity is in every subgroup") {
  for (GroupTag tag : kAllTags) {
    CHECK(is_member(CMatrix::identity(2), tag, k11));
    CHECK(is_member(CMatrix::identity(5), tag, Signature(2, 3)));
  }
}

TEST_CASE("membership closed forms") {
  CHECK(is_member(real_diag({2, 0.5}), GroupTag::A, k11));
  CHECK(is_member(real_diag({2, 0.5}), GroupTag::AN, k11));
  CHECK_FALSE(is_member(real_diag({2, 0.5}), GroupTag::N, k11));
  CHECK_FALSE(is_member(real_diag({-2, -0.5}), GroupTag::A, k11));
  CHECK_FALSE(is_member(real_diag({2, 2}), GroupTag::G, k11));

  // [[sqrt2, 1], [1, sqrt2]]: |a|^2 - |c|^2 = 1, so dagger(M) M = I.
  const double r2 = std::numbers::sqrt2;
  const CMatrix boost{{r2, 1}, {1, r2}};
  CHECK(distance(naive_mul(naive_dagger(boost, 1), boost), CMatrix::identity(2)) <= 1e-15);
  CHECK(is_member(boost, GroupTag::G0, k11));
  CHECK_FALSE(is_member(boost, GroupTag::AN, k11));

  const CMatrix unipotent{{1, Complex(2, 1)}, {0, 1}};
  CHECK(is_member(unipotent, GroupTag::N, k11));
  CHECK(is_member(unipotent, GroupTag::AN, k11));
  CHECK_FALSE(is_member(unipotent, GroupTag::A, k11));

  const CMatrix q{{2, 1 / r2}, {-1 / r2, 0.25}};
  CHECK(is_member(q, GroupTag::Q, k11));
  CHECK_FALSE(is_member(q, GroupTag::G0, k11));
}

TEST_CASE("random_g0 contract") {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const Signature sig(1 + seed % 3, 1 + (seed / 3) % 3);
    const CMatrix g = random_g0(sig, seed, 2.0);
    CHECK(is_member(g, GroupTag::G0, sig, 1e-8));
    CHECK(distance(naive_mul(naive_dagger(g, sig.p()), g), CMatrix::identity(sig.dim())) <= 1e-8);
  }
  const CMatrix g11 = random_g0(k11, 3, 1.5);
  CHECK(std::norm(g11(0, 0)) - std::norm(g11(1, 0)) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(distance(random_g0(Signature(2, 2), 4, 1e-12), CMatrix::identity(4)) <= 1e-11);
}

TEST_CASE("random_an contract") {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const Signature sig(1 + seed % 4, 1 + (seed / 4) % 3);
    const CMatrix b = random_an(sig, seed, 1.0);
    CHECK(is_member(b, GroupTag::AN, sig));
    for (std::size_t i = 0; i < b.rows(); ++i) {
      CHECK(b(i, i).imag() == 0.0);
      CHECK(b(i, i).real() > 0.0);
      for (std::size_t j = 0; j < i; ++j) CHECK(b(i, j) == Complex{});
    }
    CHECK(std::abs(cofactor_det(b) - 1.0) <= 1e-12);
  }
  const CMatrix tiny = random_an(Signature(2, 1), 8, 1e-9);
  CHECK(is_member(tiny, GroupTag::AN, Signature(2, 1)));
  CHECK(distance(tiny, CMatrix::identity(3)) <= 1e-7);
}

TEST_CASE("random_admissible_diag contract") {
  const AdmissibleDiagonal d11 = random_admissible_diag(k11, 1, 2.0);
  CHECK(d11.lambdas()[0] - d11.mus()[0] >= 2.0);
  CHECK(d11.lambdas()[0] + d11.mus()[0] == doctest::Approx(0.0));
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const Signature sig(1 + seed % 4, 1 + (seed / 4) % 4);
    const double gap = seed % 2 == 0 ? 1e-6 : 0.5;
    const AdmissibleDiagonal d = random_admissible_diag(sig, seed, gap);
    CHECK(d.signature() == sig);
    CHECK(d.gap() >= gap);
    const auto e = d.exponents();
    CHECK(std::abs(std::accumulate(e.begin(), e.end(), 0.0)) <= 1e-12);
    for (std::size_t i = 0; i + 1 < e.size(); ++i) CHECK(e[i] >= e[i + 1]);
    CHECK(is_member(d.exp_matrix(), GroupTag::A, sig));
  }
}

TEST_CASE("AdmissibleDiagonal validation") {
  CHECK_NOTHROW(AdmissibleDiagonal({1.0}, {-1.0}));
  CHECK_THROWS_AS(AdmissibleDiagonal({0.0}, {0.0}), Error);
  CHECK_THROWS_AS(AdmissibleDiagonal({1.0, 2.0}, {-3.0}), Error);
  CHECK_THROWS_AS(AdmissibleDiagonal({1.0}, {-0.5}), Error);
  const AdmissibleDiagonal d({1.0}, {-1.0});
  CHECK(distance(d.exp_matrix(), real_diag({std::numbers::e, 1 / std::numbers::e})) <= 1e-14);
  CHECK(d.generator() == real_diag({1, -1}));
}

TEST_CASE("subgroup inclusions and the trivial intersection of SU(p,q) and AN") {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const Signature sig(1 + seed % 3, 1 + (seed / 3) % 3);
    const CMatrix a = random_admissible_diag(sig, seed, 0.3).exp_matrix();
    CHECK(is_member(a, GroupTag::A, sig));
    CHECK(is_member(a, GroupTag::AN, sig));
    CHECK(is_member(a, GroupTag::G, sig));
    const CMatrix b = random_an(sig, seed, 0.5);
    CHECK(is_member(b, GroupTag::G, sig));
    const CMatrix g = random_g0(sig, seed, 1.0);
    CHECK(is_member(g, GroupTag::G, sig));
    for (const CMatrix& m : {a, b, g}) {
      if (is_member(m, GroupTag::G0, sig) && is_member(m, GroupTag::AN, sig)) {
        CHECK(distance(m, CMatrix::identity(sig.dim())) <= 10 * kDefaultTol);
      }
    }
  }
  // A diagonal phase lies in SU(1,1) but not in AN.
  const CMatrix phase{{Complex(0, 1), 0}, {0, Complex(0, -1)}};
  CHECK(is_member(phase, GroupTag::G0, k11));
  CHECK_FALSE(is_member(phase, GroupTag::AN, k11));
}
