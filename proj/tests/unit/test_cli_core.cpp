#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <bit>
#include <numbers>

#include "../support.hpp"
#include "iwasawa/commands.hpp"
#include "iwasawa/document.hpp"
#include "iwasawa/error.hpp"
#include "iwasawa/groups.hpp"
#include "iwasawa/random.hpp"
#include "iwasawa/selftest.hpp"

using namespace iwasawa;
using namespace testing_support;
using nlohmann::json;

namespace {

const Signature k11(1, 1);
const double kRoot2 = std::numbers::sqrt2;
const double kE = std::numbers::e;

MatrixDocument doc(const CMatrix& m, const Signature& sig = k11) {
  return MatrixDocument{sig, m, std::nullopt};
}

bool bit_identical(const CMatrix& a, const CMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (std::size_t i = 0; i < a.values().size(); ++i) {
    const Complex x = a.values()[i];
    const Complex y = b.values()[i];
    if (std::bit_cast<std::uint64_t>(x.real()) != std::bit_cast<std::uint64_t>(y.real()) ||
        std::bit_cast<std::uint64_t>(x.imag()) != std::bit_cast<std::uint64_t>(y.imag())) {
      return false;
    }
  }
  return true;
}

CMatrix from_output(const json& j) { return parse_matrix_document(j).matrix; }

ErrorCode parse_code(std::string_view text) {
  try {
    parse_matrix_text(text);
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::InvalidArgument;
}

}  // namespace

TEST_CASE("document parsing accepts pairs and plain numbers") {
  const MatrixDocument d = parse_matrix_text(
      R"({"signature": {"p": 1, "q": 1}, "matrix": [[[2, 0], 1], [[0, -1], [1, 0.5]]], "label": "x"})");
  CHECK(d.signature == k11);
  CHECK(d.matrix == CMatrix{{2, 1}, {Complex(0, -1), Complex(1, 0.5)}});
  CHECK(d.label == std::optional<std::string>("x"));
}

TEST_CASE("document parsing rejects malformed input") {
  CHECK(parse_code("{") == ErrorCode::ParseError);
  CHECK(parse_code(R"({"matrix": [[1]]})") == ErrorCode::ParseError);
  CHECK(parse_code(R"({"signature": {"p": 1, "q": 1}, "matrix": [[1, 0]]})") == ErrorCode::ParseError);
  CHECK(parse_code(R"({"signature": {"p": 0, "q": 2}, "matrix": [[1, 0], [0, 1]]})") ==
        ErrorCode::ParseError);
  CHECK(parse_code(R"({"signature": {"p": 1, "q": 1}, "matrix": [[1, [0, 1, 2]], [0, 1]]})") ==
        ErrorCode::ParseError);
  CHECK(parse_code(R"({"signature": {"p": 1, "q": 1}, "matrix": [[1, "a"], [0, 1]]})") ==
        ErrorCode::ParseError);
  CHECK(parse_code(R"({"signature": {"p": 1, "q": 1}, "matrix": [[1, 1e400], [0, 1]]})") ==
        ErrorCode::ParseError);
}

TEST_CASE("documents round-trip bit-exactly") {
  Rng rng(31);
  for (int t = 0; t < 200; ++t) {
    const Signature sig(1 + t % 3, 1 + (t / 3) % 3);
    CMatrix m(sig.dim(), sig.dim());
    for (std::size_t i = 0; i < sig.dim(); ++i) {
      for (std::size_t j = 0; j < sig.dim(); ++j) {
        m(i, j) = Complex(rng.normal() * std::pow(10.0, rng.uniform(-300, 300)), rng.normal());
      }
    }
    m(0, 0) = Complex(-0.0, 1.0 / 3.0);
    const MatrixDocument original{sig, m, t % 2 ? std::optional<std::string>("l") : std::nullopt};
    const MatrixDocument back = parse_matrix_text(to_json(original).dump());
    CHECK(back.signature == sig);
    CHECK(bit_identical(back.matrix, m));
    CHECK(back.label == original.label);
  }
  const VectorDocument v{Signature(2, 1), CVector{0.1, Complex(0.2, -0.3), 1e-310}, std::nullopt};
  const VectorDocument vb = parse_vector_document(json::parse(to_json(v).dump()));
  CHECK(vb.vector == v.vector);
}

TEST_CASE("command outputs re-parse bit-exactly") {
  const Report r = cmd_decompose(doc(CMatrix{{2, 1}, {1, 1}}), Method::Gauss, kDefaultTol);
  REQUIRE(r.success);
  const json text = json::parse(r.to_json().dump());
  const CMatrix s = from_output(text["outputs"]["s"]);
  CHECK(bit_identical(s, from_output(r.outputs["s"])));
  const MatrixDocument again = parse_matrix_text(to_json(doc(s)).dump());
  CHECK(bit_identical(again.matrix, s));
}

TEST_CASE("decompose command") {
  const Report id = cmd_decompose(doc(CMatrix::identity(2)), Method::Gauss, kDefaultTol);
  CHECK(id.success);
  CHECK(id.exit_status == kExitOk);
  CHECK(from_output(id.outputs["s"]) == CMatrix::identity(2));
  CHECK(from_output(id.outputs["b"]) == CMatrix::identity(2));
  CHECK(id.outputs["residual"].get<double>() == 0.0);

  const Report both = cmd_decompose(doc(CMatrix{{2, 1}, {1, 1}}), Method::Both, kDefaultTol);
  CHECK(both.success);
  CHECK(both.outputs["agreement_distance"].get<double>() <= 1e-10);
  for (const char* key : {"s", "b", "a", "n", "residual"}) CHECK(both.outputs.contains(key));

  const Report bad = cmd_decompose(doc(CMatrix{{0.5, 1}, {-1, 0}}), Method::Gauss, kDefaultTol);
  CHECK_FALSE(bad.success);
  CHECK(bad.error_code == std::optional<std::string>("not_decomposable"));
  CHECK(bad.exit_status == kExitNotDecomposable);
  CHECK(bad.outputs["failure"]["kind"] == "wrong_inertia");
  CHECK(bad.outputs["failure"]["index"] == 1);
  CHECK(bad.to_json()["diagnostics"]["error_code"] == "not_decomposable");

  const Report gs = cmd_decompose(doc(CMatrix{{0.5, 1}, {-1, 0}}), Method::GramSchmidt, kDefaultTol);
  CHECK(gs.outputs["failure"]["kind"] == "wrong_cone");

  const Report not_sl = cmd_decompose(doc(real_diag({2, 2})), Method::Gauss, kDefaultTol);
  CHECK(not_sl.exit_status == kExitPrecondition);
}

TEST_CASE("check command") {
  const Report id = cmd_check(doc(CMatrix::identity(2)), CheckSet::QAdmissible, kDefaultTol);
  CHECK(id.success);
  CHECK(id.outputs["verdict"] == false);
  CHECK(id.outputs["reason"] == "gap violated");

  const Report an = cmd_check(doc(real_diag({2, 0.5})), CheckSet::ANAdmissible, kDefaultTol);
  CHECK(an.outputs["verdict"] == true);
  REQUIRE(an.margin.has_value());
  // sym = diag(4, 1/4): margin 4 - 1/4.
  CHECK(*an.margin == doctest::Approx(3.75));

  CHECK(cmd_check(doc(real_diag({2, 0.5})), CheckSet::A, kDefaultTol).outputs["verdict"] == true);
  CHECK(cmd_check(doc(CMatrix{{kRoot2, 1}, {1, kRoot2}}), CheckSet::G0, kDefaultTol)
            .outputs["verdict"] == true);
  const Report not_q = cmd_check(doc(CMatrix{{1, 1}, {0, 1}}), CheckSet::QAdmissible, kDefaultTol);
  CHECK(not_q.success);
  CHECK(not_q.outputs["verdict"] == false);
}

TEST_CASE("dress command") {
  const CMatrix boost{{kRoot2, 1}, {1, kRoot2}};
  const Report r = cmd_dress(doc(real_diag({kE, 1 / kE})), doc(boost), kDefaultTol);
  REQUIRE(r.success);
  const double delta = std::sqrt(2 * kE * kE - 1 / (kE * kE));
  CHECK(distance(from_output(r.outputs["b_prime"]),
                 CMatrix{{delta, kRoot2 * (kE * kE - 1 / (kE * kE)) / delta}, {0, 1 / delta}}) <=
        1e-13);
  CHECK(r.outputs["residual"].get<double>() <= 1e-13);

  const Report id_b = cmd_dress(doc(CMatrix::identity(2)), doc(boost), kDefaultTol);
  CHECK(distance(from_output(id_b.outputs["g_prime"]), boost) <= 1e-14);
  const Report id_g = cmd_dress(doc(real_diag({kE, 1 / kE})), doc(CMatrix::identity(2)), kDefaultTol);
  CHECK(distance(from_output(id_g.outputs["b_prime"]), real_diag({kE, 1 / kE})) <= 1e-14);

  const Report not_an = cmd_dress(doc(boost), doc(boost), kDefaultTol);
  CHECK(not_an.error_code == std::optional<std::string>("invalid_input"));
  CHECK(not_an.exit_status == kExitPrecondition);
  const Report not_g0 = cmd_dress(doc(real_diag({2, 0.5})), doc(real_diag({2, 0.5})), kDefaultTol);
  CHECK(not_g0.exit_status == kExitPrecondition);
  const Report mismatch =
      cmd_dress(doc(CMatrix::identity(3), Signature(2, 1)), doc(CMatrix::identity(3), Signature(1, 2)),
                kDefaultTol);
  CHECK(mismatch.exit_status == kExitPrecondition);
}

TEST_CASE("sym and classify commands") {
  const Report s = cmd_sym(doc(CMatrix{{kRoot2, 0.5}, {0, 1 / kRoot2}}), kDefaultTol);
  CHECK(distance(from_output(s.outputs["sym"]), CMatrix{{2, 1 / kRoot2}, {-1 / kRoot2, 0.25}}) <=
        1e-15);
  const Report c = cmd_classify(VectorDocument{k11, CVector{1, 1}, std::nullopt}, kDefaultTol);
  CHECK(c.outputs["class"] == "null");
  const Report z = cmd_classify(VectorDocument{k11, CVector{0, 0}, std::nullopt}, kDefaultTol);
  CHECK_FALSE(z.success);
  CHECK(z.exit_status == kExitPrecondition);
}

TEST_CASE("failed reports always carry an error code") {
  const Report r = error_report("decompose", Error(ErrorCode::ParseError, "bad"));
  CHECK_FALSE(r.success);
  CHECK(r.exit_status == kExitParse);
  CHECK(r.to_json()["diagnostics"]["error_code"] == "parse_error");
}

TEST_CASE("small selftest passes and a corrupted run is reported") {
  SelftestOptions opts;
  opts.n_max = 2;
  opts.trials = 100;
  const Report ok = cmd_selftest(opts);
  CHECK(ok.success);
  CHECK(ok.exit_status == kExitOk);
  CHECK(ok.outputs["criteria"].size() == 10);

  opts.inject_fault = true;
  const Report bad = cmd_selftest(opts);
  CHECK_FALSE(bad.success);
  CHECK(bad.exit_status == kExitSelftestFailed);
}

TEST_CASE("selftest results do not depend on the number of worker threads") {
  SelftestOptions one;
  one.n_max = 4;
  one.trials = 50;
  one.threads = 1;
  SelftestOptions many = one;
  many.threads = 4;
  const auto a = run_selftest(one);
  const auto b = run_selftest(many);
  REQUIRE(a.size() == b.size());
  for (std::size_t k = 0; k < a.size(); ++k) {
    CHECK(a[k].passed == b[k].passed);
    CHECK(a[k].failures == b[k].failures);
    CHECK(std::bit_cast<std::uint64_t>(a[k].worst) == std::bit_cast<std::uint64_t>(b[k].worst));
  }
}
