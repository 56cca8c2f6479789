#include "iwasawa/document.hpp"

#include <cmath>

namespace iwasawa {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& why) {
  throw Error(ErrorCode::ParseError, "document: " + why);
}

double finite_number(const json& j, const char* what) {
  if (!j.is_number()) fail(std::string(what) + " must be a number");
  const double x = j.get<double>();
  if (!std::isfinite(x)) fail(std::string(what) + " is not finite");
  return x;
}

Complex parse_complex(const json& j) {
  if (j.is_number()) return {finite_number(j, "entry"), 0.0};
  if (!j.is_array() || j.size() != 2) fail("entry must be a [re, im] pair");
  return {finite_number(j[0], "real part"), finite_number(j[1], "imaginary part")};
}

Signature parse_signature(const json& j) {
  if (!j.is_object() || !j.contains("signature")) fail("missing \"signature\"");
  const json& s = j["signature"];
  if (!s.is_object() || !s.contains("p") || !s.contains("q") ||
      !s["p"].is_number_integer() || !s["q"].is_number_integer()) {
    fail("\"signature\" must be {\"p\": int, \"q\": int}");
  }
  const auto p = s["p"].get<long long>();
  const auto q = s["q"].get<long long>();
  if (p < 1 || q < 1 || p + q > static_cast<long long>(kEigSizeCap)) {
    fail("signature (p, q) needs p, q >= 1 and p + q <= " + std::to_string(kEigSizeCap));
  }
  return Signature(static_cast<int>(p), static_cast<int>(q));
}

std::optional<std::string> parse_label(const json& j) {
  if (!j.contains("label") || j["label"].is_null()) return std::nullopt;
  if (!j["label"].is_string()) fail("\"label\" must be a string");
  return j["label"].get<std::string>();
}

CVector parse_entries(const json& row, std::size_t n, const char* what) {
  if (!row.is_array() || row.size() != n) {
    fail(std::string(what) + " must have " + std::to_string(n) + " entries");
  }
  CVector v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = parse_complex(row[i]);
  return v;
}

}  // namespace

MatrixDocument parse_matrix_document(const nlohmann::json& j) {
  const Signature sig = parse_signature(j);
  if (!j.contains("matrix")) fail("missing \"matrix\"");
  const json& rows = j["matrix"];
  const std::size_t n = sig.dim();
  if (!rows.is_array() || rows.size() != n) {
    fail("\"matrix\" must have p + q = " + std::to_string(n) + " rows");
  }
  CMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    const CVector row = parse_entries(rows[i], n, "each matrix row");
    for (std::size_t k = 0; k < n; ++k) m(i, k) = row[k];
  }
  return MatrixDocument{sig, std::move(m), parse_label(j)};
}

MatrixDocument parse_matrix_text(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    fail(std::string("invalid JSON: ") + e.what());
  }
  return parse_matrix_document(j);
}

VectorDocument parse_vector_document(const nlohmann::json& j) {
  const Signature sig = parse_signature(j);
  if (!j.contains("vector")) fail("missing \"vector\"");
  CVector v = parse_entries(j["vector"], sig.dim(), "\"vector\"");
  return VectorDocument{sig, std::move(v), parse_label(j)};
}

nlohmann::json complex_to_json(Complex z) { return json::array({z.real(), z.imag()}); }

nlohmann::json vector_to_json(const CVector& v) {
  json out = json::array();
  for (const auto& z : v) out.push_back(complex_to_json(z));
  return out;
}

nlohmann::json to_json(const MatrixDocument& doc) {
  json rows = json::array();
  for (std::size_t i = 0; i < doc.matrix.rows(); ++i) {
    json row = json::array();
    for (std::size_t k = 0; k < doc.matrix.cols(); ++k) row.push_back(complex_to_json(doc.matrix(i, k)));
    rows.push_back(std::move(row));
  }
  json out{{"signature", {{"p", doc.signature.p()}, {"q", doc.signature.q()}}},
           {"matrix", std::move(rows)}};
  if (doc.label) out["label"] = *doc.label;
  return out;
}

nlohmann::json to_json(const VectorDocument& doc) {
  json out{{"signature", {{"p", doc.signature.p()}, {"q", doc.signature.q()}}},
           {"vector", vector_to_json(doc.vector)}};
  if (doc.label) out["label"] = *doc.label;
  return out;
}

}  // namespace iwasawa
