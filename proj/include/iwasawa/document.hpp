#pragma once

// JSON file schema shared by every CLI command:
//
//   {"signature": {"p": 1, "q": 1},
//    "matrix": [[[re, im], [re, im]], [[re, im], [re, im]]],
//    "label": "optional"}
//
// Vector documents carry "vector": [[re, im], ...] instead of "matrix".
// Doubles are written in shortest round-trip form, so a parsed document
// re-serializes bit-identically.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "iwasawa/indefinite.hpp"
#include "iwasawa/numkernel.hpp"

namespace iwasawa {

struct MatrixDocument {
  Signature signature;
  CMatrix matrix;
  std::optional<std::string> label;
};

struct VectorDocument {
  Signature signature;
  CVector vector;
  std::optional<std::string> label;
};

// All parse functions throw Error(ParseError).
MatrixDocument parse_matrix_document(const nlohmann::json& j);
MatrixDocument parse_matrix_text(std::string_view text);
VectorDocument parse_vector_document(const nlohmann::json& j);

nlohmann::json to_json(const MatrixDocument& doc);
nlohmann::json to_json(const VectorDocument& doc);
nlohmann::json complex_to_json(Complex z);
nlohmann::json vector_to_json(const CVector& v);

}  // namespace iwasawa
