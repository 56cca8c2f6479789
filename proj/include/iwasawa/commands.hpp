#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "json.hpp"

#include "iwasawa/document.hpp"
#include "iwasawa/selftest.hpp"

namespace iwasawa {

enum class Method { GramSchmidt, Gauss, Both };
enum class CheckSet { G, G0, A, N, AN, Q, QAdmissible, ANAdmissible };

// Throw Error(InvalidArgument) on unknown names.
Method parse_method(std::string_view name);
CheckSet parse_check_set(std::string_view name);

// Exit status of the CLI: 0 success, 1 self-test failures, 2 parse errors,
// 3 failed preconditions, 4 not decomposable.
inline constexpr int kExitOk = 0;
inline constexpr int kExitSelftestFailed = 1;
inline constexpr int kExitParse = 2;
inline constexpr int kExitPrecondition = 3;
inline constexpr int kExitNotDecomposable = 4;

int exit_status_for(ErrorCode code);

struct Report {
  std::string command;
  bool success = false;
  nlohmann::json outputs = nlohmann::json::object();
  std::optional<double> residual;
  std::optional<double> margin;
  std::optional<std::string> error_code;
  std::string message;
  int exit_status = kExitOk;

  nlohmann::json to_json() const;
  std::string summary() const;
};

// Report for an error raised before or during a command.
Report error_report(std::string command, const Error& e);

Report cmd_decompose(const MatrixDocument& input, Method method, double tol = kDefaultTol);
Report cmd_check(const MatrixDocument& input, CheckSet set, double tol = kDefaultTol);
Report cmd_dress(const MatrixDocument& b_doc, const MatrixDocument& g_doc,
                 double tol = kDefaultTol);
Report cmd_sym(const MatrixDocument& input, double tol = kDefaultTol);
Report cmd_classify(const VectorDocument& input, double tol = kDefaultTol);
Report cmd_selftest(const SelftestOptions& opts);

}  // namespace iwasawa
