// Command-line front end: JSON documents in, JSON (or text) reports out.

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "iwasawa/commands.hpp"

namespace {

using iwasawa::Error;
using iwasawa::ErrorCode;
using iwasawa::Report;

std::string read_source(const std::string& path) {
  if (path.empty() || path == "-") {
    return std::string(std::istreambuf_iterator<char>(std::cin), {});
  }
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

nlohmann::json read_json(const std::string& path) {
  try {
    return nlohmann::json::parse(read_source(path));
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("invalid JSON: ") + e.what());
  }
}

int emit(const Report& report, bool json_only) {
  if (json_only) {
    std::cout << report.to_json().dump(2) << "\n";
  } else {
    std::cout << report.summary();
  }
  return report.exit_status;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Iwasawa-type decomposition of SL(n, C) relative to SU(p, q)"};
  app.require_subcommand(1);

  std::string in_path;
  double tol = iwasawa::kDefaultTol;
  bool json_only = false;

  const auto common = [&](CLI::App* sub) {
    sub->add_option("--tol", tol, "structural tolerance")->capture_default_str();
    sub->add_flag("--json", json_only, "machine-readable output only");
  };

  auto* decompose = app.add_subcommand("decompose", "factor g = s b with s in SU(p,q), b in AN");
  std::string method = "gauss";
  decompose->add_option("--in", in_path, "input document (default stdin)");
  decompose->add_option("--method", method, "gs | gauss | both")
      ->check(CLI::IsMember({"gs", "gauss", "both"}))
      ->capture_default_str();
  common(decompose);

  auto* check = app.add_subcommand("check", "membership and admissibility predicates");
  std::string set;
  check->add_option("--in", in_path, "input document (default stdin)");
  check->add_option("--set", set, "g | g0 | a | n | an | q | q_adm | an_adm")
      ->required()
      ->check(CLI::IsMember({"g", "g0", "a", "n", "an", "q", "q_adm", "an_adm"}));
  common(check);

  auto* dress = app.add_subcommand("dress", "right dressing b^g: b g = g' b'");
  std::string b_path;
  std::string g_path;
  dress->add_option("--b", b_path, "document holding b in AN")->required();
  dress->add_option("--g", g_path, "document holding g in SU(p,q)")->required();
  common(dress);

  auto* sym = app.add_subcommand("sym", "symmetrization dagger(b) b of b in AN");
  sym->add_option("--in", in_path, "input document (default stdin)");
  common(sym);

  auto* classify = app.add_subcommand("classify", "timelike / null / spacelike");
  classify->add_option("--in", in_path, "vector document (default stdin)");
  common(classify);

  auto* selftest = app.add_subcommand("selftest", "run the randomized property suites");
  iwasawa::SelftestOptions opts;
  selftest->add_option("--n-max", opts.n_max, "largest dimension")
      ->check(CLI::Range(2, 8))
      ->capture_default_str();
  selftest->add_option("--trials", opts.trials, "base trial count (1000 = full size)")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  selftest->add_option("--seed", opts.seed, "base seed")->capture_default_str();
  selftest->add_option("--threads", opts.threads, "worker threads (0 = all cores)");
  selftest->add_flag("--inject-fault", opts.inject_fault,
                     "perturb one algorithm to confirm failures are reported");
  selftest->add_flag("--json", json_only, "machine-readable output only");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    // Help and version requests exit 0; malformed command lines are parse errors.
    return app.exit(e) == 0 ? iwasawa::kExitOk : iwasawa::kExitParse;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  try {
    if (*decompose) {
      const auto doc = iwasawa::parse_matrix_document(read_json(in_path));
      return emit(iwasawa::cmd_decompose(doc, iwasawa::parse_method(method), tol), json_only);
    }
    if (*check) {
      const auto doc = iwasawa::parse_matrix_document(read_json(in_path));
      return emit(iwasawa::cmd_check(doc, iwasawa::parse_check_set(set), tol), json_only);
    }
    if (*dress) {
      const auto b = iwasawa::parse_matrix_document(read_json(b_path));
      const auto g = iwasawa::parse_matrix_document(read_json(g_path));
      return emit(iwasawa::cmd_dress(b, g, tol), json_only);
    }
    if (*sym) {
      const auto doc = iwasawa::parse_matrix_document(read_json(in_path));
      return emit(iwasawa::cmd_sym(doc, tol), json_only);
    }
    if (*classify) {
      const auto doc = iwasawa::parse_vector_document(read_json(in_path));
      return emit(iwasawa::cmd_classify(doc, tol), json_only);
    }
    return emit(iwasawa::cmd_selftest(opts), json_only);
  } catch (const Error& e) {
    return emit(iwasawa::error_report(command, e), json_only);
  }
}
