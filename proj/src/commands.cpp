#include "iwasawa/commands.hpp"

#include <cstdio>
#include <sstream>

#include "iwasawa/admissible.hpp"
#include "iwasawa/groups.hpp"
#include "iwasawa/iwasawa.hpp"

namespace iwasawa {

namespace {

using nlohmann::json;

json matrix_output(const Signature& sig, const CMatrix& m) {
  return to_json(MatrixDocument{sig, m, std::nullopt});
}

std::string failure_kind(const Error& e) {
  switch (e.code()) {
    case ErrorCode::SingularMinor: return "singular_minor";
    case ErrorCode::WrongInertia: return "wrong_inertia";
    case ErrorCode::NotDecomposable: return e.boundary() ? "boundary" : "wrong_cone";
    default: return std::string(to_string(e.code()));
  }
}

json report_json(const AdmissibilityReport& r) {
  json eigenvalues = json::array();
  for (const auto& z : r.eigenvalues) eigenvalues.push_back(complex_to_json(z));
  return json{{"admissible", r.admissible},
              {"eigenvalues", std::move(eigenvalues)},
              {"timelike_values", r.timelike_values},
              {"spacelike_values", r.spacelike_values},
              {"margin", r.margin},
              {"reason", r.reason}};
}

std::string format_number(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", x);
  return buf;
}

std::string format_complex(const json& pair) {
  const double re = pair[0].get<double>();
  const double im = pair[1].get<double>();
  if (im == 0.0) return format_number(re);
  return format_number(re) + (im < 0 ? " - " : " + ") + format_number(std::abs(im)) + "i";
}

void describe(std::ostringstream& out, const std::string& key, const json& value) {
  if (value.is_object() && value.contains("matrix")) {
    out << "  " << key << " =\n";
    for (const auto& row : value["matrix"]) {
      out << "    [";
      for (std::size_t k = 0; k < row.size(); ++k) out << (k ? ", " : "") << format_complex(row[k]);
      out << "]\n";
    }
  } else if (value.is_number_float()) {
    out << "  " << key << " = " << format_number(value.get<double>()) << "\n";
  } else if (!value.is_array() || value.size() <= 16) {
    out << "  " << key << " = " << value.dump() << "\n";
  }
}

}  // namespace

Method parse_method(std::string_view name) {
  if (name == "gs") return Method::GramSchmidt;
  if (name == "gauss") return Method::Gauss;
  if (name == "both") return Method::Both;
  throw Error(ErrorCode::InvalidArgument, "unknown method '" + std::string(name) + "'");
}

CheckSet parse_check_set(std::string_view name) {
  if (name == "g") return CheckSet::G;
  if (name == "g0") return CheckSet::G0;
  if (name == "a") return CheckSet::A;
  if (name == "n") return CheckSet::N;
  if (name == "an") return CheckSet::AN;
  if (name == "q") return CheckSet::Q;
  if (name == "q_adm") return CheckSet::QAdmissible;
  if (name == "an_adm") return CheckSet::ANAdmissible;
  throw Error(ErrorCode::InvalidArgument, "unknown set '" + std::string(name) + "'");
}

int exit_status_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::ParseError: return kExitParse;
    case ErrorCode::NotDecomposable:
    case ErrorCode::SingularMinor:
    case ErrorCode::WrongInertia: return kExitNotDecomposable;
    default: return kExitPrecondition;
  }
}

json Report::to_json() const {
  json diagnostics{{"residual", residual ? json(*residual) : json(nullptr)},
                   {"margin", margin ? json(*margin) : json(nullptr)},
                   {"error_code", error_code ? json(*error_code) : json(nullptr)}};
  if (!message.empty()) diagnostics["message"] = message;
  return json{{"command", command},
              {"success", success},
              {"outputs", outputs},
              {"diagnostics", std::move(diagnostics)}};
}

std::string Report::summary() const {
  std::ostringstream out;
  out << command << ": " << (success ? "ok" : "FAILED");
  if (error_code) out << " (" << *error_code << ")";
  out << "\n";
  if (!message.empty()) out << "  " << message << "\n";
  if (command == "selftest" && outputs.contains("criteria")) {
    for (const auto& c : outputs["criteria"]) {
      out << "  [" << (c["passed"].get<bool>() ? "PASS" : "FAIL") << "] "
          << c["id"].get<int>() << ". " << c["name"].get<std::string>() << " ("
          << c["cases"].get<std::size_t>() << " cases, " << c["failures"].get<std::size_t>()
          << " failures, worst "
          << (c["worst"].is_number() ? format_number(c["worst"].get<double>()) : "n/a") << ")\n";
    }
    return out.str();
  }
  for (const auto& [key, value] : outputs.items()) describe(out, key, value);
  if (residual && !outputs.contains("residual")) out << "  residual = " << format_number(*residual) << "\n";
  if (margin && !outputs.contains("margin")) out << "  margin = " << format_number(*margin) << "\n";
  return out.str();
}

Report error_report(std::string command, const Error& e) {
  Report r;
  r.command = std::move(command);
  r.success = false;
  r.exit_status = exit_status_for(e.code());
  r.error_code = r.exit_status == kExitNotDecomposable ? std::string("not_decomposable")
                                                       : std::string(to_string(e.code()));
  r.message = e.what();
  if (r.exit_status == kExitNotDecomposable) {
    r.outputs["failure"] = json{{"kind", failure_kind(e)}, {"index", e.index()}};
  }
  return r;
}

Report cmd_decompose(const MatrixDocument& input, Method method, double tol) {
  Report r;
  r.command = "decompose";
  const Signature& sig = input.signature;
  try {
    std::optional<DecompPair> gs;
    std::optional<DecompPair> gauss;
    if (method != Method::Gauss) gs = decompose_gs(input.matrix, sig, tol);
    if (method != Method::GramSchmidt) gauss = decompose_gauss(input.matrix, sig, tol);
    const DecompPair& pair = gauss ? *gauss : *gs;
    r.outputs["method"] = method == Method::Both ? "both" : gauss ? "gauss" : "gs";
    r.outputs["s"] = matrix_output(sig, pair.s);
    r.outputs["b"] = matrix_output(sig, pair.b);
    r.outputs["a"] = pair.a;
    r.outputs["n"] = matrix_output(sig, pair.n_factor);
    r.outputs["residual"] = pair.residual;
    r.residual = pair.residual;
    if (gs && gauss) {
      const double distance =
          (gs->s - gauss->s).frobenius_norm() + (gs->b - gauss->b).frobenius_norm();
      r.outputs["agreement_distance"] = distance;
      r.outputs["residual_gs"] = gs->residual;
      r.residual = std::max(gs->residual, gauss->residual);
    }
    r.success = true;
  } catch (const Error& e) {
    return error_report("decompose", e);
  }
  return r;
}

Report cmd_check(const MatrixDocument& input, CheckSet set, double tol) {
  Report r;
  r.command = "check";
  const Signature& sig = input.signature;
  const CMatrix& m = input.matrix;
  try {
    const auto membership = [&](GroupTag tag, const char* name) {
      const bool verdict = is_member(m, tag, sig, tol);
      r.outputs["set"] = name;
      r.outputs["verdict"] = verdict;
      r.outputs["reason"] = verdict ? std::string("member of ") + name
                                    : std::string("not a member of ") + name;
    };
    const auto admissibility = [&](GroupTag tag, const char* name) {
      r.outputs["set"] = name;
      if (!is_member(m, tag, sig, tol)) {
        r.outputs["verdict"] = false;
        r.outputs["reason"] = std::string("not in ") + std::string(to_string(tag));
        return;
      }
      const AdmissibilityReport rep = tag == GroupTag::Q ? check_admissible_q(m, sig, tol)
                                                         : check_admissible_an(m, sig, tol);
      r.outputs["verdict"] = rep.admissible;
      r.outputs["reason"] = rep.reason;
      r.outputs["report"] = report_json(rep);
      r.margin = rep.margin;
    };
    switch (set) {
      case CheckSet::G: membership(GroupTag::G, "g"); break;
      case CheckSet::G0: membership(GroupTag::G0, "g0"); break;
      case CheckSet::A: membership(GroupTag::A, "a"); break;
      case CheckSet::N: membership(GroupTag::N, "n"); break;
      case CheckSet::AN: membership(GroupTag::AN, "an"); break;
      case CheckSet::Q: membership(GroupTag::Q, "q"); break;
      case CheckSet::QAdmissible: admissibility(GroupTag::Q, "q_adm"); break;
      case CheckSet::ANAdmissible: admissibility(GroupTag::AN, "an_adm"); break;
    }
    r.success = true;
  } catch (const Error& e) {
    return error_report("check", e);
  }
  return r;
}

Report cmd_dress(const MatrixDocument& b_doc, const MatrixDocument& g_doc, double tol) {
  Report r;
  r.command = "dress";
  if (!(b_doc.signature == g_doc.signature)) {
    return error_report("dress", Error(ErrorCode::InvalidInput,
                                       "dress: b and g documents have different signatures"));
  }
  const Signature& sig = b_doc.signature;
  if (!is_member(b_doc.matrix, GroupTag::AN, sig, tol)) {
    return error_report("dress", Error(ErrorCode::InvalidInput, "dress: b is not in AN"));
  }
  try {
    const DressResult d = dress(b_doc.matrix, g_doc.matrix, sig, tol);
    r.outputs["g_prime"] = matrix_output(sig, d.g_prime);
    r.outputs["b_prime"] = matrix_output(sig, d.b_prime);
    const double residual =
        (b_doc.matrix * g_doc.matrix - d.g_prime * d.b_prime).frobenius_norm();
    r.outputs["residual"] = residual;
    r.residual = residual;
    r.success = true;
  } catch (const Error& e) {
    if (e.code() == ErrorCode::NotInG0) {
      return error_report("dress", Error(ErrorCode::InvalidInput, "dress: g is not in SU(p,q)"));
    }
    return error_report("dress", e);
  }
  return r;
}

Report cmd_sym(const MatrixDocument& input, double tol) {
  Report r;
  r.command = "sym";
  try {
    r.outputs["sym"] = matrix_output(input.signature, sym(input.matrix, input.signature, tol));
    r.success = true;
  } catch (const Error& e) {
    return error_report("sym", e);
  }
  return r;
}

Report cmd_classify(const VectorDocument& input, double tol) {
  Report r;
  r.command = "classify";
  try {
    r.outputs["class"] = std::string(to_string(classify(input.vector, input.signature, tol)));
    r.outputs["norm_sq"] = norm_sq(input.vector, input.signature);
    r.success = true;
  } catch (const Error& e) {
    return error_report("classify", e);
  }
  return r;
}

Report cmd_selftest(const SelftestOptions& opts) {
  Report r;
  r.command = "selftest";
  json criteria = json::array();
  bool all = true;
  for (const CriterionResult& c : run_selftest(opts)) {
    all = all && c.passed;
    criteria.push_back(json{{"id", c.id},
                            {"name", c.name},
                            {"passed", c.passed},
                            {"cases", c.cases},
                            {"failures", c.failures},
                            {"worst", c.worst},
                            {"threshold", c.threshold},
                            {"metric", c.metric},
                            {"detail", c.detail}});
  }
  r.outputs["criteria"] = std::move(criteria);
  r.outputs["seed"] = opts.seed;
  r.outputs["trials"] = opts.trials;
  r.outputs["n_max"] = opts.n_max;
  r.success = all;
  r.exit_status = all ? kExitOk : kExitSelftestFailed;
  if (!all) r.error_code = "selftest_failed";
  return r;
}

}  // namespace iwasawa
