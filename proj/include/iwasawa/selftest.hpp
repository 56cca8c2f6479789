#pragma once

// Randomized property suites for the decomposition library. Each criterion
// draws its cases from per-trial seeds, so results do not depend on how many
// worker threads run them.

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "iwasawa/groups.hpp"
#include "iwasawa/indefinite.hpp"
#include "iwasawa/numkernel.hpp"

namespace iwasawa {

struct SelftestOptions {
  int n_max = 6;
  // Base trial count; 1000 reproduces the full-size suites.
  std::size_t trials = 1000;
  std::uint64_t seed = 42;
  // 0 selects std::thread::hardware_concurrency().
  unsigned threads = 0;
  // Test hook: perturbs one algorithm's output so the harness must report a
  // failure.
  bool inject_fault = false;
};

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::size_t cases = 0;
  std::size_t failures = 0;
  // Worst observed value of the criterion's headline metric and the bound it
  // is held to; see `metric` for the direction.
  double worst = 0.0;
  double threshold = 0.0;
  std::string metric;
  std::string detail;
};

// Case generators shared by the suites and the unit tests.
Signature random_signature(std::uint64_t seed, int n_max);
// dagger(g0) exp(d) g0 for admissible d and g0 in SU(p,q).
CMatrix random_admissible_q(const Signature& sig, std::uint64_t seed);
// AN factor of exp(d) g0, i.e. the dressing of an admissible diagonal.
CMatrix random_admissible_an(const Signature& sig, std::uint64_t seed);

CriterionResult check_global_decomposition(const SelftestOptions& opts);
CriterionResult check_timelike_image(const SelftestOptions& opts);
CriterionResult check_multiplicativity(const SelftestOptions& opts);
CriterionResult check_cone_characterization(const SelftestOptions& opts);
CriterionResult check_dressing_cocycle(const SelftestOptions& opts);
CriterionResult check_eigenvalue_monotonicity(const SelftestOptions& opts);
CriterionResult check_su11_oracle(const SelftestOptions& opts);
CriterionResult check_minor_ratios(const SelftestOptions& opts);
CriterionResult check_exp_log(const SelftestOptions& opts);
CriterionResult check_failure_taxonomy(const SelftestOptions& opts);

std::vector<CriterionResult> run_selftest(const SelftestOptions& opts);

}  // namespace iwasawa
