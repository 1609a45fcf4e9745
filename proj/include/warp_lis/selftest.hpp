#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace warp_lis {

struct SelftestOptions {
  int max_len = 8;  ///< longest random series
  int trials = 100;  ///< random instances per suite
  std::uint64_t seed = 1;
};

struct SuiteReport {
  std::string name;
  int trials = 0;
  int failures = 0;
  std::string first_failure;  ///< empty when the suite passed
};

struct SelftestReport {
  bool passed = true;
  std::vector<SuiteReport> suites;
};

/// Randomized equivalence suites against the dynamic-programming and scan
/// oracles: reduction, seaweed, range-index, semilocal, solvers. Deterministic
/// for a fixed seed.
SelftestReport run_selftest(const SelftestOptions& options);

}  // namespace warp_lis
