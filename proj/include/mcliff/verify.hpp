#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mcliff/hodge.hpp"

namespace mcliff::verify {

// Identity suites run against one metric with randomized trial inputs.
// Residuals are relative; a suite passes when every identity stays at or
// below the tolerance across all trials. Trials are seeded per (identity,
// trial) pair, so results are independent of thread count and identical
// across runs.
enum class Suite { all, metric_products, gauge, golden, hodge };

Suite suite_from_name(const std::string& name);  // throws parse_error
std::string suite_name(Suite s);

struct IdentityResult {
  std::string name;
  double max_residual;
  double tolerance;
  bool pass;
};

struct SuiteReport {
  std::vector<IdentityResult> identities;
  bool all_pass = true;
};

SuiteReport run_suite(const MetricExtensor& g, Suite suite, std::uint64_t seed,
                      int trials, double tolerance);

}  // namespace mcliff::verify
