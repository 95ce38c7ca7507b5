#pragma once

// Named invariant suites. Each suite returns one CheckResult per check; the
// combined report is sorted by suite, then by id (digit runs compare
// numerically), so output does not depend on execution order.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace riesz {

struct CheckResult {
  std::string suite;
  std::string id;
  bool passed = false;
  std::string detail;  // witness on failure, note otherwise (may be empty)
};

struct VerifyOptions {
  long max_m = 6;
  long digits = 50;
  std::uint64_t seed = 20240229;
};

/// "prop1", "prop2", "prop3", "prop4", "appendix", "oracle".
const std::vector<std::string> &suite_names();

/// Runs one suite, or every suite for "all". Throws std::invalid_argument for
/// an unknown name.
std::vector<CheckResult> run_suite(std::string_view name,
                                   const VerifyOptions &options);

bool all_passed(const std::vector<CheckResult> &results);

/// Orders ids like "m=2" before "m=10".
bool natural_less(std::string_view a, std::string_view b);

} // namespace riesz
