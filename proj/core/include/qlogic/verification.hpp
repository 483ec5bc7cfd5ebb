#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qlogic/types.hpp"

namespace qlogic {

struct CheckContext {
  double tolerance = kTolerance;
  std::uint64_t seed = 1;
};

struct CheckResult {
  std::string id;      // "01" .. "12"
  std::string name;    // short descriptive key
  bool passed = false;
  std::string detail;  // one-line summary of what was compared
};

// The twelve built-in worked-example and property checks, in order. All
// expected values are frozen constants; the sampled checks are exact-verdict
// assertions, so the pass/fail table does not depend on the seed.
std::vector<CheckResult> run_acceptance_checks(const CheckContext& ctx = {});

}  // namespace qlogic
