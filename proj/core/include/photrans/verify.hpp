// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace photrans {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;  // failure context or a one-line statistic
};

// Randomized property suite over every module invariant; deterministic for a
// fixed seed. Pure-math properties run >= 1000 cases each.
std::vector<CheckResult> run_property_suite(std::uint64_t seed = 20240817);

}  // namespace photrans
