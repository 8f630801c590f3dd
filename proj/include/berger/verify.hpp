#pragma once

#include <string>
#include <vector>

#include "berger/model.hpp"

namespace berger {

enum class VerifyLevel { kQuick, kFull };

struct PropertyResult {
  std::string name;
  bool passed;
  std::string detail;
};

/// Runs the named property checks for one metric. Quick covers the root
/// solvers, cut-time profile and diameter; full adds the geodesic oracles.
/// Checks on tau3 need eta > 0; for other metrics they run on a reference
/// metric with the same I3 and I1 = 2 I3 (eta = 1), noted in the detail.
std::vector<PropertyResult> run_verification(const BergerMetric& m, VerifyLevel level);

}  // namespace berger
