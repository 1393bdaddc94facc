#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace wcav {

struct BatteryResult {
  std::string name;
  int cases;
  double max_deviation;
  double tolerance;
  bool passed;
};

struct VerifyOptions {
  std::uint64_t seed = 42;
  int trials = 100;
  std::size_t n_max = 8;  // largest random atom count
  double tolerance_scale = 1.0;  // multiplies every battery tolerance
  // Test hook: perturbs the analytic path so the harness itself can be
  // checked to fail.
  bool corrupt_analytic = false;
};

/// Cross-module invariant batteries: analytic vs eigendecomposition
/// oracle, full-space sector conservation, special-time photon flip,
/// protocol fidelity sweep, negative controls, two-group consistency.
/// Deterministic given the seed.
std::vector<BatteryResult> run_verification(const VerifyOptions& options);

bool all_passed(const std::vector<BatteryResult>& results);

std::string format_report(const std::vector<BatteryResult>& results);

}  // namespace wcav
