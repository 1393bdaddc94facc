#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "wcav/protocol.hpp"

namespace wcav {

/// Dimensionless step durations, time scaled by f1/pi with f1 the
/// prepared group's coupling: tau_tilde = 1/sqrt(2 M1) and
/// theta_tilde = (sqrt(M1)+sqrt(N)) / sqrt(2 M1 (N + sqrt(M1 N))).
struct TimingRecord {
  std::size_t m1, m2;
  double tau_tilde;
  double theta_tilde;
  double total;
};

TimingRecord timing(std::size_t m1, std::size_t m2);

/// Row-major (m1 outer, m2 inner) grid of timing records.
std::vector<TimingRecord> figure1_grid(std::size_t m1_max, std::size_t m2_max);

/// Faster of the two strategy orientations: prepping group 1 costs
/// timing(m1, m2), prepping group 2 costs timing(m2, m1).
std::pair<Strategy, TimingRecord> best_strategy_time(std::size_t m1,
                                                     std::size_t m2);

}  // namespace wcav
