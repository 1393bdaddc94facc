#include "wcav/timing.hpp"

#include <cmath>
#include <stdexcept>

namespace wcav {

TimingRecord timing(std::size_t m1, std::size_t m2) {
  if (m1 < 1 || m2 < 1) {
    throw std::invalid_argument("timing: group sizes must be >= 1");
  }
  const double a = static_cast<double>(m1);
  const double n = static_cast<double>(m1 + m2);
  TimingRecord rec;
  rec.m1 = m1;
  rec.m2 = m2;
  rec.tau_tilde = 1.0 / std::sqrt(2.0 * a);
  rec.theta_tilde = (std::sqrt(a) + std::sqrt(n)) /
                    std::sqrt(2.0 * a * (n + std::sqrt(a * n)));
  rec.total = rec.tau_tilde + rec.theta_tilde;
  return rec;
}

std::vector<TimingRecord> figure1_grid(std::size_t m1_max, std::size_t m2_max) {
  if (m1_max < 1 || m2_max < 1) {
    throw std::invalid_argument("figure1_grid: bounds must be >= 1");
  }
  std::vector<TimingRecord> grid;
  grid.reserve(m1_max * m2_max);
  for (std::size_t m1 = 1; m1 <= m1_max; ++m1) {
    for (std::size_t m2 = 1; m2 <= m2_max; ++m2) {
      grid.push_back(timing(m1, m2));
    }
  }
  return grid;
}

std::pair<Strategy, TimingRecord> best_strategy_time(std::size_t m1,
                                                     std::size_t m2) {
  const TimingRecord prep1 = timing(m1, m2);
  const TimingRecord prep2 = timing(m2, m1);
  if (prep2.total < prep1.total) {
    return {Strategy::kPrepGroup2, prep2};
  }
  return {Strategy::kPrepGroup1, prep1};
}

}  // namespace wcav
