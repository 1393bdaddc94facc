#include "wcav/analytic.hpp"

#include <cmath>
#include <stdexcept>

namespace wcav {

namespace {
constexpr Complex kMinusI{0.0, -1.0};
}

RabiFrequency collective_rabi(const CouplingConfig& config) {
  double s = 0.0;
  for (double f : config.values()) s += f * f;
  return RabiFrequency{std::sqrt(s)};
}

SubspaceState propagate_general(const CouplingConfig& config,
                                const SubspaceState& initial, double t) {
  const std::size_t n = config.size();
  if (initial.n_atoms() != n) {
    throw std::invalid_argument("propagate_general: dimension mismatch");
  }
  const double omega = collective_rabi(config).omega;
  const double omega2 = omega * omega;
  const double c = std::cos(omega * t);
  const double s = std::sin(omega * t);

  // S = sum_j f_j C_j(0); the per-k cross sum is S - f_k C_k(0).
  Complex weighted_sum{0.0, 0.0};
  for (std::size_t k = 0; k < n; ++k) weighted_sum += config[k] * initial[k];

  std::vector<Complex> out(n + 1);
  for (std::size_t k = 0; k < n; ++k) {
    const double fk = config[k];
    const Complex cross = weighted_sum - fk * initial[k];
    out[k] = ((fk * fk * c + (omega2 - fk * fk)) / omega2) * initial[k] +
             (fk * (c - 1.0) / omega2) * cross +
             kMinusI * (fk * s / omega) * initial[n];
  }
  out[n] = kMinusI * (s / omega) * weighted_sum + c * initial[n];
  return SubspaceState::from_propagation(std::move(out));
}

SubspaceState state_at_half_period(const CouplingConfig& config,
                                   const SubspaceState& initial) {
  const std::size_t n = config.size();
  if (initial.n_atoms() != n) {
    throw std::invalid_argument("state_at_half_period: dimension mismatch");
  }
  const double omega2 = [&] {
    double s = 0.0;
    for (double f : config.values()) s += f * f;
    return s;
  }();

  Complex weighted_sum{0.0, 0.0};
  for (std::size_t k = 0; k < n; ++k) weighted_sum += config[k] * initial[k];

  std::vector<Complex> out(n + 1);
  for (std::size_t k = 0; k < n; ++k) {
    const double fk = config[k];
    const Complex cross = weighted_sum - fk * initial[k];
    out[k] = ((omega2 - 2.0 * fk * fk) / omega2) * initial[k] -
             (2.0 * fk / omega2) * cross;
  }
  out[n] = -initial[n];  // exact photon flip
  return SubspaceState::from_propagation(std::move(out));
}

SubspaceState single_excitation_outcome(const CouplingConfig& config,
                                        std::size_t q) {
  const std::size_t n = config.size();
  if (q < 1 || q > n) {
    throw std::invalid_argument("single_excitation_outcome: q out of range");
  }
  double omega2 = 0.0;
  for (double f : config.values()) omega2 += f * f;
  const double fq = config[q - 1];

  std::vector<Complex> out(n + 1, Complex{0.0, 0.0});
  for (std::size_t p = 0; p < n; ++p) {
    out[p] = (p == q - 1) ? Complex{1.0 - 2.0 * fq * fq / omega2, 0.0}
                          : Complex{-2.0 * fq * config[p] / omega2, 0.0};
  }
  return SubspaceState::from_propagation(std::move(out));
}

RabiFrequency two_group_rabi(const GroupPartition& partition) {
  const double m1 = static_cast<double>(partition.m1());
  const double m2 = static_cast<double>(partition.m2());
  return RabiFrequency{std::sqrt(m1 * partition.f1() * partition.f1() +
                                 m2 * partition.f2() * partition.f2())};
}

TwoGroupAmplitudes propagate_two_group(const GroupPartition& partition,
                                       const TwoGroupAmplitudes& initial,
                                       double t) {
  const double m1 = static_cast<double>(partition.m1());
  const double m2 = static_cast<double>(partition.m2());
  const double f1 = partition.f1();
  const double f2 = partition.f2();
  const double omega = two_group_rabi(partition).omega;
  const double omega2 = omega * omega;
  const double c = std::cos(omega * t);
  const double s = std::sin(omega * t);

  TwoGroupAmplitudes out;
  out.c_m = ((m1 * f1 * f1 * c + m2 * f2 * f2) / omega2) * initial.c_m +
            (m2 * f1 * f2 * (c - 1.0) / omega2) * initial.c_n +
            kMinusI * (f1 * s / omega) * initial.c_ph;
  out.c_n = (m1 * f1 * f2 * (c - 1.0) / omega2) * initial.c_m +
            ((m1 * f1 * f1 + m2 * f2 * f2 * c) / omega2) * initial.c_n +
            kMinusI * (f2 * s / omega) * initial.c_ph;
  out.c_ph = kMinusI * (m1 * f1 * s / omega) * initial.c_m +
             kMinusI * (m2 * f2 * s / omega) * initial.c_n + c * initial.c_ph;
  return out;
}

TwoGroupAmplitudes two_group_at_theta(const GroupPartition& partition,
                                      const TwoGroupAmplitudes& initial) {
  const double m1 = static_cast<double>(partition.m1());
  const double m2 = static_cast<double>(partition.m2());
  const double f1 = partition.f1();
  const double f2 = partition.f2();
  const double omega2 = m1 * f1 * f1 + m2 * f2 * f2;

  TwoGroupAmplitudes out;
  out.c_m = ((m2 * f2 * f2 - m1 * f1 * f1) / omega2) * initial.c_m -
            (2.0 * m2 * f1 * f2 / omega2) * initial.c_n;
  out.c_n = (-2.0 * m1 * f1 * f2 / omega2) * initial.c_m +
            ((m1 * f1 * f1 - m2 * f2 * f2) / omega2) * initial.c_n;
  out.c_ph = -initial.c_ph;  // exact photon flip
  return out;
}

TwoGroupAmplitudes restrict_two_group(const GroupPartition& partition,
                                      const SubspaceState& state) {
  if (state.n_atoms() != partition.n()) {
    throw std::invalid_argument("restrict_two_group: dimension mismatch");
  }
  constexpr double tol = 1e-12;
  TwoGroupAmplitudes out;
  out.c_m = state[0];
  out.c_n = state[partition.m1()];
  out.c_ph = state.photon();
  for (std::size_t k = 0; k < partition.m1(); ++k) {
    if (std::abs(state[k] - out.c_m) > tol) {
      throw std::invalid_argument(
          "restrict_two_group: group-1 amplitudes are not symmetric");
    }
  }
  for (std::size_t k = partition.m1(); k < partition.n(); ++k) {
    if (std::abs(state[k] - out.c_n) > tol) {
      throw std::invalid_argument(
          "restrict_two_group: group-2 amplitudes are not symmetric");
    }
  }
  return out;
}

SubspaceState expand_two_group(const GroupPartition& partition,
                               const TwoGroupAmplitudes& amps) {
  std::vector<Complex> out(partition.n() + 1);
  for (std::size_t k = 0; k < partition.m1(); ++k) out[k] = amps.c_m;
  for (std::size_t k = partition.m1(); k < partition.n(); ++k) out[k] = amps.c_n;
  out[partition.n()] = amps.c_ph;
  return SubspaceState::from_propagation(std::move(out));
}

}  // namespace wcav
