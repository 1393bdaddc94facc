#include "wcav/verify.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

#include "wcav/analytic.hpp"
#include "wcav/oracle.hpp"
#include "wcav/protocol.hpp"
#include "wcav/subspace.hpp"

namespace wcav {

namespace {

using Rng = std::mt19937_64;

CouplingConfig random_config(Rng& rng, std::size_t n) {
  std::uniform_real_distribution<double> dist(0.1, 5.0);
  std::vector<double> f(n);
  for (double& v : f) v = dist(rng);
  return CouplingConfig(std::move(f));
}

SubspaceState random_state(Rng& rng, std::size_t dim) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::vector<Complex> amps(dim);
  double norm2 = 0.0;
  for (Complex& a : amps) {
    a = Complex{gauss(rng), gauss(rng)};
    norm2 += std::norm(a);
  }
  const double scale = 1.0 / std::sqrt(norm2);
  for (Complex& a : amps) a *= scale;
  return SubspaceState(std::move(amps));
}

double max_amplitude_deviation(const SubspaceState& a, const SubspaceState& b) {
  double dev = 0.0;
  for (std::size_t k = 0; k < a.dim(); ++k) {
    dev = std::max(dev, std::abs(a[k] - b[k]));
  }
  return dev;
}

BatteryResult analytic_vs_oracle(Rng& rng, const VerifyOptions& opt) {
  double dev = 0.0;
  for (int trial = 0; trial < opt.trials; ++trial) {
    std::uniform_int_distribution<std::size_t> n_dist(1, opt.n_max);
    const std::size_t n = n_dist(rng);
    CouplingConfig config = random_config(rng, n);
    SubspaceState initial = random_state(rng, n + 1);
    const double omega = collective_rabi(config).omega;
    std::uniform_real_distribution<double> t_dist(0.0,
                                                  10.0 * std::numbers::pi / omega);
    const double t = t_dist(rng);

    SubspaceState analytic = propagate_general(config, initial, t);
    SubspaceState oracle = oracle_propagate(build_subspace_hamiltonian(config),
                                            initial, t);
    double trial_dev = max_amplitude_deviation(analytic, oracle);
    if (opt.corrupt_analytic) trial_dev += 1e-6;
    dev = std::max(dev, trial_dev);
  }
  return {"analytic-vs-oracle", opt.trials, dev, 1e-9, dev <= 1e-9};
}

BatteryResult special_time_flip(Rng& rng, const VerifyOptions& opt) {
  double dev = 0.0;
  for (int trial = 0; trial < opt.trials; ++trial) {
    std::uniform_int_distribution<std::size_t> n_dist(1, opt.n_max);
    const std::size_t n = n_dist(rng);
    CouplingConfig config = random_config(rng, n);
    SubspaceState initial = random_state(rng, n + 1);
    SubspaceState half = state_at_half_period(config, initial);
    dev = std::max(dev, std::abs(half.photon() + initial.photon()));

    std::uniform_int_distribution<std::size_t> m_dist(1, n);
    const std::size_t m1 = m_dist(rng);
    std::uniform_real_distribution<double> f_dist(0.1, 5.0);
    GroupPartition part(m1, n + 1 - m1, f_dist(rng), f_dist(rng));
    SubspaceState sym_seed = random_state(rng, 3);
    double norm2 = static_cast<double>(part.m1()) * std::norm(sym_seed[0]) +
                   static_cast<double>(part.m2()) * std::norm(sym_seed[1]) +
                   std::norm(sym_seed[2]);
    const double s = 1.0 / std::sqrt(norm2);
    TwoGroupAmplitudes amps{sym_seed[0] * s, sym_seed[1] * s, sym_seed[2] * s};
    TwoGroupAmplitudes at_theta = two_group_at_theta(part, amps);
    dev = std::max(dev, std::abs(at_theta.c_ph + amps.c_ph));
  }
  // The reduced formulas negate the photonic amplitude literally, so the
  // flip must be bit-exact.
  return {"special-time-photon-flip", opt.trials, dev, 0.0, dev == 0.0};
}

BatteryResult two_group_consistency(Rng& rng, const VerifyOptions& opt) {
  double dev = 0.0;
  for (int trial = 0; trial < opt.trials; ++trial) {
    std::uniform_int_distribution<std::size_t> m_dist(1, 4);
    const std::size_t m1 = m_dist(rng);
    const std::size_t m2 = m_dist(rng);
    std::uniform_real_distribution<double> f_dist(0.1, 5.0);
    GroupPartition part(m1, m2, f_dist(rng), f_dist(rng));

    SubspaceState seed = random_state(rng, 3);
    double norm2 = static_cast<double>(m1) * std::norm(seed[0]) +
                   static_cast<double>(m2) * std::norm(seed[1]) +
                   std::norm(seed[2]);
    const double s = 1.0 / std::sqrt(norm2);
    TwoGroupAmplitudes amps{seed[0] * s, seed[1] * s, seed[2] * s};

    const double omega = two_group_rabi(part).omega;
    std::uniform_real_distribution<double> t_dist(0.0,
                                                  10.0 * std::numbers::pi / omega);
    const double t = t_dist(rng);

    SubspaceState via_groups =
        expand_two_group(part, propagate_two_group(part, amps, t));
    SubspaceState via_general =
        propagate_general(part.expand(), expand_two_group(part, amps), t);
    dev = std::max(dev, max_amplitude_deviation(via_groups, via_general));
  }
  return {"two-group-vs-general", opt.trials, dev, 1e-12, dev <= 1e-12};
}

BatteryResult full_space_battery(Rng& rng, const VerifyOptions& opt,
                                 double& excitation_dev, double& leakage_dev,
                                 double& agreement_dev) {
  excitation_dev = leakage_dev = agreement_dev = 0.0;
  int cases = 0;
  for (std::size_t n = 1; n <= 5; ++n) {
    FullSpaceConfig cfg(n, 2);
    CouplingConfig config = random_config(rng, n);
    SubspaceHamiltonian h = build_subspace_hamiltonian(config);
    std::uniform_real_distribution<double> t_dist(0.0, 8.0);

    std::vector<SubspaceState> initials;
    for (std::size_t k = 0; k <= n; ++k) {
      std::vector<Complex> amps(n + 1, Complex{0.0, 0.0});
      amps[k] = Complex{1.0, 0.0};
      initials.emplace_back(std::move(amps));
    }
    initials.push_back(random_state(rng, n + 1));

    for (const SubspaceState& initial : initials) {
      const double t = t_dist(rng);
      FullVector full0 = embed_single_excitation(cfg, initial);
      FullVector full_t = full_space_propagate(cfg, config, full0, t);

      excitation_dev = std::max(
          excitation_dev, std::abs(excitation_expectation(cfg, full_t) - 1.0));
      SectorProjection proj = project_single_excitation(cfg, full_t);
      leakage_dev = std::max(leakage_dev, std::abs(proj.leakage));
      SubspaceState sub = oracle_propagate(h, initial, t);
      for (std::size_t k = 0; k <= n; ++k) {
        agreement_dev =
            std::max(agreement_dev, std::abs(proj.amplitudes[k] - sub[k]));
      }
      ++cases;
    }
  }
  const bool ok =
      excitation_dev <= 1e-10 && leakage_dev <= 1e-12 && agreement_dev <= 1e-9;
  return {"full-space-sector", cases,
          std::max({excitation_dev, leakage_dev, agreement_dev}), 1e-9, ok};
}

BatteryResult protocol_sweep(const VerifyOptions&) {
  double dev = 0.0;
  int cases = 0;
  for (std::size_t m1 = 1; m1 <= 11; ++m1) {
    for (std::size_t m2 = 1; m1 + m2 <= 12; ++m2) {
      ProtocolTrace trace = run_full_protocol(m1, m2);
      dev = std::max(dev, 1.0 - trace.fidelity_final);
      dev = std::max(dev, std::abs(trace.final_state.photon()));
      if (!trace.cavity_reset_step1 || !trace.cavity_reset_step2) dev = 1.0;
      ++cases;
    }
  }
  return {"protocol-fidelity-sweep", cases, dev, 1e-10, dev <= 1e-10};
}

BatteryResult protocol_oracle_agreement(const VerifyOptions&) {
  double dev = 0.0;
  int cases = 0;
  for (std::size_t m1 = 1; m1 <= 7; ++m1) {
    for (std::size_t m2 = 1; m1 + m2 <= 8; ++m2) {
      ProtocolTrace a = run_full_protocol(m1, m2, PropagatorKind::kAnalytic);
      ProtocolTrace o = run_full_protocol(m1, m2, PropagatorKind::kOracle);
      dev = std::max(dev, max_amplitude_deviation(a.final_state, o.final_state));
      dev = std::max(dev, max_amplitude_deviation(a.after_step1, o.after_step1));
      ++cases;
    }
  }
  return {"protocol-analytic-vs-oracle", cases, dev, 1e-9, dev <= 1e-9};
}

BatteryResult negative_controls(Rng& rng, const VerifyOptions&) {
  double dev = 0.0;
  int cases = 0;
  for (std::size_t n = 2; n <= 8; ++n) {
    auto [state, fid] = negative_control_identical(n);
    const double inv_n = 1.0 / static_cast<double>(n);
    dev = std::max(dev, std::abs(state[0] - Complex{1.0 - 2.0 * inv_n, 0.0}));
    for (std::size_t k = 1; k < n; ++k) {
      dev = std::max(dev, std::abs(state[k] + Complex{2.0 * inv_n, 0.0}));
    }
    if (fid >= 1.0 - 1e-6) dev = 1.0;

    // Distinct couplings give pairwise-distinct weight magnitudes.
    std::uniform_real_distribution<double> f_dist(0.1, 5.0);
    std::vector<double> f(n);
    for (std::size_t j = 0; j < n; ++j) {
      f[j] = f_dist(rng) + static_cast<double>(j);  // force distinctness
    }
    SubspaceState outcome = single_excitation_outcome(CouplingConfig(f), 1);
    for (std::size_t p = 1; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        if (std::abs(std::abs(outcome[p]) - std::abs(outcome[q])) < 1e-12) {
          dev = 1.0;
        }
      }
    }
    ++cases;
  }
  return {"negative-controls", cases, dev, 1e-12, dev <= 1e-12};
}

}  // namespace

std::vector<BatteryResult> run_verification(const VerifyOptions& options) {
  Rng rng(options.seed);
  std::vector<BatteryResult> results;
  results.push_back(analytic_vs_oracle(rng, options));
  results.push_back(special_time_flip(rng, options));
  results.push_back(two_group_consistency(rng, options));
  double exc, leak, agree;
  results.push_back(full_space_battery(rng, options, exc, leak, agree));
  results.push_back(protocol_sweep(options));
  results.push_back(protocol_oracle_agreement(options));
  results.push_back(negative_controls(rng, options));
  if (options.tolerance_scale != 1.0) {
    for (BatteryResult& r : results) {
      r.tolerance *= options.tolerance_scale;
      r.passed = r.max_deviation <= r.tolerance;
    }
  }
  return results;
}

bool all_passed(const std::vector<BatteryResult>& results) {
  return std::all_of(results.begin(), results.end(),
                     [](const BatteryResult& r) { return r.passed; });
}

std::string format_report(const std::vector<BatteryResult>& results) {
  std::ostringstream out;
  for (const BatteryResult& r : results) {
    char dev[32], tol[32];
    std::snprintf(dev, sizeof(dev), "%.3e", r.max_deviation);
    std::snprintf(tol, sizeof(tol), "%.0e", r.tolerance);
    out << (r.passed ? "PASS" : "FAIL") << "  " << r.name << "  cases=" << r.cases
        << "  max_deviation=" << dev << "  tolerance=" << tol << "\n";
  }
  out << (all_passed(results) ? "all batteries passed" : "verification FAILED")
      << "\n";
  return out.str();
}

}  // namespace wcav
