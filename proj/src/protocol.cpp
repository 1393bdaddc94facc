#include "wcav/protocol.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "wcav/analytic.hpp"
#include "wcav/oracle.hpp"

namespace wcav {

namespace {

constexpr double kCavityResetTol = 1e-9;

bool cavity_reset(const SubspaceState& s) {
  return std::abs(s.photon()) < kCavityResetTol;
}

}  // namespace

ProtocolPlan plan_protocol(std::size_t m1, std::size_t m2, double f_small,
                           std::optional<Strategy> strategy_override) {
  if (m1 < 1 || m2 < 1) {
    throw std::invalid_argument("plan_protocol: group sizes must be >= 1");
  }
  if (!(f_small > 0.0) || !std::isfinite(f_small)) {
    throw std::invalid_argument("plan_protocol: reference coupling must be positive");
  }
  ProtocolPlan plan;
  plan.m1 = m1;
  plan.m2 = m2;
  // Prep the larger group; ties go to group 1.
  plan.strategy = strategy_override.value_or(
      m1 >= m2 ? Strategy::kPrepGroup1 : Strategy::kPrepGroup2);
  plan.prep_size = plan.strategy == Strategy::kPrepGroup1 ? m1 : m2;
  plan.other_size = plan.n() - plan.prep_size;
  const double n = static_cast<double>(plan.n());
  const double mp = static_cast<double>(plan.prep_size);
  plan.ratio = 1.0 + std::sqrt(n / mp);
  plan.f_other = f_small;
  plan.f_prepared = plan.ratio * f_small;
  plan.f_aux = plan.f_prepared * std::sqrt(mp);
  plan.tau = std::numbers::pi / (plan.f_aux * std::numbers::sqrt2);
  const double omega = std::sqrt(mp * plan.f_prepared * plan.f_prepared +
                                 static_cast<double>(plan.other_size) *
                                     plan.f_other * plan.f_other);
  plan.theta = std::numbers::pi / omega;
  return plan;
}

SubspaceState run_step1(const ProtocolPlan& plan, PropagatorKind kind) {
  if (plan.prep_size == 1) {
    // Single-atom register: the "-|e>" auxiliary input IS the prepared
    // state; no cavity interaction needed.
    return SubspaceState({Complex{-1.0, 0.0}, Complex{0.0, 0.0}});
  }
  // Register atoms first (coupling f_prepared), auxiliary last (f_aux).
  // tau is exactly the half-period of this partition since
  // f_aux^2 = prep_size * f_prepared^2.
  GroupPartition step1(plan.prep_size, 1, plan.f_prepared, plan.f_aux);
  if (kind == PropagatorKind::kAnalytic) {
    TwoGroupAmplitudes initial{Complex{0.0, 0.0}, Complex{-1.0, 0.0},
                               Complex{0.0, 0.0}};
    return expand_two_group(step1, two_group_at_theta(step1, initial));
  }
  std::vector<Complex> amps(plan.prep_size + 2, Complex{0.0, 0.0});
  amps[plan.prep_size] = Complex{-1.0, 0.0};
  SubspaceState initial(std::move(amps));
  return oracle_propagate(build_subspace_hamiltonian(step1.expand()), initial,
                          plan.tau);
}

SubspaceState embed_prepared(const ProtocolPlan& plan,
                             const SubspaceState& after_step1) {
  if (after_step1.n_atoms() != plan.prep_size + (plan.prep_size == 1 ? 0 : 1)) {
    throw std::invalid_argument("embed_prepared: state does not match plan");
  }
  if (plan.prep_size > 1) {
    if (std::abs(after_step1[plan.prep_size]) > kCavityResetTol) {
      throw std::invalid_argument(
          "embed_prepared: auxiliary atom still carries excitation");
    }
  }
  if (std::abs(after_step1.photon()) > kCavityResetTol) {
    throw std::invalid_argument("embed_prepared: cavity not in vacuum");
  }
  double reg_norm2 = 0.0;
  for (std::size_t k = 0; k < plan.prep_size; ++k) {
    reg_norm2 += std::norm(after_step1[k]);
  }
  if (reg_norm2 < 0.5) {
    throw std::invalid_argument("embed_prepared: register carries no excitation");
  }
  const double scale = 1.0 / std::sqrt(reg_norm2);
  std::vector<Complex> amps(plan.n() + 1, Complex{0.0, 0.0});
  for (std::size_t k = 0; k < plan.prep_size; ++k) {
    amps[k] = after_step1[k] * scale;
  }
  return SubspaceState(std::move(amps));
}

namespace {

// Rebuilds a plausible step-1 record from an already embedded register
// (auxiliary and cavity empty). run_full_protocol replaces it with the
// real one.
SubspaceState after_step1_from_prepared(const ProtocolPlan& plan,
                                        const SubspaceState& prepared) {
  const std::size_t atoms = plan.prep_size + (plan.prep_size == 1 ? 0 : 1);
  std::vector<Complex> amps(atoms + 1, Complex{0.0, 0.0});
  for (std::size_t k = 0; k < plan.prep_size; ++k) amps[k] = prepared[k];
  return SubspaceState(std::move(amps));
}

}  // namespace

ProtocolTrace run_step2(const ProtocolPlan& plan, const SubspaceState& prepared,
                        PropagatorKind kind) {
  if (prepared.n_atoms() != plan.n()) {
    throw std::invalid_argument("run_step2: register size does not match plan");
  }
  if (std::abs(prepared.photon()) > 1e-12) {
    throw std::invalid_argument("run_step2: cavity must start in vacuum");
  }
  for (std::size_t k = plan.prep_size; k < plan.n(); ++k) {
    if (std::abs(prepared[k]) > 1e-12) {
      throw std::invalid_argument(
          "run_step2: non-prepared atoms must start in the ground state");
    }
  }

  GroupPartition partition(plan.prep_size, plan.other_size, plan.f_prepared,
                           plan.f_other);
  SubspaceState final_state = [&] {
    if (kind == PropagatorKind::kAnalytic) {
      TwoGroupAmplitudes amps = restrict_two_group(partition, prepared);
      return expand_two_group(partition, two_group_at_theta(partition, amps));
    }
    return oracle_propagate(build_subspace_hamiltonian(partition.expand()),
                            prepared, plan.theta);
  }();

  const double fid = fidelity(final_state, make_w_state(plan.n(), +1, plan.n()));
  ProtocolTrace trace{plan,
                      after_step1_from_prepared(plan, prepared),
                      prepared,
                      final_state,
                      fid,
                      cavity_reset(prepared),
                      cavity_reset(final_state)};
  return trace;
}

ProtocolTrace run_full_protocol(std::size_t m1, std::size_t m2,
                                PropagatorKind kind, double f_small,
                                std::optional<Strategy> strategy_override) {
  const ProtocolPlan plan = plan_protocol(m1, m2, f_small, strategy_override);
  SubspaceState after_step1 = run_step1(plan, kind);
  SubspaceState prepared = embed_prepared(plan, after_step1);
  ProtocolTrace trace = run_step2(plan, prepared, kind);
  trace.cavity_reset_step1 = cavity_reset(after_step1);
  trace.after_step1 = std::move(after_step1);
  return trace;
}

std::pair<SubspaceState, double> negative_control_identical(std::size_t n) {
  if (n < 2) {
    throw std::invalid_argument("negative_control_identical: need n >= 2");
  }
  CouplingConfig config(std::vector<double>(n, 1.0));
  std::vector<Complex> amps(n + 1, Complex{0.0, 0.0});
  amps[0] = Complex{1.0, 0.0};
  SubspaceState state = state_at_half_period(config, SubspaceState(amps));
  const double fid = fidelity(state, make_w_state(n, +1, n));
  if (fid >= 1.0 - 1e-6) {
    throw std::logic_error(
        "negative_control_identical: identical atoms unexpectedly reached the W-state");
  }
  return {std::move(state), fid};
}

}  // namespace wcav
