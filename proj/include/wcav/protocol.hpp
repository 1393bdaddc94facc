#pragma once

#include <optional>
#include <utility>

#include "wcav/subspace.hpp"

namespace wcav {

/// Which group hosts the intermediate W-state of step 1. The prepared
/// group always gets the larger coupling.
enum class Strategy { kPrepGroup1, kPrepGroup2 };

enum class PropagatorKind { kAnalytic, kOracle };

/// Derived couplings and durations of the two-step scheme.
///
/// The prepared group of prep_size atoms carries coupling f_prepared =
/// ratio * f_other with ratio = 1 + sqrt(N / prep_size); the auxiliary
/// atom of step 1 couples at f_aux = f_prepared * sqrt(prep_size).
/// Step 1 runs for tau = pi / (f_aux sqrt(2)), step 2 for theta = pi /
/// sqrt(prep_size f_prepared^2 + other_size f_other^2).
struct ProtocolPlan {
  std::size_t m1, m2;
  Strategy strategy;
  std::size_t prep_size, other_size;
  double f_prepared, f_other, f_aux;
  double ratio;
  double tau, theta;

  std::size_t n() const { return m1 + m2; }
};

ProtocolPlan plan_protocol(std::size_t m1, std::size_t m2,
                           double f_small = 1.0,
                           std::optional<Strategy> strategy_override = {});

/// Record of one end-to-end run. States are stored with the prepared
/// group in the leading atom slots (the sub-index interchange of the
/// group-2 strategy relabels the atoms; the target W-state is symmetric
/// so fidelity is unaffected).
struct ProtocolTrace {
  ProtocolPlan plan;
  SubspaceState after_step1;     // prep_size+1 atoms, auxiliary last
  SubspaceState prepared_state;  // N atoms, step-1 register embedded
  SubspaceState final_state;     // N atoms after step 2
  double fidelity_final;         // against the +-signed N-atom W-state
  bool cavity_reset_step1;
  bool cavity_reset_step2;
};

/// Step 1: the auxiliary atom (excited, amplitude -1) dumps a shared
/// excitation into the prepared group. Returns the prep_size+1 atom
/// state after time tau, auxiliary atom in the last slot. For
/// prep_size == 1 the step is trivial and the register is set directly.
SubspaceState run_step1(const ProtocolPlan& plan,
                        PropagatorKind kind = PropagatorKind::kAnalytic);

/// Embeds a step-1 output into the N-atom register (prepared group
/// first, other group ground, cavity vacuum).
SubspaceState embed_prepared(const ProtocolPlan& plan,
                             const SubspaceState& after_step1);

/// Step 2: evolve the embedded register for theta and score against
/// the N-atom W-state.
ProtocolTrace run_step2(const ProtocolPlan& plan,
                        const SubspaceState& prepared,
                        PropagatorKind kind = PropagatorKind::kAnalytic);

ProtocolTrace run_full_protocol(std::size_t m1, std::size_t m2,
                                PropagatorKind kind = PropagatorKind::kAnalytic,
                                double f_small = 1.0,
                                std::optional<Strategy> strategy_override = {});

/// Half-period evolution with all couplings equal and one atom excited:
/// entangled but never the W-state. Returns the state and its W-state
/// fidelity (always below 1 - 1e-6).
std::pair<SubspaceState, double> negative_control_identical(std::size_t n);

}  // namespace wcav
