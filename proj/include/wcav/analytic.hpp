#pragma once

#include "wcav/subspace.hpp"

namespace wcav {

/// Collective Rabi frequency: sqrt of the sum of squared couplings.
/// Sets the half-period pi/omega at which the cavity decouples.
struct RabiFrequency {
  double omega;
};

RabiFrequency collective_rabi(const CouplingConfig& config);

/// Closed-form propagation of a single-excitation state for arbitrary
/// couplings; t may be negative (inverse evolution). Evaluated in the
/// trigonometric form, independent of the eigendecomposition oracle.
SubspaceState propagate_general(const CouplingConfig& config,
                                const SubspaceState& initial, double t);

/// State at t = pi/Omega via the reduced formulas (the photonic
/// amplitude is negated exactly, not through cos(pi) round-off).
SubspaceState state_at_half_period(const CouplingConfig& config,
                                   const SubspaceState& initial);

/// Half-period outcome when only atom q (1-based) starts excited:
/// 1 - 2 f_q^2/Omega^2 on atom q, -2 f_q f_p/Omega^2 on each other atom,
/// cavity back in vacuum.
SubspaceState single_excitation_outcome(const CouplingConfig& config,
                                        std::size_t q);

/// Per-group common amplitudes of a group-symmetric state:
/// every group-1 atom carries c_m, every group-2 atom c_n.
struct TwoGroupAmplitudes {
  Complex c_m;
  Complex c_n;
  Complex c_ph;
};

/// Two-group collective frequency sqrt(M1 f1^2 + M2 f2^2).
RabiFrequency two_group_rabi(const GroupPartition& partition);

TwoGroupAmplitudes propagate_two_group(const GroupPartition& partition,
                                       const TwoGroupAmplitudes& initial,
                                       double t);

/// Reduced evolution at t = theta = pi/omega.
TwoGroupAmplitudes two_group_at_theta(const GroupPartition& partition,
                                      const TwoGroupAmplitudes& initial);

/// Reads the per-group amplitudes off a full state, rejecting states
/// that are not symmetric within each group (tolerance 1e-12).
TwoGroupAmplitudes restrict_two_group(const GroupPartition& partition,
                                      const SubspaceState& state);

/// Expands per-group amplitudes back to a full N+1 state.
SubspaceState expand_two_group(const GroupPartition& partition,
                               const TwoGroupAmplitudes& amps);

}  // namespace wcav
