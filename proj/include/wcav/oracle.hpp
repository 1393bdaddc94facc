#pragma once

#include <Eigen/Dense>

#include "wcav/subspace.hpp"

namespace wcav {

/// Interaction Hamiltonian restricted to the single-excitation basis:
/// an (N+1)x(N+1) real symmetric arrowhead with the couplings in the
/// last row/column and zeros elsewhere. Nonzero eigenvalues are +-Omega.
struct SubspaceHamiltonian {
  Eigen::MatrixXd matrix;
};

SubspaceHamiltonian build_subspace_hamiltonian(const CouplingConfig& config);

/// exp(-iHt) applied via real-symmetric eigendecomposition. This is the
/// brute-force cross-check path, algorithmically independent of the
/// trigonometric closed forms.
SubspaceState oracle_propagate(const SubspaceHamiltonian& h,
                               const SubspaceState& initial, double t);

/// Untruncated tensor-product space of N atoms and a cavity mode cut
/// off at photon_cutoff photons. Dimension 2^N * (photon_cutoff + 1);
/// n_atoms is capped at 6 to keep dense exponentials sub-second.
struct FullSpaceConfig {
  std::size_t n_atoms;
  std::size_t photon_cutoff;  // >= 1

  FullSpaceConfig(std::size_t atoms, std::size_t cutoff);

  std::size_t dim() const {
    return (std::size_t{1} << n_atoms) * (photon_cutoff + 1);
  }

  /// Basis index: atom-configuration bits (atom 1 = most significant)
  /// times photon number, photon fastest-varying.
  std::size_t index(std::size_t atom_bits, std::size_t n_photons) const {
    return atom_bits * (photon_cutoff + 1) + n_photons;
  }
};

using FullVector = Eigen::VectorXcd;

Eigen::MatrixXd build_full_hamiltonian(const FullSpaceConfig& cfg,
                                       const CouplingConfig& config);

FullVector full_space_propagate(const FullSpaceConfig& cfg,
                                const CouplingConfig& config,
                                const FullVector& initial, double t);

/// Expectation of the excitation number (photons plus excited atoms).
double excitation_expectation(const FullSpaceConfig& cfg,
                              const FullVector& state);

/// Lifts a single-excitation state into the full space.
FullVector embed_single_excitation(const FullSpaceConfig& cfg,
                                   const SubspaceState& state);

/// Amplitudes on the single-excitation basis kets of a full-space state
/// (no renormalization), plus the total probability outside that sector.
struct SectorProjection {
  std::vector<Complex> amplitudes;  // length N+1, subspace ordering
  double leakage;
};

SectorProjection project_single_excitation(const FullSpaceConfig& cfg,
                                           const FullVector& state);

}  // namespace wcav
