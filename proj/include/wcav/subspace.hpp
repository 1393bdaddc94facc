#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace wcav {

using Complex = std::complex<double>;

// Tolerances of the domain contracts: states must be normalized to
// kNormTolConstruct when built directly and may drift up to
// kNormTolPropagate after a propagation step.
inline constexpr double kNormTolConstruct = 1e-12;
inline constexpr double kNormTolPropagate = 1e-9;

/// Per-atom coupling strengths to the cavity mode, dimensionless:
/// each value is the physical coupling divided by the coupling of the
/// reference atom, and times are measured in units of the inverse
/// reference coupling.
class CouplingConfig {
 public:
  explicit CouplingConfig(std::vector<double> couplings,
                          std::size_t reference_index = 0);

  std::size_t size() const { return couplings_.size(); }
  double operator[](std::size_t j) const { return couplings_[j]; }  // 0-based
  const std::vector<double>& values() const { return couplings_; }
  std::size_t reference_index() const { return reference_index_; }

  /// True when every coupling agrees with the first within tol.
  bool all_equal(double tol = 1e-12) const;

 private:
  std::vector<double> couplings_;
  std::size_t reference_index_;
};

/// Complex amplitudes over the single-excitation basis.
///
/// Index k in [0, N) is the ket with only atom k+1 excited and the
/// cavity in vacuum; index N is the all-ground, one-photon ket.
/// Atoms of group 1 always occupy the leading slots (see GroupPartition).
class SubspaceState {
 public:
  /// Validates normalization to kNormTolConstruct.
  explicit SubspaceState(std::vector<Complex> amplitudes);

  /// For propagator outputs: validates to kNormTolPropagate only.
  static SubspaceState from_propagation(std::vector<Complex> amplitudes);

  std::size_t n_atoms() const { return amplitudes_.size() - 1; }
  std::size_t dim() const { return amplitudes_.size(); }
  const Complex& operator[](std::size_t k) const { return amplitudes_[k]; }
  const std::vector<Complex>& amplitudes() const { return amplitudes_; }

  Complex atom(std::size_t q) const { return amplitudes_[q - 1]; }  // 1-based
  Complex photon() const { return amplitudes_.back(); }

  double norm() const;

 private:
  struct Unchecked {};
  SubspaceState(std::vector<Complex> amplitudes, Unchecked);

  std::vector<Complex> amplitudes_;
};

/// Two groups of atoms sharing a coupling within a group. Atoms
/// 1..m1 are group 1 and atoms m1+1..m1+m2 are group 2; every module
/// consumes this ordering rather than re-declaring it.
class GroupPartition {
 public:
  GroupPartition(std::size_t m1, std::size_t m2, double f1, double f2);

  std::size_t m1() const { return m1_; }
  std::size_t m2() const { return m2_; }
  std::size_t n() const { return m1_ + m2_; }
  double f1() const { return f1_; }
  double f2() const { return f2_; }

  /// Expands to the per-atom coupling list (f1 repeated m1 times, then
  /// f2 repeated m2 times).
  CouplingConfig expand() const;

 private:
  std::size_t m1_, m2_;
  double f1_, f2_;
};

/// A W-state label: n atoms sharing one excitation with amplitude
/// sign/sqrt(n) each.
struct WState {
  std::size_t n;
  int sign;  // +1 or -1
};

/// Builds sign/sqrt(n) on atom slots offset..offset+n-1 (1-based) of an
/// embed_into-atom register, zero elsewhere including the photon slot.
SubspaceState make_w_state(std::size_t n, int sign, std::size_t embed_into,
                           std::size_t offset = 1);

inline SubspaceState make_w_state(const WState& w, std::size_t embed_into,
                                  std::size_t offset = 1) {
  return make_w_state(w.n, w.sign, embed_into, offset);
}

/// Global-phase-insensitive overlap |<a|b>|^2.
double fidelity(const SubspaceState& a, const SubspaceState& b);

}  // namespace wcav
