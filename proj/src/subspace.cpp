#include "wcav/subspace.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace wcav {

CouplingConfig::CouplingConfig(std::vector<double> couplings,
                               std::size_t reference_index)
    : couplings_(std::move(couplings)), reference_index_(reference_index) {
  if (couplings_.empty()) {
    throw std::invalid_argument("CouplingConfig: need at least one atom");
  }
  if (reference_index_ >= couplings_.size()) {
    throw std::invalid_argument("CouplingConfig: reference index out of range");
  }
  for (double f : couplings_) {
    if (!(f > 0.0) || !std::isfinite(f)) {
      throw std::invalid_argument(
          "CouplingConfig: every coupling must be positive and finite");
    }
  }
}

bool CouplingConfig::all_equal(double tol) const {
  for (double f : couplings_) {
    if (std::abs(f - couplings_.front()) > tol) return false;
  }
  return true;
}

namespace {
double squared_norm(const std::vector<Complex>& amps) {
  double s = 0.0;
  for (const Complex& a : amps) s += std::norm(a);
  return s;
}
}  // namespace

SubspaceState::SubspaceState(std::vector<Complex> amplitudes)
    : amplitudes_(std::move(amplitudes)) {
  if (amplitudes_.size() < 2) {
    throw std::invalid_argument("SubspaceState: need at least N=1 atom");
  }
  double n2 = squared_norm(amplitudes_);
  if (std::abs(n2 - 1.0) > kNormTolConstruct) {
    throw std::invalid_argument("SubspaceState: not normalized, |norm^2-1| = " +
                                std::to_string(std::abs(n2 - 1.0)));
  }
}

SubspaceState::SubspaceState(std::vector<Complex> amplitudes, Unchecked)
    : amplitudes_(std::move(amplitudes)) {}

SubspaceState SubspaceState::from_propagation(std::vector<Complex> amplitudes) {
  if (amplitudes.size() < 2) {
    throw std::invalid_argument("SubspaceState: need at least N=1 atom");
  }
  double n2 = squared_norm(amplitudes);
  if (std::abs(n2 - 1.0) > kNormTolPropagate) {
    throw std::invalid_argument(
        "SubspaceState: propagation drifted off the unit sphere, |norm^2-1| = " +
        std::to_string(std::abs(n2 - 1.0)));
  }
  return SubspaceState(std::move(amplitudes), Unchecked{});
}

double SubspaceState::norm() const { return std::sqrt(squared_norm(amplitudes_)); }

GroupPartition::GroupPartition(std::size_t m1, std::size_t m2, double f1,
                               double f2)
    : m1_(m1), m2_(m2), f1_(f1), f2_(f2) {
  if (m1_ < 1 || m2_ < 1) {
    throw std::invalid_argument("GroupPartition: each group needs >= 1 atom");
  }
  if (!(f1_ > 0.0) || !(f2_ > 0.0) || !std::isfinite(f1_) ||
      !std::isfinite(f2_)) {
    throw std::invalid_argument(
        "GroupPartition: couplings must be positive and finite");
  }
}

CouplingConfig GroupPartition::expand() const {
  std::vector<double> f(n());
  for (std::size_t j = 0; j < m1_; ++j) f[j] = f1_;
  for (std::size_t j = m1_; j < n(); ++j) f[j] = f2_;
  return CouplingConfig(std::move(f));
}

SubspaceState make_w_state(std::size_t n, int sign, std::size_t embed_into,
                           std::size_t offset) {
  if (n == 0) throw std::invalid_argument("make_w_state: n must be positive");
  if (sign != 1 && sign != -1) {
    throw std::invalid_argument("make_w_state: sign must be +1 or -1");
  }
  if (offset < 1 || offset + n - 1 > embed_into) {
    throw std::invalid_argument("make_w_state: embedding out of range");
  }
  std::vector<Complex> amps(embed_into + 1, Complex{0.0, 0.0});
  const double c = static_cast<double>(sign) / std::sqrt(static_cast<double>(n));
  for (std::size_t k = offset - 1; k < offset - 1 + n; ++k) amps[k] = c;
  return SubspaceState(std::move(amps));
}

double fidelity(const SubspaceState& a, const SubspaceState& b) {
  if (a.dim() != b.dim()) {
    throw std::invalid_argument("fidelity: dimension mismatch");
  }
  Complex overlap{0.0, 0.0};
  for (std::size_t k = 0; k < a.dim(); ++k) {
    overlap += std::conj(a[k]) * b[k];
  }
  return std::norm(overlap);
}

}  // namespace wcav
