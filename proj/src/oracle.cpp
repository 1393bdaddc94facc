#include "wcav/oracle.hpp"

#include <cmath>
#include <stdexcept>

namespace wcav {

SubspaceHamiltonian build_subspace_hamiltonian(const CouplingConfig& config) {
  const Eigen::Index n = static_cast<Eigen::Index>(config.size());
  Eigen::MatrixXd h = Eigen::MatrixXd::Zero(n + 1, n + 1);
  for (Eigen::Index k = 0; k < n; ++k) {
    h(k, n) = config[static_cast<std::size_t>(k)];
    h(n, k) = h(k, n);
  }
  return SubspaceHamiltonian{std::move(h)};
}

namespace {

Eigen::VectorXcd expi_apply(const Eigen::MatrixXd& h, const Eigen::VectorXcd& v,
                            double t) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(h);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("eigendecomposition failed");
  }
  const Eigen::MatrixXd& vecs = solver.eigenvectors();
  Eigen::VectorXcd coeffs = vecs.transpose() * v;
  for (Eigen::Index i = 0; i < coeffs.size(); ++i) {
    const double phase = -solver.eigenvalues()(i) * t;
    coeffs(i) *= Complex{std::cos(phase), std::sin(phase)};
  }
  return vecs * coeffs;
}

}  // namespace

SubspaceState oracle_propagate(const SubspaceHamiltonian& h,
                               const SubspaceState& initial, double t) {
  const Eigen::Index dim = h.matrix.rows();
  if (static_cast<std::size_t>(dim) != initial.dim()) {
    throw std::invalid_argument("oracle_propagate: dimension mismatch");
  }
  Eigen::VectorXcd v(dim);
  for (Eigen::Index k = 0; k < dim; ++k) {
    v(k) = initial[static_cast<std::size_t>(k)];
  }
  Eigen::VectorXcd out = expi_apply(h.matrix, v, t);
  std::vector<Complex> amps(out.data(), out.data() + out.size());
  return SubspaceState::from_propagation(std::move(amps));
}

FullSpaceConfig::FullSpaceConfig(std::size_t atoms, std::size_t cutoff)
    : n_atoms(atoms), photon_cutoff(cutoff) {
  if (n_atoms < 1 || n_atoms > 6) {
    throw std::invalid_argument("FullSpaceConfig: n_atoms must be in [1, 6]");
  }
  if (photon_cutoff < 1) {
    throw std::invalid_argument("FullSpaceConfig: photon_cutoff must be >= 1");
  }
}

Eigen::MatrixXd build_full_hamiltonian(const FullSpaceConfig& cfg,
                                       const CouplingConfig& config) {
  if (config.size() != cfg.n_atoms) {
    throw std::invalid_argument("build_full_hamiltonian: atom count mismatch");
  }
  const std::size_t dim = cfg.dim();
  const std::size_t n_configs = std::size_t{1} << cfg.n_atoms;
  Eigen::MatrixXd h = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(dim),
                                            static_cast<Eigen::Index>(dim));
  for (std::size_t bits = 0; bits < n_configs; ++bits) {
    for (std::size_t nph = 0; nph < cfg.photon_cutoff; ++nph) {
      for (std::size_t j = 0; j < cfg.n_atoms; ++j) {
        const std::size_t mask = std::size_t{1} << (cfg.n_atoms - 1 - j);
        if (!(bits & mask)) continue;  // atom j+1 must be excited
        // a+ S_j-: |e_j, nph> -> |g_j, nph+1>, element f_j sqrt(nph+1)
        const std::size_t row = cfg.index(bits & ~mask, nph + 1);
        const std::size_t col = cfg.index(bits, nph);
        const double elem =
            config[j] * std::sqrt(static_cast<double>(nph + 1));
        h(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col)) +=
            elem;
        h(static_cast<Eigen::Index>(col), static_cast<Eigen::Index>(row)) +=
            elem;
      }
    }
  }
  return h;
}

FullVector full_space_propagate(const FullSpaceConfig& cfg,
                                const CouplingConfig& config,
                                const FullVector& initial, double t) {
  if (static_cast<std::size_t>(initial.size()) != cfg.dim()) {
    throw std::invalid_argument("full_space_propagate: dimension mismatch");
  }
  if (std::abs(initial.squaredNorm() - 1.0) > kNormTolConstruct) {
    throw std::invalid_argument("full_space_propagate: input not normalized");
  }
  return expi_apply(build_full_hamiltonian(cfg, config), initial, t);
}

double excitation_expectation(const FullSpaceConfig& cfg,
                              const FullVector& state) {
  double acc = 0.0;
  for (std::size_t bits = 0; bits < (std::size_t{1} << cfg.n_atoms); ++bits) {
    for (std::size_t nph = 0; nph <= cfg.photon_cutoff; ++nph) {
      const std::size_t idx = cfg.index(bits, nph);
      const double excitation =
          static_cast<double>(nph + static_cast<std::size_t>(
                                        __builtin_popcountll(bits)));
      acc += excitation *
             std::norm(state(static_cast<Eigen::Index>(idx)));
    }
  }
  return acc;
}

namespace {

// Full-space index of the k-th single-excitation basis ket (0-based;
// k < N: atom k+1 excited, vacuum; k = N: all ground, one photon).
std::size_t sector_index(const FullSpaceConfig& cfg, std::size_t k) {
  if (k < cfg.n_atoms) {
    return cfg.index(std::size_t{1} << (cfg.n_atoms - 1 - k), 0);
  }
  return cfg.index(0, 1);
}

}  // namespace

FullVector embed_single_excitation(const FullSpaceConfig& cfg,
                                   const SubspaceState& state) {
  if (state.n_atoms() != cfg.n_atoms) {
    throw std::invalid_argument("embed_single_excitation: atom count mismatch");
  }
  FullVector v = FullVector::Zero(static_cast<Eigen::Index>(cfg.dim()));
  for (std::size_t k = 0; k <= cfg.n_atoms; ++k) {
    v(static_cast<Eigen::Index>(sector_index(cfg, k))) = state[k];
  }
  return v;
}

SectorProjection project_single_excitation(const FullSpaceConfig& cfg,
                                           const FullVector& state) {
  SectorProjection out;
  out.amplitudes.resize(cfg.n_atoms + 1);
  double in_sector = 0.0;
  for (std::size_t k = 0; k <= cfg.n_atoms; ++k) {
    const Complex a = state(static_cast<Eigen::Index>(sector_index(cfg, k)));
    out.amplitudes[k] = a;
    in_sector += std::norm(a);
  }
  out.leakage = state.squaredNorm() - in_sector;
  return out;
}

}  // namespace wcav
