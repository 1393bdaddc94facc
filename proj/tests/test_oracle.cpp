#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "wcav/analytic.hpp"
#include "wcav/oracle.hpp"

using namespace wcav;

namespace {

SubspaceState random_state(std::mt19937_64& rng, std::size_t dim) {
  std::normal_distribution<double> gauss;
  std::vector<Complex> amps(dim);
  double norm2 = 0.0;
  for (Complex& a : amps) {
    a = Complex{gauss(rng), gauss(rng)};
    norm2 += std::norm(a);
  }
  for (Complex& a : amps) a /= std::sqrt(norm2);
  return SubspaceState(std::move(amps));
}

}  // namespace

TEST_CASE("subspace Hamiltonian structure") {
  SUBCASE("N=1 is the Pauli-X form") {
    SubspaceHamiltonian h = build_subspace_hamiltonian(CouplingConfig({1.0}));
    CHECK(h.matrix(0, 0) == 0.0);
    CHECK(h.matrix(0, 1) == 1.0);
    CHECK(h.matrix(1, 0) == 1.0);
    CHECK(h.matrix(1, 1) == 0.0);
  }
  SUBCASE("arrowhead with eigenvalues {-Omega, 0^(N-1), +Omega}") {
    CouplingConfig config({1.0, 2.0});
    SubspaceHamiltonian h = build_subspace_hamiltonian(config);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(h.matrix);
    CHECK(solver.eigenvalues()(0) == doctest::Approx(-std::sqrt(5.0)).epsilon(1e-14));
    CHECK(std::abs(solver.eigenvalues()(1)) < 1e-14);
    CHECK(solver.eigenvalues()(2) == doctest::Approx(std::sqrt(5.0)).epsilon(1e-14));
  }
  SUBCASE("spectrum property over random configs") {
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> f_dist(0.1, 5.0);
    for (int trial = 0; trial < 20; ++trial) {
      std::vector<double> f(5);
      for (double& v : f) v = f_dist(rng);
      CouplingConfig config(f);
      const double omega = collective_rabi(config).omega;
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(
          build_subspace_hamiltonian(config).matrix);
      CHECK(std::abs(solver.eigenvalues()(0) + omega) < 1e-10);
      CHECK(std::abs(solver.eigenvalues()(5) - omega) < 1e-10);
      for (int i = 1; i < 5; ++i) CHECK(std::abs(solver.eigenvalues()(i)) < 1e-10);
    }
  }
  SUBCASE("action on the photonic ket returns the coupling vector") {
    CouplingConfig config({0.3, 1.7, 2.4});
    SubspaceHamiltonian h = build_subspace_hamiltonian(config);
    Eigen::VectorXd photon = Eigen::VectorXd::Zero(4);
    photon(3) = 1.0;
    Eigen::VectorXd image = h.matrix * photon;
    for (int k = 0; k < 3; ++k) {
      CHECK(image(k) == config[static_cast<std::size_t>(k)]);
    }
    CHECK(image(3) == 0.0);
  }
}

TEST_CASE("oracle propagation") {
  SUBCASE("t = 0 is the identity") {
    std::mt19937_64 rng(9);
    CouplingConfig config({1.0, 0.5});
    SubspaceState s = random_state(rng, 3);
    SubspaceState out = oracle_propagate(build_subspace_hamiltonian(config), s, 0.0);
    for (std::size_t k = 0; k < 3; ++k) CHECK(std::abs(out[k] - s[k]) < 1e-14);
  }
  SUBCASE("JC quarter period") {
    SubspaceState excited(std::vector<Complex>{{1.0, 0.0}, {0.0, 0.0}});
    SubspaceState out = oracle_propagate(build_subspace_hamiltonian(CouplingConfig({1.0})),
                                         excited, std::numbers::pi / 2.0);
    CHECK(std::abs(out[0]) < 1e-14);
    CHECK(std::abs(out[1] - Complex{0.0, -1.0}) < 1e-14);
  }
  SUBCASE("agrees with the closed form on random instances") {
    std::mt19937_64 rng(13);
    std::uniform_real_distribution<double> f_dist(0.1, 5.0);
    for (int trial = 0; trial < 50; ++trial) {
      std::uniform_int_distribution<std::size_t> n_dist(1, 5);
      const std::size_t n = n_dist(rng);
      std::vector<double> f(n);
      for (double& v : f) v = f_dist(rng);
      CouplingConfig config(f);
      SubspaceState initial = random_state(rng, n + 1);
      std::uniform_real_distribution<double> t_dist(0.0, 10.0);
      const double t = t_dist(rng);
      SubspaceState a = propagate_general(config, initial, t);
      SubspaceState o = oracle_propagate(build_subspace_hamiltonian(config),
                                         initial, t);
      for (std::size_t k = 0; k <= n; ++k) CHECK(std::abs(a[k] - o[k]) < 1e-9);
      CHECK(std::abs(o.norm() - 1.0) < 1e-12);
    }
  }
  SUBCASE("dimension mismatch") {
    std::mt19937_64 rng(1);
    CHECK_THROWS_AS(
        oracle_propagate(build_subspace_hamiltonian(CouplingConfig({1.0})),
                         random_state(rng, 4), 1.0),
        std::invalid_argument);
  }
}

TEST_CASE("full space configuration limits") {
  CHECK_THROWS_AS(FullSpaceConfig(7, 2), std::invalid_argument);
  CHECK_THROWS_AS(FullSpaceConfig(0, 2), std::invalid_argument);
  CHECK_THROWS_AS(FullSpaceConfig(3, 0), std::invalid_argument);
  CHECK(FullSpaceConfig(6, 2).dim() == 192);
}

TEST_CASE("full space propagation") {
  SUBCASE("N=1 stays in the two JC kets") {
    FullSpaceConfig cfg(1, 2);
    CouplingConfig config({1.0});
    SubspaceState excited(std::vector<Complex>{{1.0, 0.0}, {0.0, 0.0}});
    FullVector v = embed_single_excitation(cfg, excited);
    FullVector out = full_space_propagate(cfg, config, v, 1.3);
    SectorProjection proj = project_single_excitation(cfg, out);
    CHECK(std::abs(proj.leakage) < 1e-12);
    CHECK(excitation_expectation(cfg, out) == doctest::Approx(1.0).epsilon(1e-12));
  }
  SUBCASE("N=3 identical atoms at the half period, validated in full space") {
    FullSpaceConfig cfg(3, 2);
    CouplingConfig config({1.0, 1.0, 1.0});
    std::vector<Complex> amps(4, Complex{0.0, 0.0});
    amps[0] = Complex{1.0, 0.0};
    FullVector v = embed_single_excitation(cfg, SubspaceState(amps));
    FullVector out =
        full_space_propagate(cfg, config, v, std::numbers::pi / std::sqrt(3.0));
    SectorProjection proj = project_single_excitation(cfg, out);
    CHECK(std::abs(proj.amplitudes[0] - Complex{1.0 / 3.0, 0.0}) < 1e-12);
    CHECK(std::abs(proj.amplitudes[1] + Complex{2.0 / 3.0, 0.0}) < 1e-12);
    CHECK(std::abs(proj.amplitudes[2] + Complex{2.0 / 3.0, 0.0}) < 1e-12);
    CHECK(std::abs(proj.amplitudes[3]) < 1e-12);
  }
  SUBCASE("zero-excitation vacuum is stationary") {
    FullSpaceConfig cfg(2, 2);
    CouplingConfig config({1.0, 2.0});
    FullVector v = FullVector::Zero(static_cast<Eigen::Index>(cfg.dim()));
    v(static_cast<Eigen::Index>(cfg.index(0, 0))) = 1.0;
    FullVector out = full_space_propagate(cfg, config, v, 2.9);
    CHECK(std::abs(out(static_cast<Eigen::Index>(cfg.index(0, 0))) -
                   Complex{1.0, 0.0}) < 1e-13);
  }
  SUBCASE("unnormalized input rejected") {
    FullSpaceConfig cfg(2, 1);
    CouplingConfig config({1.0, 2.0});
    FullVector v = FullVector::Zero(static_cast<Eigen::Index>(cfg.dim()));
    v(0) = 0.7;
    CHECK_THROWS_AS(full_space_propagate(cfg, config, v, 1.0),
                    std::invalid_argument);
  }
}
