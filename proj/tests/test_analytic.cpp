#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "wcav/analytic.hpp"

using namespace wcav;

namespace {

SubspaceState basis_ket(std::size_t dim, std::size_t k) {
  std::vector<Complex> amps(dim, Complex{0.0, 0.0});
  amps[k] = Complex{1.0, 0.0};
  return SubspaceState(std::move(amps));
}

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

double max_dev(const SubspaceState& a, const SubspaceState& b) {
  double d = 0.0;
  for (std::size_t k = 0; k < a.dim(); ++k) d = std::max(d, std::abs(a[k] - b[k]));
  return d;
}

}  // namespace

TEST_CASE("collective Rabi frequency") {
  CHECK(collective_rabi(CouplingConfig({1.0})).omega == doctest::Approx(1.0));
  CHECK(collective_rabi(CouplingConfig({3.0, 4.0})).omega == doctest::Approx(5.0));
  CHECK(collective_rabi(CouplingConfig({1.0, 1.0, 1.0})).omega ==
        doctest::Approx(std::sqrt(3.0)).epsilon(1e-15));
}

TEST_CASE("propagate_general special values") {
  std::mt19937_64 rng(7);
  CouplingConfig config({0.7, 1.3, 2.1});
  SubspaceState initial = random_state(rng, 4);

  SUBCASE("t = 0 is the identity") {
    CHECK(max_dev(propagate_general(config, initial, 0.0), initial) < 1e-15);
  }
  SUBCASE("full revival at t = 2 pi / Omega") {
    const double t = 2.0 * std::numbers::pi / collective_rabi(config).omega;
    CHECK(max_dev(propagate_general(config, initial, t), initial) < 1e-12);
  }
  SUBCASE("single atom reduces to vacuum Rabi oscillation") {
    CouplingConfig jc({1.0});
    SubspaceState excited = basis_ket(2, 0);
    for (double t : {0.3, 1.0, std::numbers::pi / 2.0, 4.2}) {
      SubspaceState s = propagate_general(jc, excited, t);
      CHECK(std::abs(s[0] - Complex{std::cos(t), 0.0}) < 1e-15);
      CHECK(std::abs(s[1] - Complex{0.0, -std::sin(t)}) < 1e-15);
    }
  }
  SUBCASE("dimension mismatch rejected") {
    CHECK_THROWS_AS(propagate_general(CouplingConfig({1.0}), initial, 1.0),
                    std::invalid_argument);
  }
}

TEST_CASE("propagation is unitary and composes") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    std::uniform_int_distribution<std::size_t> n_dist(1, 6);
    std::uniform_real_distribution<double> f_dist(0.1, 5.0);
    std::uniform_real_distribution<double> t_dist(-5.0, 5.0);
    const std::size_t n = n_dist(rng);
    std::vector<double> f(n);
    for (double& v : f) v = f_dist(rng);
    CouplingConfig config(f);
    SubspaceState a = random_state(rng, n + 1);
    SubspaceState b = random_state(rng, n + 1);
    const double t1 = t_dist(rng), t2 = t_dist(rng);

    SubspaceState a1 = propagate_general(config, a, t1);
    SubspaceState b1 = propagate_general(config, b, t1);
    CHECK(std::abs(a1.norm() - 1.0) < 1e-9);

    // inner products preserved
    Complex ip0{0.0, 0.0}, ip1{0.0, 0.0};
    for (std::size_t k = 0; k <= n; ++k) {
      ip0 += std::conj(a[k]) * b[k];
      ip1 += std::conj(a1[k]) * b1[k];
    }
    CHECK(std::abs(ip0 - ip1) < 1e-9);

    // group composition
    SubspaceState two_step = propagate_general(config, a1, t2);
    SubspaceState one_step = propagate_general(config, a, t1 + t2);
    CHECK(max_dev(two_step, one_step) < 1e-9);

    // negative time inverts
    SubspaceState back = propagate_general(config, a1, -t1);
    CHECK(max_dev(back, a) < 1e-9);
  }
}

TEST_CASE("half-period reduction") {
  SUBCASE("photon-only input flips sign exactly") {
    CouplingConfig config({0.4, 2.2, 1.1});
    SubspaceState photon = basis_ket(4, 3);
    SubspaceState s = state_at_half_period(config, photon);
    CHECK(s.photon() == Complex{-1.0, 0.0});
    for (std::size_t k = 0; k < 3; ++k) CHECK(std::abs(s[k]) == 0.0);
  }
  SUBCASE("two identical atoms swap the excitation") {
    SubspaceState s =
        state_at_half_period(CouplingConfig({1.0, 1.0}), basis_ket(3, 0));
    CHECK(std::abs(s[0]) < 1e-15);
    CHECK(std::abs(s[1] - Complex{-1.0, 0.0}) < 1e-15);
    CHECK(std::abs(s.photon()) == 0.0);
  }
  SUBCASE("three identical atoms, coefficients 1-2/N and -2/N") {
    SubspaceState s =
        state_at_half_period(CouplingConfig({1.0, 1.0, 1.0}), basis_ket(4, 0));
    CHECK(s[0].real() == doctest::Approx(1.0 / 3.0).epsilon(1e-14));
    CHECK(s[1].real() == doctest::Approx(-2.0 / 3.0).epsilon(1e-14));
    CHECK(s[2].real() == doctest::Approx(-2.0 / 3.0).epsilon(1e-14));
    CHECK(std::abs(s.photon()) == 0.0);
  }
  SUBCASE("matches the general propagator at t = pi/Omega") {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 20; ++trial) {
      std::uniform_real_distribution<double> f_dist(0.1, 5.0);
      std::vector<double> f(4);
      for (double& v : f) v = f_dist(rng);
      CouplingConfig config(f);
      SubspaceState initial = random_state(rng, 5);
      const double t = std::numbers::pi / collective_rabi(config).omega;
      CHECK(max_dev(state_at_half_period(config, initial),
                    propagate_general(config, initial, t)) < 1e-12);
    }
  }
}

TEST_CASE("single excitation outcome") {
  SUBCASE("N=2, f=(1,2)") {
    SubspaceState s = single_excitation_outcome(CouplingConfig({1.0, 2.0}), 1);
    CHECK(s[0].real() == doctest::Approx(3.0 / 5.0).epsilon(1e-14));
    CHECK(s[1].real() == doctest::Approx(-4.0 / 5.0).epsilon(1e-14));
    CHECK(std::abs(s.photon()) == 0.0);
  }
  SUBCASE("identical couplings at N=2 fully swap") {
    SubspaceState s = single_excitation_outcome(CouplingConfig({1.0, 1.0}), 1);
    CHECK(std::abs(s[0]) < 1e-15);
    CHECK(s[1].real() == doctest::Approx(-1.0));
  }
  SUBCASE("agrees with the half-period propagator") {
    CouplingConfig config({0.3, 1.2, 2.7, 0.9});
    for (std::size_t q = 1; q <= 4; ++q) {
      SubspaceState direct = single_excitation_outcome(config, q);
      SubspaceState via_half = state_at_half_period(config, basis_ket(5, q - 1));
      CHECK(max_dev(direct, via_half) < 1e-14);
    }
  }
  SUBCASE("distinct couplings give pairwise-distinct magnitudes") {
    SubspaceState s =
        single_excitation_outcome(CouplingConfig({0.5, 1.0, 1.7, 2.6}), 1);
    for (std::size_t p = 1; p < 4; ++p) {
      for (std::size_t q = p + 1; q < 4; ++q) {
        CHECK(std::abs(std::abs(s[p]) - std::abs(s[q])) > 1e-12);
      }
    }
  }
  CHECK_THROWS_AS(single_excitation_outcome(CouplingConfig({1.0, 2.0}), 0),
                  std::invalid_argument);
  CHECK_THROWS_AS(single_excitation_outcome(CouplingConfig({1.0, 2.0}), 3),
                  std::invalid_argument);
}

TEST_CASE("two-group propagator") {
  GroupPartition part(2, 3, 1.4, 0.6);
  TwoGroupAmplitudes initial{Complex{0.3, 0.1}, Complex{-0.2, 0.25},
                             Complex{0.0, 0.0}};
  // normalize: 2|c_m|^2 + 3|c_n|^2 + |c_ph|^2 = 1
  double norm2 = 2.0 * std::norm(initial.c_m) + 3.0 * std::norm(initial.c_n);
  double rest = std::sqrt(1.0 - 0.0);
  const double s = 1.0 / std::sqrt(norm2);
  initial.c_m *= s;
  initial.c_n *= s;
  (void)rest;

  SUBCASE("identity at t = 0 and revival at 2 pi / omega") {
    TwoGroupAmplitudes at0 = propagate_two_group(part, initial, 0.0);
    CHECK(std::abs(at0.c_m - initial.c_m) < 1e-15);
    CHECK(std::abs(at0.c_n - initial.c_n) < 1e-15);
    const double t = 2.0 * std::numbers::pi / two_group_rabi(part).omega;
    TwoGroupAmplitudes revived = propagate_two_group(part, initial, t);
    CHECK(std::abs(revived.c_m - initial.c_m) < 1e-13);
    CHECK(std::abs(revived.c_n - initial.c_n) < 1e-13);
    CHECK(std::abs(revived.c_ph - initial.c_ph) < 1e-13);
  }
  SUBCASE("M1=M2=1 matches the general two-atom solution") {
    GroupPartition pair(1, 1, 1.3, 0.4);
    std::vector<Complex> amps{{0.5, 0.0}, {0.1, 0.6}, {0.0, 0.0}};
    double n2 = 0.0;
    for (const Complex& a : amps) n2 += std::norm(a);
    for (Complex& a : amps) a /= std::sqrt(n2);
    TwoGroupAmplitudes tg{amps[0], amps[1], amps[2]};
    for (double t : {0.2, 1.1, 3.9}) {
      TwoGroupAmplitudes evolved = propagate_two_group(pair, tg, t);
      SubspaceState general = propagate_general(CouplingConfig({1.3, 0.4}),
                                                SubspaceState(amps), t);
      CHECK(std::abs(evolved.c_m - general[0]) < 1e-14);
      CHECK(std::abs(evolved.c_n - general[1]) < 1e-14);
      CHECK(std::abs(evolved.c_ph - general.photon()) < 1e-14);
    }
  }
  SUBCASE("theta reduction matches the general form") {
    const double theta = std::numbers::pi / two_group_rabi(part).omega;
    TwoGroupAmplitudes reduced = two_group_at_theta(part, initial);
    TwoGroupAmplitudes general = propagate_two_group(part, initial, theta);
    CHECK(std::abs(reduced.c_m - general.c_m) < 1e-13);
    CHECK(std::abs(reduced.c_n - general.c_n) < 1e-13);
    CHECK(std::abs(reduced.c_ph - general.c_ph) < 1e-13);
  }
  SUBCASE("photon amplitude flips exactly at theta") {
    TwoGroupAmplitudes photon{Complex{0.0, 0.0}, Complex{0.0, 0.0},
                              Complex{1.0, 0.0}};
    TwoGroupAmplitudes out = two_group_at_theta(part, photon);
    CHECK(out.c_ph == Complex{-1.0, 0.0});
    CHECK(std::abs(out.c_m) == 0.0);
    CHECK(std::abs(out.c_n) == 0.0);
  }
}

TEST_CASE("theta outcome under conditions (group W-state input)") {
  // M1=2, M2=2, f2=1, f1=1+sqrt(2): all four amplitudes reach 1/2.
  const double f1 = 1.0 + std::numbers::sqrt2;
  GroupPartition part(2, 2, f1, 1.0);
  TwoGroupAmplitudes initial{Complex{-1.0 / std::numbers::sqrt2, 0.0},
                             Complex{0.0, 0.0}, Complex{0.0, 0.0}};
  TwoGroupAmplitudes out = two_group_at_theta(part, initial);
  CHECK(out.c_m.real() == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(out.c_n.real() == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(std::abs(out.c_ph) == 0.0);
}

TEST_CASE("restrict/expand round trip and symmetry check") {
  GroupPartition part(2, 2, 2.0, 1.0);
  TwoGroupAmplitudes amps{Complex{0.5, 0.0}, Complex{0.0, 0.5},
                          Complex{0.0, 0.0}};
  SubspaceState expanded = expand_two_group(part, amps);
  TwoGroupAmplitudes back = restrict_two_group(part, expanded);
  CHECK(back.c_m == amps.c_m);
  CHECK(back.c_n == amps.c_n);

  // Norm-preserving asymmetry: phase one group-1 atom only.
  std::vector<Complex> broken = expanded.amplitudes();
  broken[0] *= std::polar(1.0, 1e-3);
  CHECK_THROWS_AS(restrict_two_group(part, SubspaceState::from_propagation(broken)),
                  std::invalid_argument);
}
