#include <cmath>
#include <numbers>

#include "doctest.h"
#include "support/random_systems.hpp"
#include "trimode/entangle.hpp"
#include "trimode/errors.hpp"
#include "trimode/limits.hpp"
#include "trimode/oracle.hpp"

using namespace trimode;

namespace {

const double pi = std::numbers::pi;

OscillatorSystem regression_system() {
  OscillatorSystem s;
  s.mass = {1.0, 2.0, 3.0};
  s.omega = {1.0, 1.5, 2.0};
  s.d12 = 0.4;
  s.d13 = 0.3;
  s.d23 = 0.2;
  return s;
}

// m = 1, omega = (sqrt 2, 1, sqrt 2), D13 = -2 gives R = [[2,0,-1],[0,1,0],[-1,0,2]].
OscillatorSystem block_system() {
  OscillatorSystem s;
  s.omega = {std::sqrt(2.0), 1.0, std::sqrt(2.0)};
  s.d13 = -2.0;
  return s;
}

double oracle_purity(const OscillatorSystem& s, int kept) {
  const EntanglementReport r = analyze(s, kept);
  return oracle::quad_purity(r.ground, kept, oracle::make_grid(r.modes, r.normalized, s.hbar));
}

}  // namespace

TEST_CASE("reduced_density_params: uncoupled") {
  GaussianGroundState g;
  g.A = 0.7; g.B = 1.1; g.C = 0.4;
  g.mu = {1.2, 0.9, 1.0 / (1.2 * 0.9)};
  const ReducedDensityParams rd = reduced_density_params(g, 1);
  CHECK(rd.w == 0.0);
  CHECK(rd.L == doctest::Approx(g.mu[0] * g.mu[0] * g.A));
  CHECK(purity_from_Lw(rd).purity == 1.0);
}

TEST_CASE("reduced_density_params: only G12") {
  GaussianGroundState g;
  g.A = 0.7; g.B = 1.1; g.C = 0.4; g.g12 = 0.3;
  g.mu = {1.2, 0.9, 1.0 / (1.2 * 0.9)};
  const double mu2 = g.mu[0] * g.mu[0];
  const ReducedDensityParams rd = reduced_density_params(g, 1);
  CHECK(rd.w == doctest::Approx(mu2 * g.g12 * g.g12 / g.B).epsilon(1e-15));
  CHECK(rd.L == doctest::Approx(mu2 * (g.A - g.g12 * g.g12 / (2 * g.B))).epsilon(1e-15));
}

TEST_CASE("reduced_density_params: w equals the factored expression") {
  testing::SystemSampler rng(51);
  for (int t = 0; t < 200; ++t) {
    const EntanglementReport r = analyze(rng.stable_system(), 1);
    const GaussianGroundState& g = r.ground;
    const double mu2 = g.mu[0] * g.mu[0];
    const double den = g.B - g.g23 * g.g23 / g.C;
    const double factored = mu2 * (g.g13 * g.g13 / g.C + std::pow(g.g12 + g.g13 * g.g23 / g.C, 2) / den);
    CHECK(std::abs(r.reduced.w - factored) < 1e-13 * (1.0 + std::abs(factored)));
    CHECK(r.reduced.L == doctest::Approx(mu2 * g.A - r.reduced.w / 2.0).epsilon(1e-13));
  }
}

TEST_CASE("reduced_density_params rejects bad input") {
  GaussianGroundState g;
  CHECK_THROWS_AS(reduced_density_params(g, 0), DomainError);
  CHECK_THROWS_AS(reduced_density_params(g, 4), DomainError);
  g.g23 = 2.0;  // B C - G23^2 < 0
  CHECK_THROWS_AS(reduced_density_params(g, 1), DomainError);
}

TEST_CASE("purity_from_Lw") {
  PurityResult p = purity_from_Lw({1.0, 0.0, 1});
  CHECK(p.purity == 1.0);
  CHECK(p.linear_entropy == 0.0);
  p = purity_from_Lw({1.0, 1.0, 1});
  CHECK(p.purity == doctest::Approx(std::sqrt(1.0 / 3.0)).epsilon(1e-15));
  CHECK(p.linear_entropy == doctest::Approx(1.0 - std::sqrt(1.0 / 3.0)));
  p = purity_from_Lw({1.0, 2.0 - 1e-12, 1});
  CHECK(p.purity > 0.0);
  CHECK(p.purity < 1e-5);
}

TEST_CASE("purity_closed_form: zero angles give 1") {
  testing::SystemSampler rng(52);
  for (int t = 0; t < 50; ++t) {
    LogFrequencyParams lp{rng.log_uniform(0.2, 5), rng.uniform(-2, 2), rng.uniform(-2, 2), 0.0};
    lp.d3 = -lp.d1 - lp.d2;
    CHECK(purity_closed_form(lp, {0, 0, 0}).purity == doctest::Approx(1.0).epsilon(1e-15));
  }
}

TEST_CASE("purity_closed_form: large splitting drives P to 0") {
  LogFrequencyParams lp{1.0, 20.0, 0.0, -20.0};
  CHECK(purity_closed_form(lp, {pi / 4, 0, 0}).purity < 1e-3);
}

TEST_CASE("purity_closed_form matches the block fixture and its oracle") {
  const OscillatorSystem s = block_system();
  const EntanglementReport r = analyze(s, 1);
  const double closed = purity_closed_form(log_params(r.modes), r.modes.angles).purity;
  CHECK(std::abs(closed - r.result.purity) < 1e-12);
  CHECK(std::abs(closed - oracle_purity(s, 1)) < 1e-8);
  CHECK(r.result.purity == doctest::Approx(0.9634330440022851).epsilon(1e-13));
}

TEST_CASE("purity_closed_form reproduces the pair limits") {
  testing::SystemSampler rng(53);
  for (int pair = 0; pair < 3; ++pair) {
    for (int t = 0; t < 100; ++t) {
      const int i = pair == 2 ? 1 : 0;
      const int j = pair == 0 ? 1 : 2;
      // The product reproduces the two-body purity of the coupled pair, so for
      // pair 23 it is the purity of oscillator 2, not of the spectator.
      const OscillatorSystem s = rng.single_pair_system(i, j);
      const EntanglementReport r = analyze(s, 1);
      const double closed = purity_closed_form(log_params(r.modes), r.modes.angles).purity;
      CHECK(std::abs(closed - purity(s, i + 1).purity) < 1e-10);
    }
  }
}

TEST_CASE("purity_closed_form departs from the exact purity for generic angles") {
  // Recorded finding: the three-factor product is not the Schur-complement purity
  // once more than one rotation angle is non-zero.
  const EntanglementReport r = analyze(regression_system(), 1);
  LogFrequencyParams lp = log_params(r.modes);
  lp.d1 = 1.0; lp.d2 = 0.0; lp.d3 = -1.0;
  NormalModes m = r.modes;
  m.angles = {0.6, 0.4, 0.7};
  m.sigma = {lp.varpi * std::exp(lp.d1), lp.varpi * std::exp(lp.d2), lp.varpi * std::exp(lp.d3)};
  const GaussianGroundState g = ground_gaussian(m, r.normalized, 1.0);
  const double exact = purity_from_Lw(reduced_density_params(g, 1)).purity;
  const double closed = purity_closed_form(lp, m.angles).purity;
  CHECK(std::abs(exact - closed) > 1e-3);
}

TEST_CASE("purity: uncoupled systems are pure") {
  testing::SystemSampler rng(54);
  for (int t = 0; t < 20; ++t) {
    OscillatorSystem s = rng.stable_system();
    s.d12 = s.d13 = s.d23 = 0.0;
    for (int k = 1; k <= 3; ++k) {
      const PurityResult p = purity(s, k);
      CHECK(p.purity == 1.0);
      CHECK(p.linear_entropy == 0.0);
    }
  }
}

TEST_CASE("purity: J12 = 0.5 matches the two-oscillator result") {
  OscillatorSystem s;
  s.d12 = 1.0;
  const double expected = 2.0 / (std::pow(3.0, -0.25) + std::pow(3.0, 0.25));
  CHECK(purity(s, 1).purity == doctest::Approx(expected).epsilon(1e-13));
  CHECK(purity(s, 2).purity == doctest::Approx(expected).epsilon(1e-13));
  CHECK(purity(s, 3).purity == 1.0);
  CHECK(purity_two_body(std::log(3.0) / 4.0, pi / 4) == doctest::Approx(expected).epsilon(1e-14));
}

TEST_CASE("purity regression fixture") {
  const OscillatorSystem s = regression_system();
  CHECK(purity(s, 1).purity == doctest::Approx(0.9987317605819607).epsilon(1e-12));
  CHECK(purity(s, 2).purity == doctest::Approx(0.9989166839802901).epsilon(1e-12));
  CHECK(purity(s, 3).purity == doctest::Approx(0.9997785840621063).epsilon(1e-12));
  for (int k = 1; k <= 3; ++k) CHECK(std::abs(purity(s, k).purity - oracle_purity(s, k)) < 1e-8);
}

TEST_CASE("purity: block fixture partitions") {
  const OscillatorSystem s = block_system();
  CHECK(purity(s, 2).purity == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(purity(s, 3).purity == doctest::Approx(0.9634330440022851).epsilon(1e-13));
}

TEST_CASE("purity agrees with the quadrature oracle for every partition") {
  testing::SystemSampler rng(55);
  for (int t = 0; t < 4; ++t) {
    const OscillatorSystem s = rng.stable_system();
    for (int k = 1; k <= 3; ++k) {
      const double p = purity(s, k).purity;
      CHECK(p > 0.0);
      CHECK(p <= 1.0);
      CHECK(std::abs(p - oracle_purity(s, k)) < 1e-8);
    }
  }
}

TEST_CASE("purity: weak coupling") {
  testing::SystemSampler rng(56);
  for (int t = 0; t < 50; ++t) {
    OscillatorSystem s = rng.stable_system();
    s.d12 *= 1e-4;
    s.d13 *= 1e-4;
    s.d23 *= 1e-4;
    CHECK(std::abs(purity(s, 1).purity - 1.0) < 1e-6);
  }
}

TEST_CASE("purity does not depend on the eigenbasis chosen for degenerate modes") {
  const OscillatorSystem s = block_system();
  const EntanglementReport r = analyze(s, 1);
  REQUIRE(r.modes.degenerate);
  // Rotate inside the degenerate (Sigma^2 = 1) eigenspace and rebuild the angles.
  const Mat3 m = rotation(r.modes.angles).m;
  int a = -1, b = -1;
  for (int i = 0; i < 3; ++i) {
    if (std::abs(r.modes.sigma[i] - 1.0) < 1e-9) (a < 0 ? a : b) = i;
  }
  REQUIRE(b >= 0);
  for (double t : {0.3, 1.1, -0.7}) {
    Mat3 mixed = m;
    for (int row = 0; row < 3; ++row) {
      mixed(row, a) = std::cos(t) * m(row, a) - std::sin(t) * m(row, b);
      mixed(row, b) = std::sin(t) * m(row, a) + std::cos(t) * m(row, b);
    }
    NormalModes alt = r.modes;
    alt.angles = extract_angles(RotationMatrix{mixed});
    const GaussianGroundState g = ground_gaussian(alt, r.normalized, s.hbar);
    CHECK(std::abs(purity_from_Lw(reduced_density_params(g, 1)).purity - r.result.purity) < 1e-9);
  }
}

TEST_CASE("purity propagates instability") {
  OscillatorSystem s;
  s.d12 = 2.5;
  CHECK_THROWS_AS(purity(s, 1), InstabilityError);
}
