#include <cmath>

#include "doctest.h"
#include "support/random_systems.hpp"
#include "trimode/errors.hpp"
#include "trimode/model.hpp"
#include "trimode/su3.hpp"

using namespace trimode;

TEST_CASE("normalize: identity case") {
  const NormalizedSystem ns = normalize(OscillatorSystem{});
  CHECK(ns.m == 1.0);
  for (double mu : ns.mu) CHECK(mu == 1.0);
  CHECK(ns.j12 == 0.0);
  CHECK(ns.j13 == 0.0);
  CHECK(ns.j23 == 0.0);
}

TEST_CASE("normalize: geometric-mean mass and rescaling factors") {
  OscillatorSystem s;
  s.mass = {1.0, 4.0, 2.0};
  s.omega = {0.7, 1.3, 2.1};
  const NormalizedSystem ns = normalize(s);
  CHECK(ns.m == doctest::Approx(2.0).epsilon(1e-15));
  CHECK(ns.mu[0] == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-15));
  CHECK(ns.mu[1] == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));
  CHECK(ns.mu[2] == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(ns.omega == s.omega);
}

TEST_CASE("normalize: J_ij = D_ij / (2 sqrt(m_i m_j))") {
  OscillatorSystem s;
  s.d12 = 1.0;
  const NormalizedSystem ns = normalize(s);
  CHECK(ns.j12 == 0.5);
  CHECK(ns.j13 == 0.0);
  CHECK(ns.j23 == 0.0);
}

TEST_CASE("normalize rejects non-positive fields by name") {
  OscillatorSystem s;
  s.mass[1] = 0.0;
  CHECK_THROWS_WITH_AS(normalize(s), doctest::Contains("mass m2"), DomainError);
  s = {};
  s.omega[2] = -1.0;
  CHECK_THROWS_WITH_AS(normalize(s), doctest::Contains("frequency w3"), DomainError);
  s = {};
  s.hbar = 0.0;
  CHECK_THROWS_WITH_AS(normalize(s), doctest::Contains("hbar"), DomainError);
  s = {};
  s.d13 = std::nan("");
  CHECK_THROWS_AS(normalize(s), DomainError);
}

TEST_CASE("normalize invariants on random systems") {
  testing::SystemSampler rng(11);
  for (int t = 0; t < 500; ++t) {
    const OscillatorSystem s = rng.stable_system();
    const NormalizedSystem ns = normalize(s);
    CHECK(std::abs(ns.mu[0] * ns.mu[1] * ns.mu[2] - 1.0) < 1e-14);
    for (int i = 0; i < 3; ++i) CHECK(std::abs(ns.mu[i] * (1.0 / ns.mu[i]) - 1.0) < 1e-15);
    CHECK(ns.j12 == doctest::Approx(s.d12 / (2.0 * std::sqrt(s.mass[0] * s.mass[1]))).epsilon(1e-14));
    CHECK(ns.j13 == doctest::Approx(s.d13 / (2.0 * std::sqrt(s.mass[0] * s.mass[2]))).epsilon(1e-14));
    CHECK(ns.j23 == doctest::Approx(s.d23 / (2.0 * std::sqrt(s.mass[1] * s.mass[2]))).epsilon(1e-14));
  }
}

// Potential of the physical Hamiltonian equals (m/2) X^T R X with X_i = mu_i x_i:
// the couplings sit inside the overall 1/2 in one form and outside it (as m J_ij)
// in the other, and both agree.
TEST_CASE("rescaled potential matches the physical one") {
  testing::SystemSampler rng(12);
  for (int t = 0; t < 200; ++t) {
    const OscillatorSystem s = rng.stable_system();
    const NormalizedSystem ns = normalize(s);
    const Mat3 r = coupling_matrix(ns).matrix();
    const Vec3 x{rng.uniform(-2, 2), rng.uniform(-2, 2), rng.uniform(-2, 2)};
    const Vec3 big{ns.mu[0] * x[0], ns.mu[1] * x[1], ns.mu[2] * x[2]};
    const Vec3 rx = r * big;
    const double rescaled = 0.5 * ns.m * (big[0] * rx[0] + big[1] * rx[1] + big[2] * rx[2]);
    CHECK(rescaled == doctest::Approx(physical_potential(s, x)).epsilon(1e-13));
  }
}

TEST_CASE("coupling_matrix placement") {
  NormalizedSystem ns;
  ns.omega = {1.0, 2.0, 3.0};
  CHECK(max_abs_diff(coupling_matrix(ns).matrix(), Mat3::diag({1.0, 4.0, 9.0})) == 0.0);

  ns.omega = {1.0, 1.0, 1.0};
  ns.j12 = 0.3;
  ns.j13 = 0.2;
  ns.j23 = 0.1;
  const CouplingMatrix cm = coupling_matrix(ns);
  CHECK(cm(0, 1) == 0.3);
  CHECK(cm(1, 0) == 0.3);
  CHECK(cm(0, 2) == 0.2);
  CHECK(cm(2, 0) == 0.2);
  CHECK(cm(1, 2) == 0.1);
  CHECK(cm(2, 1) == 0.1);
  for (int i = 0; i < 3; ++i) CHECK(cm(i, i) == 1.0);
}

TEST_CASE("coupling_matrix equals its Gell-Mann expansion exactly") {
  testing::SystemSampler rng(13);
  for (int t = 0; t < 100; ++t) {
    const NormalizedSystem ns = normalize(rng.stable_system());
    const CouplingMatrix cm = coupling_matrix(ns);
    const CMat3 expansion =
        Complex(ns.j12) * gell_mann(1) + Complex(ns.j13) * gell_mann(4) + Complex(ns.j23) * gell_mann(6) +
        CMat3::from_real(Mat3::diag({ns.omega[0] * ns.omega[0], ns.omega[1] * ns.omega[1],
                                     ns.omega[2] * ns.omega[2]}));
    CHECK(max_abs_diff(expansion, CMat3::from_real(cm.matrix())) == 0.0);
  }
}

TEST_CASE("CouplingMatrix mirrors the upper triangle") {
  Mat3 m;
  m(0, 1) = 5.0;
  m(1, 0) = -7.0;
  const CouplingMatrix cm(m);
  CHECK(cm(1, 0) == 5.0);
}

TEST_CASE("is_stable") {
  CHECK(is_stable(CouplingMatrix(Mat3::diag({1.0, 4.0, 9.0}))));

  Mat3 unstable = Mat3::identity();
  unstable(0, 1) = unstable(1, 0) = 2.0;
  CHECK_FALSE(is_stable(CouplingMatrix(unstable)));

  Mat3 stable;
  stable(0, 0) = 2; stable(1, 1) = 1; stable(2, 2) = 2;
  stable(0, 2) = stable(2, 0) = -1;
  CHECK(is_stable(CouplingMatrix(stable)));

  // Eigenvalue exactly zero: 1 +- 1.
  Mat3 marginal = Mat3::identity();
  marginal(0, 1) = marginal(1, 0) = 1.0;
  CHECK_FALSE(is_stable(CouplingMatrix(marginal)));
}
