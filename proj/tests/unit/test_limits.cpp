#include <cmath>
#include <numbers>

#include "doctest.h"
#include "support/random_systems.hpp"
#include "trimode/decouple.hpp"
#include "trimode/errors.hpp"
#include "trimode/limits.hpp"

using namespace trimode;

namespace {

const double pi = std::numbers::pi;

const Pair kPairs[] = {Pair::k12, Pair::k13, Pair::k23};

}  // namespace

TEST_CASE("pair indices") {
  CHECK(indices(Pair::k12).first == 0);
  CHECK(indices(Pair::k12).spectator == 2);
  CHECK(indices(Pair::k13).second == 2);
  CHECK(indices(Pair::k23).spectator == 0);
  CHECK(to_string(Pair::k23) == "23");
}

TEST_CASE("pair_params") {
  PairParams p = pair_params(1, 1, 0);
  CHECK(p.k == 1.0);
  CHECK(p.eta == 0.0);

  p = pair_params(1, 1, 1);
  CHECK(p.k == doctest::Approx(std::sqrt(3.0) / 2.0).epsilon(1e-15));
  CHECK(p.eta == doctest::Approx(std::log(3.0) / 4.0).epsilon(1e-15));

  p = pair_params(1, 2, 1);
  CHECK(p.k == doctest::Approx(std::sqrt(15.0) / 2.0).epsilon(1e-15));
  CHECK(p.eta == doctest::Approx(0.37274907724870215).epsilon(1e-14));
  // Sigma^2 of [[1, 1/2], [1/2, 4]] are k e^{+-2 eta}.
  const double hi = (5.0 + std::sqrt(10.0)) / 2.0;
  const double lo = (5.0 - std::sqrt(10.0)) / 2.0;
  CHECK(p.k * std::exp(2 * p.eta) == doctest::Approx(hi).epsilon(1e-14));
  CHECK(p.k * std::exp(-2 * p.eta) == doctest::Approx(lo).epsilon(1e-14));

  CHECK_THROWS_AS(pair_params(1, 1, 2), InstabilityError);
  CHECK_THROWS_AS(pair_params(1, 1, -3), InstabilityError);
}

TEST_CASE("pair_params: e^{2eta} e^{-2eta} = 1") {
  testing::SystemSampler rng(61);
  for (int t = 0; t < 200; ++t) {
    const double wi = rng.log_uniform(0.3, 3), wj = rng.log_uniform(0.3, 3);
    const double j = rng.uniform(-1.9, 1.9) * wi * wj;
    const PairParams p = pair_params(wi, wj, j);
    const double disc = std::hypot(wi * wi - wj * wj, j);
    const double up = (wi * wi + wj * wj + disc) / (2 * p.k);
    const double down = (wi * wi + wj * wj - disc) / (2 * p.k);
    CHECK(up * down == doctest::Approx(1.0).epsilon(1e-13));
    CHECK(std::exp(2 * p.eta) == doctest::Approx(up).epsilon(1e-13));
  }
}

TEST_CASE("purity_two_body") {
  CHECK(purity_two_body(0.0, 0.83) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(purity_two_body(1.7, 0.0) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(purity_two_body(std::log(3.0) / 4.0, pi / 4) ==
        doctest::Approx(2.0 / (std::pow(3.0, -0.25) + std::pow(3.0, 0.25))).epsilon(1e-15));
  CHECK(purity_two_body(0.9, 0.4) == doctest::Approx(purity_two_body(0.9, -0.4)).epsilon(1e-15));
}

TEST_CASE("verify_pair_limit") {
  for (Pair p : kPairs) CHECK(verify_pair_limit(OscillatorSystem{}, p) < 1e-15);

  OscillatorSystem s;
  s.omega = {1.0, 1.0, 2.7};
  s.d12 = 0.8;
  CHECK(verify_pair_limit(s, Pair::k12) < 1e-10);
  CHECK_THROWS_AS(verify_pair_limit(s, Pair::k23), UsageError);

  testing::SystemSampler rng(62);
  for (Pair p : kPairs) {
    const PairIndices ix = indices(p);
    for (int t = 0; t < 100; ++t) {
      CHECK(verify_pair_limit(rng.single_pair_system(ix.first, ix.second), p) < 1e-10);
    }
  }
}

TEST_CASE("verify_pair_spectrum") {
  testing::SystemSampler rng(63);
  for (Pair p : kPairs) {
    const PairIndices ix = indices(p);
    for (int t = 0; t < 30; ++t) {
      CHECK(verify_pair_spectrum(rng.single_pair_system(ix.first, ix.second), p, 4) < 1e-12);
    }
  }
  OscillatorSystem coupled;
  coupled.d12 = 0.5;
  coupled.d13 = 0.5;
  CHECK_THROWS_AS(verify_pair_spectrum(coupled, Pair::k12, 2), UsageError);
}

TEST_CASE("three-angle transform collapses to the planar rotations") {
  testing::SystemSampler rng(64);
  for (int t = 0; t < 200; ++t) {
    const Vec3 x{rng.uniform(-2, 2), rng.uniform(-2, 2), rng.uniform(-2, 2)};
    const double a = rng.uniform(-pi / 2 + 0.05, pi / 2 - 0.05);
    NormalizedSystem ns = normalize(rng.stable_system());

    const NormalCoordinates q12 = to_normal_coords(x, ns, {0, a, 0});
    const NormalCoordinates p12 = pair_normal_coords(x, ns.mu, a, Pair::k12);
    const NormalCoordinates q13 = to_normal_coords(x, ns, {a, 0, 0});
    const NormalCoordinates p13 = pair_normal_coords(x, ns.mu, a, Pair::k13);
    const NormalCoordinates q23 = to_normal_coords(x, ns, {0, 0, a});
    const NormalCoordinates p23 = pair_normal_coords(x, ns.mu, a, Pair::k23);
    for (int i = 0; i < 3; ++i) {
      CHECK(std::abs(q12.q[i] - p12.q[i]) < 1e-13);
      CHECK(std::abs(q13.q[i] - p13.q[i]) < 1e-13);
      CHECK(std::abs(q23.q[i] - p23.q[i]) < 1e-13);
    }
    CHECK(p12.q[0] == doctest::Approx(ns.mu[0] * std::cos(a) * x[0] - ns.mu[1] * std::sin(a) * x[1]));
  }
}
