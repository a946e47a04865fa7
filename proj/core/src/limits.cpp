#include "trimode/limits.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <string>

#include "trimode/decouple.hpp"
#include "trimode/entangle.hpp"
#include "trimode/errors.hpp"

namespace trimode {

PairIndices indices(Pair pair) {
  switch (pair) {
    case Pair::k12: return {0, 1, 2};
    case Pair::k13: return {0, 2, 1};
    case Pair::k23: return {1, 2, 0};
  }
  return {0, 1, 2};
}

std::string_view to_string(Pair pair) {
  switch (pair) {
    case Pair::k12: return "12";
    case Pair::k13: return "13";
    case Pair::k23: return "23";
  }
  return "12";
}

PairParams pair_params(double omega_i, double omega_j, double cross_coefficient, Pair pair) {
  const double wi2 = omega_i * omega_i;
  const double wj2 = omega_j * omega_j;
  const double k_sq = wi2 * wj2 - cross_coefficient * cross_coefficient / 4.0;
  if (!(k_sq > 0.0)) {
    throw InstabilityError("pair " + std::string(to_string(pair)) +
                               " is unstable: k^2 = " + std::to_string(k_sq),
                           k_sq);
  }
  PairParams pp;
  pp.pair = pair;
  pp.k = std::sqrt(k_sq);
  const double root = std::hypot(wi2 - wj2, cross_coefficient);
  pp.eta = 0.5 * std::log((wi2 + wj2 + root) / (2.0 * pp.k));
  return pp;
}

double purity_two_body(double eta, double angle) {
  const double c2 = std::cos(angle) * std::cos(angle);
  const double s2 = std::sin(angle) * std::sin(angle);
  const double em = std::exp(-eta), ep = std::exp(eta);
  return 1.0 / std::sqrt((em * c2 + ep * s2) * (em * s2 + ep * c2));
}

namespace {

double coupling_of(const OscillatorSystem& sys, Pair pair) {
  switch (pair) {
    case Pair::k12: return sys.d12;
    case Pair::k13: return sys.d13;
    case Pair::k23: return sys.d23;
  }
  return 0.0;
}

double j_of(const NormalizedSystem& ns, Pair pair) {
  switch (pair) {
    case Pair::k12: return ns.j12;
    case Pair::k13: return ns.j13;
    case Pair::k23: return ns.j23;
  }
  return 0.0;
}

void require_single_pair(const OscillatorSystem& sys, Pair pair) {
  for (Pair other : {Pair::k12, Pair::k13, Pair::k23}) {
    if (other != pair && coupling_of(sys, other) != 0.0) {
      throw UsageError("pair-limit check for " + std::string(to_string(pair)) +
                       " requires d" + std::string(to_string(other)) + " = 0");
    }
  }
}

double surviving_angle(const EulerAngles& a, Pair pair) {
  switch (pair) {
    case Pair::k12: return a.phi;
    case Pair::k13: return a.theta;
    case Pair::k23: return a.varphi;
  }
  return 0.0;
}

PairParams params_for(const NormalizedSystem& ns, Pair pair) {
  const PairIndices idx = indices(pair);
  return pair_params(ns.omega[idx.first], ns.omega[idx.second], 2.0 * j_of(ns, pair), pair);
}

}  // namespace

double verify_pair_limit(const OscillatorSystem& sys, Pair pair) {
  require_single_pair(sys, pair);
  const EntanglementReport rep = analyze(sys, indices(pair).first + 1);
  const PairParams pp = params_for(rep.normalized, pair);
  const double angle = std::abs(surviving_angle(rep.modes.angles, pair));
  return std::abs(rep.result.purity - purity_two_body(pp.eta, angle));
}

double pair_energy(const PairParams& pp, double spectator_omega, int n_hi, int n_lo, int n_spectator,
                   double hbar) {
  const double root_k = std::sqrt(pp.k);
  return hbar * root_k * (std::exp(pp.eta) * n_hi + std::exp(-pp.eta) * n_lo + std::cosh(pp.eta)) +
         hbar * spectator_omega * (n_spectator + 0.5);
}

double verify_pair_spectrum(const OscillatorSystem& sys, Pair pair, int n_max) {
  require_single_pair(sys, pair);
  const NormalizedSystem ns = normalize(sys);
  const NormalModes modes = decouple(coupling_matrix(ns));
  const PairParams pp = params_for(ns, pair);
  const double spectator = ns.omega[indices(pair).spectator];

  // Labels (hi, lo, spectator) -> mode slots, chosen by closest frequencies.
  const Vec3 labelled{std::sqrt(pp.k) * std::exp(pp.eta), std::sqrt(pp.k) * std::exp(-pp.eta), spectator};
  std::array<int, 3> perm{0, 1, 2};
  std::array<int, 3> best = perm;
  double best_err = std::numeric_limits<double>::infinity();
  do {
    double err = 0.0;
    for (int l = 0; l < 3; ++l) err += std::abs(labelled[l] - modes.sigma[perm[l]]);
    if (err < best_err) {
      best_err = err;
      best = perm;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));

  double worst = 0.0;
  for (int a = 0; a <= n_max; ++a) {
    for (int b = 0; a + b <= n_max; ++b) {
      for (int c = 0; a + b + c <= n_max; ++c) {
        std::array<int, 3> slots{};
        slots[best[0]] = a;
        slots[best[1]] = b;
        slots[best[2]] = c;
        const double e_full = energy(modes, {slots[0], slots[1], slots[2]}, sys.hbar);
        const double e_pair = pair_energy(pp, spectator, a, b, c, sys.hbar);
        worst = std::max(worst, std::abs(e_full - e_pair) / std::abs(e_pair));
      }
    }
  }
  return worst;
}

NormalCoordinates pair_normal_coords(const Vec3& x, const Vec3& mu, double angle, Pair pair) {
  const PairIndices idx = indices(pair);
  const double c = std::cos(angle), s = std::sin(angle);
  const double yi = mu[idx.first] * x[idx.first];
  const double yj = mu[idx.second] * x[idx.second];
  NormalCoordinates q;
  q.q[idx.first] = c * yi - s * yj;
  q.q[idx.second] = s * yi + c * yj;
  q.q[idx.spectator] = mu[idx.spectator] * x[idx.spectator];
  return q;
}

}  // namespace trimode
