#pragma once

#include <string_view>

#include "trimode/model.hpp"
#include "trimode/spectrum.hpp"

namespace trimode {

/// A coupled pair of oscillators; the third one is the spectator.
enum class Pair { k12, k13, k23 };

struct PairIndices {
  int first;      ///< 0-based
  int second;     ///< 0-based
  int spectator;  ///< 0-based
};

PairIndices indices(Pair pair);
std::string_view to_string(Pair pair);

/// Two-oscillator parameters: k = sqrt(wi^2 wj^2 - J^2/4) and
/// exp(+-2 eta) = (wi^2 + wj^2 +- sqrt((wi^2 - wj^2)^2 + J^2)) / (2k), eta >= 0.
///
/// J is the full coefficient of x_i x_j in the potential (m/2)(... + J x_i x_j),
/// i.e. twice the off-diagonal entry R_ij. With that convention
/// sqrt(k) exp(+-eta) are exactly the two mode frequencies of the pair.
struct PairParams {
  double k = 1.0;
  double eta = 0.0;
  Pair pair = Pair::k12;
};

/// Throws InstabilityError when k^2 <= 0.
PairParams pair_params(double omega_i, double omega_j, double cross_coefficient, Pair pair = Pair::k12);

/// P00(eta, a) = [(e^-eta cos^2 a + e^eta sin^2 a)(e^-eta sin^2 a + e^eta cos^2 a)]^(-1/2).
double purity_two_body(double eta, double angle);

/// |P_full - P00(eta_pair, |a|)| where P_full keeps the pair's first oscillator
/// and a is the one surviving rotation angle (phi for 12, theta for 13, varphi
/// for 23). Throws UsageError if a coupling outside `pair` is non-zero.
double verify_pair_limit(const OscillatorSystem& sys, Pair pair);

/// Two-oscillator spectrum
///   E = hbar sqrt(k) (e^eta n_hi + e^-eta n_lo + cosh eta) + hbar w_s (n_s + 1/2).
double pair_energy(const PairParams& pp, double spectator_omega, int n_hi, int n_lo, int n_spectator,
                   double hbar);

/// Largest relative deviation between pair_energy and energy() over all
/// quantum numbers with total <= n_max. Mode labels are matched by value.
double verify_pair_spectrum(const OscillatorSystem& sys, Pair pair, int n_max);

/// Planar rotation of (mu_i x_i, mu_j x_j) by `angle`, spectator copied:
/// e.g. for 12: q1 = mu1 cos a x1 - mu2 sin a x2, q2 = mu1 sin a x1 + mu2 cos a x2, q3 = mu3 x3.
NormalCoordinates pair_normal_coords(const Vec3& x, const Vec3& mu, double angle, Pair pair);

}  // namespace trimode
