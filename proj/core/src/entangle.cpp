#include "trimode/entangle.hpp"

#include <array>
#include <cmath>
#include <string>

#include "trimode/errors.hpp"

namespace trimode {

namespace {

// G_ab of the exponent, symmetric in (a, b); indices 0-based.
double cross(const GaussianGroundState& g, int a, int b) {
  if (a > b) std::swap(a, b);
  if (a == 0 && b == 1) return g.g12;
  if (a == 0 && b == 2) return g.g13;
  return g.g23;
}

double diagonal(const GaussianGroundState& g, int a) {
  return a == 0 ? g.A : (a == 1 ? g.B : g.C);
}

}  // namespace

ReducedDensityParams reduced_density_params(const GaussianGroundState& g, int kept) {
  if (kept < 1 || kept > 3) {
    throw DomainError("kept index must be 1, 2 or 3 (got " + std::to_string(kept) + ")");
  }
  const int k = kept - 1;
  const int i = (k + 1) % 3;
  const int j = (k + 2) % 3;

  const double a_k = diagonal(g, k);
  const double b_i = diagonal(g, i);
  const double c_j = diagonal(g, j);
  const double g_ki = cross(g, k, i);
  const double g_kj = cross(g, k, j);
  const double g_ij = cross(g, i, j);

  const double schur_i = b_i - g_ij * g_ij / c_j;
  if (!(a_k > 0.0) || !(b_i > 0.0) || !(c_j > 0.0) || !(schur_i > 0.0)) {
    throw DomainError("ground-state quadratic form is not positive definite");
  }

  const double mu2 = g.mu[k] * g.mu[k];
  const double lead = g_ki + g_kj * g_ij / c_j;
  ReducedDensityParams rd;
  rd.kept = kept;
  rd.w = mu2 * (g_kj * g_kj / c_j + lead * lead / schur_i);
  rd.L = mu2 * a_k - rd.w / 2.0;
  if (!(2.0 * rd.L - rd.w > 0.0)) {
    throw DomainError("ground-state quadratic form is not positive definite");
  }
  return rd;
}

PurityResult purity_from_Lw(const ReducedDensityParams& rd) {
  PurityResult r;
  r.purity = std::sqrt((2.0 * rd.L - rd.w) / (2.0 * rd.L + rd.w));
  r.linear_entropy = 1.0 - r.purity;
  return r;
}

PurityResult purity_closed_form(const LogFrequencyParams& lp, const EulerAngles& angles) {
  const double ct = std::cos(angles.theta), st = std::sin(angles.theta);
  const double cp = std::cos(angles.phi), sp = std::sin(angles.phi);
  const double cv = std::cos(angles.varphi), sv = std::sin(angles.varphi);
  // exp(r - s), exp(s - k), exp(k - r)
  const double e1 = std::exp(-lp.d1), e2 = std::exp(-lp.d2), e3 = std::exp(-lp.d3);

  const double u = st * sv + ct * cv * sp;
  const double r = ct * sv - st * cv * sp;
  const double s = -st * cv + ct * sp * sv;
  const double k = ct * cv + st * sp * sv;

  const double f1 = e1 * ct * ct * cp * cp + e2 * sp * sp + e3 * cp * cp * st * st;
  const double f2 = e1 * u * u + e2 * cp * cp * cv * cv + e3 * r * r;
  const double f3 = e1 * s * s + e2 * cp * cp * sv * sv + e3 * k * k;

  PurityResult res;
  res.purity = 1.0 / std::sqrt(f1 * f2 * f3);
  res.linear_entropy = 1.0 - res.purity;
  return res;
}

EntanglementReport analyze(const OscillatorSystem& sys, int kept) {
  EntanglementReport rep;
  rep.normalized = normalize(sys);
  rep.modes = decouple(coupling_matrix(rep.normalized));
  rep.ground = ground_gaussian(rep.modes, rep.normalized, sys.hbar);
  rep.reduced = reduced_density_params(rep.ground, kept);
  rep.result = purity_from_Lw(rep.reduced);
  return rep;
}

PurityResult purity(const OscillatorSystem& sys, int kept) { return analyze(sys, kept).result; }

}  // namespace trimode
