#include "trimode/spectrum.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "trimode/errors.hpp"

namespace trimode {

void QuantumNumbers::validate() const {
  for (int n : {n1, n2, n3}) {
    if (n < 0 || n > kMaxQuantumNumber) {
      throw DomainError("quantum number " + std::to_string(n) + " outside [0, " +
                        std::to_string(kMaxQuantumNumber) + "]");
    }
  }
}

double hermite(int n, double z) {
  if (n == 0) return 1.0;
  double prev = 1.0;
  double cur = 2.0 * z;
  for (int k = 1; k < n; ++k) {
    const double next = 2.0 * z * cur - 2.0 * k * prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

double energy(const NormalModes& modes, const QuantumNumbers& n, double hbar) {
  return hbar * (modes.sigma[0] * (n.n1 + 0.5) + modes.sigma[1] * (n.n2 + 0.5) +
                 modes.sigma[2] * (n.n3 + 0.5));
}

double energy_log_form(const LogFrequencyParams& lp, const QuantumNumbers& n, double hbar) {
  const double e1 = std::exp(lp.d1), e2 = std::exp(lp.d2), e3 = std::exp(lp.d3);
  return hbar * lp.varpi * (e1 * n.n1 + e2 * n.n2 + e3 * n.n3 + (e1 + e2 + e3) / 2.0);
}

NormalCoordinates to_normal_coords(const Vec3& x, const NormalizedSystem& ns, const EulerAngles& angles) {
  const double ct = std::cos(angles.theta), st = std::sin(angles.theta);
  const double cp = std::cos(angles.phi), sp = std::sin(angles.phi);
  const double cv = std::cos(angles.varphi), sv = std::sin(angles.varphi);
  const double y1 = ns.mu[0] * x[0], y2 = ns.mu[1] * x[1], y3 = ns.mu[2] * x[2];
  NormalCoordinates q;
  q.q[0] = ct * cp * y1 - (st * sv + ct * cv * sp) * y2 - (st * cv - ct * sp * sv) * y3;
  q.q[1] = sp * y1 + cp * cv * y2 - cp * sv * y3;
  q.q[2] = cp * st * y1 + (ct * sv - st * cv * sp) * y2 + (ct * cv + st * sp * sv) * y3;
  return q;
}

double wavefunction(const QuantumNumbers& n, const NormalModes& modes, const NormalizedSystem& ns,
                    const Vec3& x, double hbar) {
  n.validate();
  const NormalCoordinates q = to_normal_coords(x, ns, modes.angles);
  const int quanta[3] = {n.n1, n.n2, n.n3};

  double value = 1.0;
  double exponent = 0.0;
  double norm_sq = 1.0;  // 2^(n1+n2+n3) n1! n2! n3!
  for (int i = 0; i < 3; ++i) {
    const double k = ns.m * modes.sigma[i] / hbar;
    value *= std::pow(k / std::numbers::pi, 0.25) * hermite(quanta[i], std::sqrt(k) * q.q[i]);
    exponent -= 0.5 * k * q.q[i] * q.q[i];
    for (int j = 1; j <= quanta[i]; ++j) norm_sq *= 2.0 * j;
  }
  return value * std::exp(exponent) / std::sqrt(norm_sq);
}

Mat3 GaussianGroundState::form_matrix() const {
  Mat3 s;
  s(0, 0) = A * mu[0] * mu[0];
  s(1, 1) = B * mu[1] * mu[1];
  s(2, 2) = C * mu[2] * mu[2];
  s(0, 1) = s(1, 0) = -g12 * mu[0] * mu[1];
  s(0, 2) = s(2, 0) = -g13 * mu[0] * mu[2];
  s(1, 2) = s(2, 1) = -g23 * mu[1] * mu[2];
  return s;
}

double GaussianGroundState::quadratic_form(const Vec3& x) const {
  const double y1 = mu[0] * x[0], y2 = mu[1] * x[1], y3 = mu[2] * x[2];
  return A * y1 * y1 + B * y2 * y2 + C * y3 * y3 - 2.0 * g12 * y1 * y2 - 2.0 * g13 * y1 * y3 -
         2.0 * g23 * y2 * y3;
}

double GaussianGroundState::normalization() const {
  const double det2s = 8.0 * form_matrix().determinant();
  return std::pow(det2s, 0.25) / std::pow(std::numbers::pi, 0.75);
}

double GaussianGroundState::evaluate(const Vec3& x) const {
  return normalization() * std::exp(-quadratic_form(x));
}

GaussianGroundState ground_gaussian(const NormalModes& modes, const NormalizedSystem& ns, double hbar) {
  const double t = modes.angles.theta, p = modes.angles.phi, v = modes.angles.varphi;
  const double ct = std::cos(t), st = std::sin(t);
  const double cp = std::cos(p), sp = std::sin(p);
  const double cv = std::cos(v), sv = std::sin(v);

  GaussianGroundState g;
  g.alpha = ns.m * modes.sigma[0] / (2.0 * hbar);
  g.beta = ns.m * modes.sigma[1] / (2.0 * hbar);
  g.gamma = ns.m * modes.sigma[2] / (2.0 * hbar);
  g.mu = ns.mu;
  const double a = g.alpha, b = g.beta, c = g.gamma;

  // Recurring entries of M (rows 2 and 3 up to sign).
  const double u = st * sv + ct * cv * sp;   // -M21
  const double r = ct * sv - st * cv * sp;   //  M23
  const double s = -st * cv + ct * sp * sv;  //  M31
  const double k = ct * cv + st * sp * sv;   //  M33

  g.A = a * ct * ct * cp * cp + b * sp * sp + c * cp * cp * st * st;
  g.B = a * u * u + b * cp * cp * cv * cv + c * r * r;
  g.C = a * s * s + b * cp * cp * sv * sv + c * k * k;
  g.g12 = a * ct * cp * u - b * sp * cp * cv - c * cp * st * r;
  g.g13 = -a * ct * cp * s + b * sp * cp * sv - c * cp * st * k;
  g.g23 = a * u * s + b * cp * cv * cp * sv - c * r * k;
  return g;
}

}  // namespace trimode
