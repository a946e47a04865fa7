#include "trimode/decouple.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <sstream>
#include <string>

#include "trimode/errors.hpp"

namespace trimode {

ForwardMap forward(const EulerAngles& angles, const Vec3& sigma_sq) {
  const double t = angles.theta, p = angles.phi, v = angles.varphi;
  const double s1 = sigma_sq[0], s2 = sigma_sq[1], s3 = sigma_sq[2];
  const double ct2 = std::cos(t) * std::cos(t), st2 = std::sin(t) * std::sin(t);
  const double cp2 = std::cos(p) * std::cos(p), sp2 = std::sin(p) * std::sin(p);
  const double cv2 = std::cos(v) * std::cos(v), sv2 = std::sin(v) * std::sin(v);
  const double sin2t = std::sin(2.0 * t), sin2p = std::sin(2.0 * p), sin2v = std::sin(2.0 * v);

  // Recurring combinations.
  const double mix13 = s1 * ct2 + s3 * st2;         // 1-3 rotated partner of sigma1^2
  const double mix31 = s3 * ct2 + s1 * st2;         // ... of sigma3^2
  const double mix2 = s2 * cp2 + mix13 * sp2;       // after the 1-2 rotation
  const double skew = (s1 - s3) / 2.0 * sin2t;      // off-diagonal created by theta
  const double split = (s1 - s2) * ct2 + (s3 - s2) * st2;

  ForwardMap f;
  f.omega_sq[0] = mix13 * cp2 + s2 * sp2;
  f.omega_sq[1] = mix2 * cv2 + mix31 * sv2 + skew * std::sin(p) * sin2v;
  f.omega_sq[2] = mix31 * cv2 + mix2 * sv2 - skew * std::sin(p) * sin2v;
  f.j12 = -split / 2.0 * sin2p * std::cos(v) - skew * std::cos(p) * std::sin(v);
  f.j13 = split / 2.0 * sin2p * std::sin(v) - skew * std::cos(p) * std::cos(v);
  f.j23 = skew * std::sin(p) * std::cos(2.0 * v) - (mix2 - mix31) / 2.0 * sin2v;
  return f;
}

EulerAngles extract_angles(const RotationMatrix& rot) {
  const Mat3& m = rot.m;
  const double cos_phi = std::hypot(m(0, 0), m(0, 2));
  if (cos_phi <= 1e-6) {
    std::ostringstream msg;
    msg << "gimbal lock: |cos phi| = " << cos_phi
        << "; only theta " << (m(0, 1) > 0 ? "-" : "+")
        << " varphi is determined, the angles form a one-parameter family";
    throw GimbalLockError(msg.str());
  }
  EulerAngles a;
  a.phi = std::atan2(m(0, 1), cos_phi);
  a.theta = std::atan2(m(0, 2), m(0, 0));
  a.varphi = std::atan2(-m(2, 1), m(1, 1));
  // atan2 may return -pi for a negative-zero argument; canonical range is (-pi, pi].
  if (a.theta <= -std::numbers::pi) a.theta = std::numbers::pi;
  if (a.varphi <= -std::numbers::pi) a.varphi = std::numbers::pi;
  return a;
}

NormalModes normal_modes_from_eigensystem(const SymmetricEigen& eig) {
  std::array<int, 3> perm{0, 1, 2};
  const std::array<Vec3, 4> sign_patterns{{{1, 1, 1}, {1, -1, -1}, {-1, 1, -1}, {-1, -1, 1}}};

  bool found = false;
  double best_cost = std::numeric_limits<double>::infinity();
  Vec3 best_values{};
  EulerAngles best_angles;

  auto descending_before = [](const Vec3& x, const Vec3& y) {
    return std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end(),
                                        std::greater<double>());
  };

  do {
    Mat3 base;
    Vec3 values{};
    for (std::size_t c = 0; c < 3; ++c) {
      values[c] = eig.values[perm[c]];
      for (std::size_t r = 0; r < 3; ++r) base(r, c) = eig.vectors(r, perm[c]);
    }
    // Each pattern has an even number of flips; negating all three fixes det = -1.
    const double base_det = base.determinant();

    for (Vec3 s : sign_patterns) {
      if (base_det < 0) s = {-s[0], -s[1], -s[2]};
      RotationMatrix m;
      for (std::size_t r = 0; r < 3; ++r)
        for (std::size_t c = 0; c < 3; ++c) m.m(r, c) = base(r, c) * s[c];

      EulerAngles a;
      try {
        a = extract_angles(m);
      } catch (const GimbalLockError&) {
        continue;
      }
      const double cost = a.theta * a.theta + a.phi * a.phi + a.varphi * a.varphi;
      const bool tie = std::abs(cost - best_cost) <= 1e-12 * std::max(1.0, cost);
      if (!found || (!tie && cost < best_cost) || (tie && descending_before(values, best_values))) {
        found = true;
        best_cost = cost;
        best_values = values;
        best_angles = a;
      }
    }
  } while (std::next_permutation(perm.begin(), perm.end()));

  if (!found) throw NumericError("no gimbal-free parameterization of the eigenbasis", 0);

  NormalModes modes;
  for (std::size_t i = 0; i < 3; ++i) {
    if (!(best_values[i] > 0.0)) {
      throw InstabilityError("non-positive squared mode frequency " + std::to_string(best_values[i]),
                             best_values[i]);
    }
    modes.sigma[i] = std::sqrt(best_values[i]);
  }
  modes.angles = best_angles;
  const Vec3& v = eig.values;
  const double scale = std::max({std::abs(v[0]), std::abs(v[1]), std::abs(v[2])});
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = i + 1; j < 3; ++j)
      if (std::abs(v[i] - v[j]) < 1e-9 * scale) modes.degenerate = true;
  return modes;
}

NormalModes decouple(const CouplingMatrix& cm) {
  const SymmetricEigen eig = jacobi_eigen(cm.matrix());
  const double floor = 1e-12 * cm.matrix().frobenius_norm();
  for (double v : eig.values) {
    if (!(v > floor)) {
      std::ostringstream msg;
      msg.precision(17);
      msg << "coupling matrix is not positive definite: eigenvalue " << v;
      throw InstabilityError(msg.str(), v);
    }
  }
  return normal_modes_from_eigensystem(eig);
}

LogFrequencyParams log_params(const NormalModes& modes) {
  const Vec3 logs{std::log(modes.sigma[0]), std::log(modes.sigma[1]), std::log(modes.sigma[2])};
  const double mean = (logs[0] + logs[1] + logs[2]) / 3.0;
  LogFrequencyParams lp;
  lp.varpi = std::cbrt(modes.sigma[0] * modes.sigma[1] * modes.sigma[2]);
  lp.d1 = logs[0] - mean;
  lp.d2 = logs[1] - mean;
  lp.d3 = logs[2] - mean;
  return lp;
}

Mat3 reconstruct(const NormalModes& modes) {
  const Mat3 m = rotation(modes.angles).m;
  return m * Mat3::diag(modes.sigma_squared()) * m.transposed();
}

double reconstruction_residual(const NormalModes& modes, const CouplingMatrix& cm) {
  return (reconstruct(modes) - cm.matrix()).frobenius_norm() / cm.matrix().frobenius_norm();
}

}  // namespace trimode
