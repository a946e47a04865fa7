#pragma once

#include "trimode/linalg.hpp"
#include "trimode/model.hpp"
#include "trimode/su3.hpp"

namespace trimode {

/// Mode frequencies and the rotation with R = M diag(sigma^2) M^T.
struct NormalModes {
  Vec3 sigma{1.0, 1.0, 1.0};
  EulerAngles angles;
  /// Two eigenvalues closer than 1e-9 relative; the basis inside that
  /// eigenspace is then arbitrary.
  bool degenerate = false;

  Vec3 sigma_squared() const { return {sigma[0] * sigma[0], sigma[1] * sigma[1], sigma[2] * sigma[2]}; }
};

/// Geometric-mean frequency and the log-ratios d1 = s - r, d2 = k - s, d3 = r - k
/// so that sigma_i = varpi * exp(d_i). Only the differences are physical.
struct LogFrequencyParams {
  double varpi = 1.0;
  double d1 = 0.0;
  double d2 = 0.0;
  double d3 = 0.0;
};

struct ForwardMap {
  Vec3 omega_sq{};
  double j12 = 0.0;
  double j13 = 0.0;
  double j23 = 0.0;
};

/// Explicit trigonometric expressions for (w_i^2, J_ij) as functions of the
/// angles and the squared mode frequencies.
ForwardMap forward(const EulerAngles& angles, const Vec3& sigma_sq);

/// Inverse problem: mode frequencies and angles of a stable coupling matrix.
/// Throws InstabilityError for a non-positive-definite R and NumericError if
/// the eigensolver does not converge.
NormalModes decouple(const CouplingMatrix& cm);

/// Picks the column order and signs of an eigenbasis that yield the smallest
/// theta^2 + phi^2 + varphi^2 (ties: descending eigenvalues). Eigenvalues must
/// be positive.
NormalModes normal_modes_from_eigensystem(const SymmetricEigen& eig);

/// Inverse of `rotation`. Throws GimbalLockError when |cos phi| <= 1e-6.
EulerAngles extract_angles(const RotationMatrix& rot);

LogFrequencyParams log_params(const NormalModes& modes);

/// M diag(sigma^2) M^T.
Mat3 reconstruct(const NormalModes& modes);

/// ||M diag(sigma^2) M^T - R||_F / ||R||_F.
double reconstruction_residual(const NormalModes& modes, const CouplingMatrix& cm);

}  // namespace trimode
