#pragma once

#include <array>

#include "trimode/linalg.hpp"

namespace trimode {

/// Raw physical parameters of three coupled oscillators:
///   H = 1/2 (sum p_i^2/m_i + sum m_i w_i^2 x_i^2 + D12 x1 x2 + D13 x1 x3 + D23 x2 x3).
/// Couplings may have any sign.
struct OscillatorSystem {
  std::array<double, 3> mass{1.0, 1.0, 1.0};
  std::array<double, 3> omega{1.0, 1.0, 1.0};
  double d12 = 0.0;
  double d13 = 0.0;
  double d23 = 0.0;
  double hbar = 1.0;

  /// Throws DomainError naming the first non-positive (or non-finite) field.
  void validate() const;
};

/// Equal-mass canonical form after x_i = X_i / mu_i, p_i = mu_i P_i.
struct NormalizedSystem {
  double m = 1.0;  ///< geometric-mean mass (m1 m2 m3)^(1/3)
  std::array<double, 3> mu{1.0, 1.0, 1.0};
  std::array<double, 3> omega{1.0, 1.0, 1.0};
  double j12 = 0.0;
  double j13 = 0.0;
  double j23 = 0.0;
  double hbar = 1.0;
};

/// Symmetric matrix R with diag(w_i^2) and off-diagonals J_ij.
class CouplingMatrix {
 public:
  CouplingMatrix() = default;
  /// Mirrors the upper triangle of `m`.
  explicit CouplingMatrix(const Mat3& m);

  const Mat3& matrix() const noexcept { return r_; }
  double operator()(std::size_t i, std::size_t j) const { return r_(i, j); }

 private:
  Mat3 r_;
};

NormalizedSystem normalize(const OscillatorSystem& sys);

CouplingMatrix coupling_matrix(const NormalizedSystem& ns);

/// True iff every eigenvalue of R exceeds 1e-12 * ||R||_F.
bool is_stable(const CouplingMatrix& cm);

/// Potential energy (1/2)(sum m_i w_i^2 x_i^2 + sum D_ij x_i x_j) at x.
double physical_potential(const OscillatorSystem& sys, const Vec3& x);

}  // namespace trimode
