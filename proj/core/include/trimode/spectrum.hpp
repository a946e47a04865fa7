#pragma once

#include "trimode/decouple.hpp"
#include "trimode/linalg.hpp"
#include "trimode/model.hpp"

namespace trimode {

/// Largest quantum number accepted per mode; the plain Hermite recurrence
/// stays comfortably inside double range up to here.
inline constexpr int kMaxQuantumNumber = 30;

struct QuantumNumbers {
  int n1 = 0;
  int n2 = 0;
  int n3 = 0;

  int total() const { return n1 + n2 + n3; }
  /// DomainError unless 0 <= n_i <= kMaxQuantumNumber.
  void validate() const;
};

struct NormalCoordinates {
  Vec3 q{};
};

/// Physicists' Hermite polynomial H_n(z) by three-term recurrence.
double hermite(int n, double z);

/// E = hbar (S1 (n1 + 1/2) + S2 (n2 + 1/2) + S3 (n3 + 1/2)).
double energy(const NormalModes& modes, const QuantumNumbers& n, double hbar);

/// The same spectrum written through varpi and the log-ratios.
double energy_log_form(const LogFrequencyParams& lp, const QuantumNumbers& n, double hbar);

/// q = M^T (mu1 x1, mu2 x2, mu3 x3), written out term by term.
NormalCoordinates to_normal_coords(const Vec3& x, const NormalizedSystem& ns, const EulerAngles& angles);

/// Normalized eigenfunction psi_n evaluated at physical coordinates x.
double wavefunction(const QuantumNumbers& n, const NormalModes& modes, const NormalizedSystem& ns,
                    const Vec3& x, double hbar);

/// Ground state psi_000(x) = N exp(-Q(x)) with
///   Q(x) = A mu1^2 x1^2 + B mu2^2 x2^2 + C mu3^2 x3^2
///          - 2 mu1 mu2 G12 x1 x2 - 2 mu1 mu3 G13 x1 x3 - 2 mu2 mu3 G23 x2 x3.
/// Equivalently Q(x) = (mu x)^T M diag(alpha, beta, gamma) M^T (mu x), so each
/// G_ij is minus the corresponding off-diagonal entry of that rotated matrix.
struct GaussianGroundState {
  double A = 0.0, B = 0.0, C = 0.0;
  double g12 = 0.0, g13 = 0.0, g23 = 0.0;
  double alpha = 0.0, beta = 0.0, gamma = 0.0;
  Vec3 mu{1.0, 1.0, 1.0};

  /// Symmetric S with Q(x) = x^T S x (mu factors included).
  Mat3 form_matrix() const;
  double quadratic_form(const Vec3& x) const;
  /// N = (det 2S)^(1/4) / pi^(3/4), so that the integral of psi^2 is 1.
  double normalization() const;
  double evaluate(const Vec3& x) const;
};

GaussianGroundState ground_gaussian(const NormalModes& modes, const NormalizedSystem& ns, double hbar);

}  // namespace trimode
