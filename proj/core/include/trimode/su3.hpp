#pragma once

#include <array>
#include <complex>
#include <string_view>

#include "trimode/linalg.hpp"

namespace trimode {

using Complex = std::complex<double>;

/// Dense complex 3x3 matrix, row-major. Only the su3 module works in complex
/// arithmetic; everything downstream sees real rotations.
struct CMat3 {
  std::array<Complex, 9> a{};

  Complex& operator()(std::size_t i, std::size_t j) { return a[3 * i + j]; }
  const Complex& operator()(std::size_t i, std::size_t j) const { return a[3 * i + j]; }

  static CMat3 identity();
  static CMat3 from_real(const Mat3& m);
};

CMat3 operator*(const CMat3& x, const CMat3& y);
CMat3 operator+(const CMat3& x, const CMat3& y);
CMat3 operator-(const CMat3& x, const CMat3& y);
CMat3 operator*(Complex s, const CMat3& x);
double max_abs_diff(const CMat3& x, const CMat3& y);

/// Gell-Mann generator lambda_i, i in 1..8 (DomainError otherwise).
CMat3 gell_mann(int i);

/// Totally antisymmetric f^{jkl} of su(3); indices in 1..8.
double structure_constant(int j, int k, int l);

/// Angles of M = exp(i varphi l7) exp(i phi l2) exp(i theta l5).
/// theta rotates the 1-3 plane, phi the 1-2 plane, varphi the 2-3 plane.
struct EulerAngles {
  double theta = 0.0;
  double phi = 0.0;
  double varphi = 0.0;
};

struct RotationMatrix {
  Mat3 m = Mat3::identity();
};

/// Closed-form product matrix:
///   row 1: ( c_t c_p,                    s_p,      c_p s_t                  )
///   row 2: (-s_t s_v - c_t c_v s_p,     c_p c_v,  c_t s_v - s_t c_v s_p     )
///   row 3: (-s_t c_v + c_t s_p s_v,    -c_p s_v,  c_t c_v + s_t s_p s_v     )
RotationMatrix rotation(const EulerAngles& angles);

/// Matrix exponential by scaling and squaring with a Taylor series; the
/// series is summed until terms fall below 1e-16 relative.
CMat3 expm(const CMat3& x);

/// Same rotation built from the three exponentials. Throws NumericError if the
/// product has an imaginary part above 1e-12.
RotationMatrix rotation_via_exponentials(const EulerAngles& angles);

/// max |[l_j, l_k] - 2i sum_l f^{jkl} l_l|.
double commutator_residual(int j, int k);

struct IdentityResidual {
  std::string_view name;
  double residual;
};

/// Residuals of the twelve conjugation identities exp(-i a l_g) X exp(+i a l_g)
/// for g in {2, 5, 7} and X in {the two other off-diagonal generators,
/// the generator's own symmetric partner, diag(d)}.
std::array<IdentityResidual, 12> conjugation_identity_residuals(double angle, const Vec3& d);

}  // namespace trimode
