#pragma once

#include <array>
#include <cstddef>

namespace trimode {

using Vec3 = std::array<double, 3>;

/// Dense real 3x3 matrix, row-major.
struct Mat3 {
  std::array<double, 9> a{};

  constexpr double& operator()(std::size_t i, std::size_t j) { return a[3 * i + j]; }
  constexpr double operator()(std::size_t i, std::size_t j) const { return a[3 * i + j]; }

  static constexpr Mat3 identity() {
    Mat3 m;
    m(0, 0) = m(1, 1) = m(2, 2) = 1.0;
    return m;
  }
  static constexpr Mat3 diag(const Vec3& d) {
    Mat3 m;
    for (std::size_t i = 0; i < 3; ++i) m(i, i) = d[i];
    return m;
  }

  Mat3 transposed() const;
  double determinant() const;
  double frobenius_norm() const;
  /// Inverse by adjugate; caller guarantees non-singularity.
  Mat3 inverse() const;
};

Mat3 operator*(const Mat3& x, const Mat3& y);
Vec3 operator*(const Mat3& x, const Vec3& v);
Mat3 operator+(const Mat3& x, const Mat3& y);
Mat3 operator-(const Mat3& x, const Mat3& y);
Mat3 operator*(double s, const Mat3& x);

/// Largest absolute entry of x - y.
double max_abs_diff(const Mat3& x, const Mat3& y);

/// Eigen-decomposition of a real symmetric matrix: m = vectors * diag(values) * vectors^T.
/// Column k of `vectors` belongs to values[k]. Order is whatever the sweeps produce.
struct SymmetricEigen {
  Vec3 values{};
  Mat3 vectors;
  int sweeps = 0;
};

/// Cyclic Jacobi rotations until the off-diagonal Frobenius norm falls below
/// rel_tol * ||m||_F. Throws NumericError after max_sweeps.
SymmetricEigen jacobi_eigen(const Mat3& m, double rel_tol = 1e-14, int max_sweeps = 50);

}  // namespace trimode
