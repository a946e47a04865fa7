#include "trimode/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "trimode/errors.hpp"

namespace trimode {

Mat3 Mat3::transposed() const {
  Mat3 t;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) t(i, j) = (*this)(j, i);
  return t;
}

double Mat3::determinant() const {
  const Mat3& m = *this;
  return m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) -
         m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0)) +
         m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
}

double Mat3::frobenius_norm() const {
  double s = 0.0;
  for (double x : a) s += x * x;
  return std::sqrt(s);
}

Mat3 Mat3::inverse() const {
  const Mat3& m = *this;
  Mat3 adj;
  adj(0, 0) = m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1);
  adj(0, 1) = m(0, 2) * m(2, 1) - m(0, 1) * m(2, 2);
  adj(0, 2) = m(0, 1) * m(1, 2) - m(0, 2) * m(1, 1);
  adj(1, 0) = m(1, 2) * m(2, 0) - m(1, 0) * m(2, 2);
  adj(1, 1) = m(0, 0) * m(2, 2) - m(0, 2) * m(2, 0);
  adj(1, 2) = m(0, 2) * m(1, 0) - m(0, 0) * m(1, 2);
  adj(2, 0) = m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0);
  adj(2, 1) = m(0, 1) * m(2, 0) - m(0, 0) * m(2, 1);
  adj(2, 2) = m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
  return (1.0 / determinant()) * adj;
}

Mat3 operator*(const Mat3& x, const Mat3& y) {
  Mat3 r;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      r(i, j) = x(i, 0) * y(0, j) + x(i, 1) * y(1, j) + x(i, 2) * y(2, j);
  return r;
}

Vec3 operator*(const Mat3& x, const Vec3& v) {
  return {x(0, 0) * v[0] + x(0, 1) * v[1] + x(0, 2) * v[2],
          x(1, 0) * v[0] + x(1, 1) * v[1] + x(1, 2) * v[2],
          x(2, 0) * v[0] + x(2, 1) * v[1] + x(2, 2) * v[2]};
}

Mat3 operator+(const Mat3& x, const Mat3& y) {
  Mat3 r;
  for (std::size_t k = 0; k < 9; ++k) r.a[k] = x.a[k] + y.a[k];
  return r;
}

Mat3 operator-(const Mat3& x, const Mat3& y) {
  Mat3 r;
  for (std::size_t k = 0; k < 9; ++k) r.a[k] = x.a[k] - y.a[k];
  return r;
}

Mat3 operator*(double s, const Mat3& x) {
  Mat3 r;
  for (std::size_t k = 0; k < 9; ++k) r.a[k] = s * x.a[k];
  return r;
}

double max_abs_diff(const Mat3& x, const Mat3& y) {
  double d = 0.0;
  for (std::size_t k = 0; k < 9; ++k) d = std::max(d, std::abs(x.a[k] - y.a[k]));
  return d;
}

namespace {

double off_diagonal_norm(const Mat3& m) {
  return std::sqrt(2.0 * (m(0, 1) * m(0, 1) + m(0, 2) * m(0, 2) + m(1, 2) * m(1, 2)));
}

// Annihilates m(p,q) with one plane rotation and accumulates it into v.
void rotate(Mat3& m, Mat3& v, std::size_t p, std::size_t q) {
  const double apq = m(p, q);
  if (apq == 0.0) return;
  const double theta = (m(q, q) - m(p, p)) / (2.0 * apq);
  double t;
  if (std::abs(theta) > 1e150) {
    t = 0.5 / theta;
  } else {
    t = std::copysign(1.0, theta) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
  }
  const double c = 1.0 / std::sqrt(t * t + 1.0);
  const double s = t * c;

  m(p, p) -= t * apq;
  m(q, q) += t * apq;
  m(p, q) = m(q, p) = 0.0;
  for (std::size_t r = 0; r < 3; ++r) {
    if (r == p || r == q) continue;
    const double arp = m(r, p);
    const double arq = m(r, q);
    m(r, p) = m(p, r) = c * arp - s * arq;
    m(r, q) = m(q, r) = s * arp + c * arq;
  }
  for (std::size_t r = 0; r < 3; ++r) {
    const double vrp = v(r, p);
    const double vrq = v(r, q);
    v(r, p) = c * vrp - s * vrq;
    v(r, q) = s * vrp + c * vrq;
  }
}

}  // namespace

SymmetricEigen jacobi_eigen(const Mat3& m, double rel_tol, int max_sweeps) {
  Mat3 work = m;
  Mat3 v = Mat3::identity();
  const double threshold = rel_tol * m.frobenius_norm();

  int sweep = 0;
  while (off_diagonal_norm(work) > threshold) {
    if (sweep == max_sweeps) {
      throw NumericError("Jacobi eigensolver did not converge after " +
                             std::to_string(sweep) + " sweeps",
                         sweep);
    }
    rotate(work, v, 0, 1);
    rotate(work, v, 0, 2);
    rotate(work, v, 1, 2);
    ++sweep;
  }
  return {{work(0, 0), work(1, 1), work(2, 2)}, v, sweep};
}

}  // namespace trimode
