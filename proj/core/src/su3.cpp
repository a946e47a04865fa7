#include "trimode/su3.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "trimode/errors.hpp"

namespace trimode {

CMat3 CMat3::identity() {
  CMat3 m;
  m(0, 0) = m(1, 1) = m(2, 2) = 1.0;
  return m;
}

CMat3 CMat3::from_real(const Mat3& r) {
  CMat3 m;
  for (std::size_t k = 0; k < 9; ++k) m.a[k] = r.a[k];
  return m;
}

CMat3 operator*(const CMat3& x, const CMat3& y) {
  CMat3 r;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      r(i, j) = x(i, 0) * y(0, j) + x(i, 1) * y(1, j) + x(i, 2) * y(2, j);
  return r;
}

CMat3 operator+(const CMat3& x, const CMat3& y) {
  CMat3 r;
  for (std::size_t k = 0; k < 9; ++k) r.a[k] = x.a[k] + y.a[k];
  return r;
}

CMat3 operator-(const CMat3& x, const CMat3& y) {
  CMat3 r;
  for (std::size_t k = 0; k < 9; ++k) r.a[k] = x.a[k] - y.a[k];
  return r;
}

CMat3 operator*(Complex s, const CMat3& x) {
  CMat3 r;
  for (std::size_t k = 0; k < 9; ++k) r.a[k] = s * x.a[k];
  return r;
}

double max_abs_diff(const CMat3& x, const CMat3& y) {
  double d = 0.0;
  for (std::size_t k = 0; k < 9; ++k) d = std::max(d, std::abs(x.a[k] - y.a[k]));
  return d;
}

CMat3 gell_mann(int i) {
  const Complex I(0.0, 1.0);
  CMat3 m;
  switch (i) {
    case 1: m(0, 1) = m(1, 0) = 1.0; break;
    case 2: m(0, 1) = -I; m(1, 0) = I; break;
    case 3: m(0, 0) = 1.0; m(1, 1) = -1.0; break;
    case 4: m(0, 2) = m(2, 0) = 1.0; break;
    case 5: m(0, 2) = -I; m(2, 0) = I; break;
    case 6: m(1, 2) = m(2, 1) = 1.0; break;
    case 7: m(1, 2) = -I; m(2, 1) = I; break;
    case 8: {
      const double s = 1.0 / std::sqrt(3.0);
      m(0, 0) = s;
      m(1, 1) = s;
      m(2, 2) = -2.0 * s;
      break;
    }
    default:
      throw DomainError("Gell-Mann index must be in 1..8 (got " + std::to_string(i) + ")");
  }
  return m;
}

double structure_constant(int j, int k, int l) {
  for (int idx : {j, k, l}) {
    if (idx < 1 || idx > 8) {
      throw DomainError("structure constant index must be in 1..8 (got " +
                        std::to_string(idx) + ")");
    }
  }
  if (j == k || k == l || j == l) return 0.0;

  // Sort ascending, tracking the permutation parity.
  std::array<int, 3> s{j, k, l};
  int sign = 1;
  for (int pass = 0; pass < 2; ++pass) {
    for (int q = 0; q < 2 - pass; ++q) {
      if (s[q] > s[q + 1]) {
        std::swap(s[q], s[q + 1]);
        sign = -sign;
      }
    }
  }

  struct Entry {
    int a, b, c;
    double value;
  };
  const double half_root3 = std::sqrt(3.0) / 2.0;
  const Entry table[] = {
      {1, 2, 3, 1.0},  {1, 4, 7, 0.5}, {1, 5, 6, -0.5},        {2, 4, 6, 0.5},
      {2, 5, 7, 0.5},  {3, 4, 5, 0.5}, {3, 6, 7, -0.5},        {4, 5, 8, half_root3},
      {6, 7, 8, half_root3},
  };
  for (const Entry& e : table) {
    if (e.a == s[0] && e.b == s[1] && e.c == s[2]) return sign * e.value;
  }
  return 0.0;
}

RotationMatrix rotation(const EulerAngles& angles) {
  const double ct = std::cos(angles.theta), st = std::sin(angles.theta);
  const double cp = std::cos(angles.phi), sp = std::sin(angles.phi);
  const double cv = std::cos(angles.varphi), sv = std::sin(angles.varphi);
  RotationMatrix r;
  Mat3& m = r.m;
  m(0, 0) = ct * cp;
  m(0, 1) = sp;
  m(0, 2) = cp * st;
  m(1, 0) = -st * sv - ct * cv * sp;
  m(1, 1) = cp * cv;
  m(1, 2) = ct * sv - st * cv * sp;
  m(2, 0) = -st * cv + ct * sp * sv;
  m(2, 1) = -cp * sv;
  m(2, 2) = ct * cv + st * sp * sv;
  return r;
}

namespace {

double max_norm(const CMat3& x) {
  double n = 0.0;
  for (const Complex& z : x.a) n = std::max(n, std::abs(z));
  return n;
}

}  // namespace

CMat3 expm(const CMat3& x) {
  // Halve until the max-entry norm is below 0.5, then square back up.
  int squarings = 0;
  double norm = max_norm(x);
  while (norm >= 0.5) {
    norm *= 0.5;
    ++squarings;
  }
  const CMat3 scaled = std::ldexp(1.0, -squarings) * x;

  CMat3 sum = CMat3::identity();
  CMat3 term = CMat3::identity();
  for (int k = 1; k < 64; ++k) {
    term = (1.0 / k) * (term * scaled);
    sum = sum + term;
    if (max_norm(term) < 1e-16 * max_norm(sum)) break;
  }
  for (int s = 0; s < squarings; ++s) sum = sum * sum;
  return sum;
}

RotationMatrix rotation_via_exponentials(const EulerAngles& angles) {
  const Complex I(0.0, 1.0);
  const CMat3 product = expm(I * angles.varphi * gell_mann(7)) *
                        expm(I * angles.phi * gell_mann(2)) *
                        expm(I * angles.theta * gell_mann(5));
  RotationMatrix r;
  for (std::size_t k = 0; k < 9; ++k) {
    if (std::abs(product.a[k].imag()) > 1e-12) {
      throw NumericError("exponential product is not real", 0);
    }
    r.m.a[k] = product.a[k].real();
  }
  return r;
}

double commutator_residual(int j, int k) {
  const CMat3 lj = gell_mann(j);
  const CMat3 lk = gell_mann(k);
  const CMat3 lhs = lj * lk - lk * lj;
  CMat3 rhs;
  for (int l = 1; l <= 8; ++l) {
    const double f = structure_constant(j, k, l);
    if (f != 0.0) rhs = rhs + Complex(0.0, 2.0 * f) * gell_mann(l);
  }
  return max_abs_diff(lhs, rhs);
}

std::array<IdentityResidual, 12> conjugation_identity_residuals(double a, const Vec3& d) {
  const Complex I(0.0, 1.0);
  const double c = std::cos(a), s = std::sin(a);
  const double c2 = std::cos(2.0 * a), s2 = std::sin(2.0 * a);
  const CMat3 l1 = gell_mann(1), l4 = gell_mann(4), l6 = gell_mann(6);
  const CMat3 dm = CMat3::from_real(Mat3::diag(d));
  auto diag = [](double x, double y, double z) { return CMat3::from_real(Mat3::diag({x, y, z})); };

  auto conj = [&](int g, const CMat3& x) {
    return expm(-I * a * gell_mann(g)) * x * expm(I * a * gell_mann(g));
  };
  const double da = d[0], db = d[1], dc = d[2];

  return {{
      {"l2: l6 -> cos l6 - sin l4", max_abs_diff(conj(2, l6), Complex(c) * l6 - Complex(s) * l4)},
      {"l2: l4 -> cos l4 + sin l6", max_abs_diff(conj(2, l4), Complex(c) * l4 + Complex(s) * l6)},
      {"l2: l1 -> diag(-sin2,sin2,0) + cos2 l1",
       max_abs_diff(conj(2, l1), diag(-s2, s2, 0.0) + Complex(c2) * l1)},
      {"l2: diag(a,b,c)",
       max_abs_diff(conj(2, dm), diag(da * c * c + db * s * s, db * c * c + da * s * s, dc) +
                                     Complex((da - db) / 2.0 * s2) * l1)},
      {"l5: l6 -> cos l6 - sin l1", max_abs_diff(conj(5, l6), Complex(c) * l6 - Complex(s) * l1)},
      {"l5: l1 -> cos l1 + sin l6", max_abs_diff(conj(5, l1), Complex(c) * l1 + Complex(s) * l6)},
      {"l5: l4 -> diag(-sin2,0,sin2) + cos2 l4",
       max_abs_diff(conj(5, l4), diag(-s2, 0.0, s2) + Complex(c2) * l4)},
      {"l5: diag(a,b,c)",
       max_abs_diff(conj(5, dm), diag(da * c * c + dc * s * s, db, dc * c * c + da * s * s) +
                                     Complex((da - dc) / 2.0 * s2) * l4)},
      {"l7: l1 -> cos l1 + sin l4", max_abs_diff(conj(7, l1), Complex(c) * l1 + Complex(s) * l4)},
      {"l7: l4 -> cos l4 - sin l1", max_abs_diff(conj(7, l4), Complex(c) * l4 - Complex(s) * l1)},
      {"l7: l6 -> diag(0,-sin2,sin2) + cos2 l6",
       max_abs_diff(conj(7, l6), diag(0.0, -s2, s2) + Complex(c2) * l6)},
      {"l7: diag(a,b,c)",
       max_abs_diff(conj(7, dm), diag(da, db * c * c + dc * s * s, dc * c * c + db * s * s) +
                                     Complex((db - dc) / 2.0 * s2) * l6)},
  }};
}

}  // namespace trimode
