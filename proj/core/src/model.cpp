#include "trimode/model.hpp"

#include <cmath>
#include <string>

#include "trimode/errors.hpp"

namespace trimode {

namespace {

void require_positive(double value, const std::string& field) {
  if (!(value > 0.0) || !std::isfinite(value)) {
    throw DomainError(field + " must be strictly positive and finite (got " +
                      std::to_string(value) + ")");
  }
}

void require_finite(double value, const std::string& field) {
  if (!std::isfinite(value)) throw DomainError(field + " must be finite");
}

}  // namespace

void OscillatorSystem::validate() const {
  for (int i = 0; i < 3; ++i) {
    require_positive(mass[i], "mass m" + std::to_string(i + 1));
    require_positive(omega[i], "frequency w" + std::to_string(i + 1));
  }
  require_finite(d12, "coupling d12");
  require_finite(d13, "coupling d13");
  require_finite(d23, "coupling d23");
  require_positive(hbar, "hbar");
}

NormalizedSystem normalize(const OscillatorSystem& sys) {
  sys.validate();
  NormalizedSystem ns;
  ns.m = std::cbrt(sys.mass[0] * sys.mass[1] * sys.mass[2]);
  for (int i = 0; i < 3; ++i) ns.mu[i] = std::sqrt(sys.mass[i] / ns.m);
  ns.omega = sys.omega;
  ns.j12 = sys.d12 / (2.0 * std::sqrt(sys.mass[0] * sys.mass[1]));
  ns.j13 = sys.d13 / (2.0 * std::sqrt(sys.mass[0] * sys.mass[2]));
  ns.j23 = sys.d23 / (2.0 * std::sqrt(sys.mass[1] * sys.mass[2]));
  ns.hbar = sys.hbar;
  return ns;
}

CouplingMatrix::CouplingMatrix(const Mat3& m) {
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = i; j < 3; ++j) r_(i, j) = r_(j, i) = m(i, j);
  }
}

CouplingMatrix coupling_matrix(const NormalizedSystem& ns) {
  Mat3 r;
  for (std::size_t i = 0; i < 3; ++i) r(i, i) = ns.omega[i] * ns.omega[i];
  r(0, 1) = r(1, 0) = ns.j12;
  r(0, 2) = r(2, 0) = ns.j13;
  r(1, 2) = r(2, 1) = ns.j23;
  return CouplingMatrix(r);
}

bool is_stable(const CouplingMatrix& cm) {
  const double floor = 1e-12 * cm.matrix().frobenius_norm();
  const SymmetricEigen eig = jacobi_eigen(cm.matrix());
  for (double v : eig.values) {
    if (!(v > floor)) return false;
  }
  return true;
}

double physical_potential(const OscillatorSystem& sys, const Vec3& x) {
  double v = 0.0;
  for (int i = 0; i < 3; ++i) v += sys.mass[i] * sys.omega[i] * sys.omega[i] * x[i] * x[i];
  v += sys.d12 * x[0] * x[1] + sys.d13 * x[0] * x[2] + sys.d23 * x[1] * x[2];
  return 0.5 * v;
}

}  // namespace trimode
