#include "trimode/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <string>

#include "trimode/errors.hpp"

namespace trimode::oracle {

void QuadratureGrid::validate() const {
  if (nodes_per_axis < 16) throw DomainError("quadrature needs at least 16 nodes per axis");
  if (extent < 5.0) throw DomainError("quadrature extent must be at least 5 lengths");
}

Vec3 characteristic_lengths(const NormalModes& modes, const NormalizedSystem& ns, double hbar) {
  const double sigma_min = std::min({modes.sigma[0], modes.sigma[1], modes.sigma[2]});
  const double l = std::sqrt(hbar / (ns.m * sigma_min));
  return {l / ns.mu[0], l / ns.mu[1], l / ns.mu[2]};
}

QuadratureGrid make_grid(const NormalModes& modes, const NormalizedSystem& ns, double hbar,
                         int nodes_per_axis, double extent, Scheme scheme) {
  QuadratureGrid g;
  g.nodes_per_axis = nodes_per_axis;
  if (scheme == Scheme::GaussLegendre) {
    // Keep about five nodes per narrowest-mode length across the box.
    const double s_min = std::min({modes.sigma[0], modes.sigma[1], modes.sigma[2]});
    const double s_max = std::max({modes.sigma[0], modes.sigma[1], modes.sigma[2]});
    const int needed = static_cast<int>(std::ceil(5.0 * extent * std::sqrt(s_max / s_min)));
    g.nodes_per_axis = std::max(nodes_per_axis, needed + needed % 2);
  }
  g.extent = extent;
  g.scheme = scheme;
  g.length = characteristic_lengths(modes, ns, hbar);
  g.validate();
  return g;
}

Rule gauss_legendre(int n) {
  Rule r;
  r.nodes.resize(n);
  r.weights.resize(n);
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    // Recompute the derivative at the converged root.
    double p0 = 1.0, p1 = x;
    for (int k = 2; k <= n; ++k) {
      const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
      p0 = p1;
      p1 = p2;
    }
    dp = n * (x * p1 - p0) / (x * x - 1.0);
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    r.nodes[i] = -x;
    r.nodes[n - 1 - i] = x;
    r.weights[i] = r.weights[n - 1 - i] = w;
  }
  return r;
}

namespace {

// Orthonormal Hermite functions h_{n}(t) and h_{n-1}(t).
std::pair<double, double> hermite_functions(int n, double t) {
  double prev = 0.0;
  double cur = std::pow(std::numbers::pi, -0.25) * std::exp(-0.5 * t * t);
  for (int k = 0; k < n; ++k) {
    const double next = std::sqrt(2.0 / (k + 1.0)) * t * cur - std::sqrt(k / (k + 1.0)) * prev;
    prev = cur;
    cur = next;
  }
  return {cur, prev};
}

}  // namespace

Rule gauss_hermite_folded(int n) {
  Rule r;
  r.nodes.resize(n);
  r.weights.resize(n);
  const int half = (n + 1) / 2;
  double t = 0.0;
  for (int i = 0; i < half; ++i) {
    // Initial guesses for the largest roots first.
    if (i == 0) {
      t = std::sqrt(2.0 * n + 1.0) - 1.85575 * std::pow(2.0 * n + 1.0, -1.0 / 6.0);
    } else if (i == 1) {
      t -= 1.14 * std::pow(static_cast<double>(n), 0.426) / t;
    } else if (i == 2) {
      t = 1.86 * t - 0.86 * r.nodes[n - 1];
    } else if (i == 3) {
      t = 1.91 * t - 0.91 * r.nodes[n - 2];
    } else {
      t = 2.0 * t - r.nodes[n - 1 - (i - 2)];
    }
    for (int it = 0; it < 200; ++it) {
      const auto [h, hm1] = hermite_functions(n, t);
      const double dh = std::sqrt(2.0 * n) * hm1 - t * h;
      const double dt = h / dh;
      t -= dt;
      if (std::abs(dt) < 1e-15 * std::max(1.0, std::abs(t))) break;
    }
    const auto [h, hm1] = hermite_functions(n, t);
    (void)h;
    // Plain weight is e^{-t^2} / (n h_{n-1}(t)^2); h_{n-1} already carries e^{-t^2/2}.
    const double folded = 1.0 / (n * hm1 * hm1);
    r.nodes[n - 1 - i] = t;
    r.nodes[i] = -t;
    r.weights[i] = r.weights[n - 1 - i] = folded;
  }
  return r;
}

Rule axis_rule(const QuadratureGrid& grid, int axis) {
  const double length = grid.length[axis];
  Rule r;
  double scale;
  if (grid.scheme == Scheme::GaussLegendre) {
    r = gauss_legendre(grid.nodes_per_axis);
    scale = grid.extent * length;
  } else {
    r = gauss_hermite_folded(grid.nodes_per_axis);
    scale = length;
  }
  for (std::size_t i = 0; i < r.nodes.size(); ++i) {
    r.nodes[i] *= scale;
    r.weights[i] *= scale;
  }
  return r;
}

double pairwise_sum(std::span<const double> values) {
  if (values.size() <= 8) {
    double s = 0.0;
    for (double v : values) s += v;
    return s;
  }
  const std::size_t mid = values.size() / 2;
  return pairwise_sum(values.first(mid)) + pairwise_sum(values.subspan(mid));
}

Vec3 eigen3_charpoly(const CouplingMatrix& cm) {
  const Mat3& a = cm.matrix();
  const double p1 = a(0, 1) * a(0, 1) + a(0, 2) * a(0, 2) + a(1, 2) * a(1, 2);
  Vec3 ev;
  if (p1 == 0.0) {
    ev = {a(0, 0), a(1, 1), a(2, 2)};
  } else {
    const double q = (a(0, 0) + a(1, 1) + a(2, 2)) / 3.0;
    const double p2 = (a(0, 0) - q) * (a(0, 0) - q) + (a(1, 1) - q) * (a(1, 1) - q) +
                      (a(2, 2) - q) * (a(2, 2) - q) + 2.0 * p1;
    const double p = std::sqrt(p2 / 6.0);
    const Mat3 b = (1.0 / p) * (a - q * Mat3::identity());
    const double r = std::clamp(b.determinant() / 2.0, -1.0, 1.0);
    const double angle = std::acos(r) / 3.0;
    const double e1 = q + 2.0 * p * std::cos(angle);
    const double e3 = q + 2.0 * p * std::cos(angle + 2.0 * std::numbers::pi / 3.0);
    ev = {e1, 3.0 * q - e1 - e3, e3};
  }
  std::sort(ev.begin(), ev.end(), std::greater<double>());
  return ev;
}

double quad_normalization(const std::function<double(const Vec3&)>& psi, const QuadratureGrid& grid) {
  grid.validate();
  const Rule r0 = axis_rule(grid, 0), r1 = axis_rule(grid, 1), r2 = axis_rule(grid, 2);
  const std::size_t n = r0.nodes.size();
  std::vector<double> terms;
  terms.reserve(n * n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        const double v = psi({r0.nodes[i], r1.nodes[j], r2.nodes[k]});
        terms.push_back(r0.weights[i] * r1.weights[j] * r2.weights[k] * v * v);
      }
  return pairwise_sum(terms);
}

double quad_purity(const GaussianGroundState& g, int kept, const QuadratureGrid& grid) {
  if (kept < 1 || kept > 3) throw DomainError("kept index must be 1, 2 or 3");
  grid.validate();
  const int k = kept - 1;
  const int i = (k + 1) % 3;
  const int j = (k + 2) % 3;
  const Rule rk = axis_rule(grid, k), ri = axis_rule(grid, i), rj = axis_rule(grid, j);
  const std::size_t n = rk.nodes.size();

  // psi(a, y) for kept node a and traced pair y = (b, c), unnormalized.
  std::vector<double> psi(n * n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c) {
        Vec3 x{};
        x[k] = rk.nodes[a];
        x[i] = ri.nodes[b];
        x[j] = rj.nodes[c];
        psi[(a * n + b) * n + c] = std::exp(-g.quadratic_form(x));
      }

  std::vector<double> wy(n * n);
  for (std::size_t b = 0; b < n; ++b)
    for (std::size_t c = 0; c < n; ++c) wy[b * n + c] = ri.weights[b] * rj.weights[c];

  std::vector<double> rho(n * n);
  std::vector<double> terms(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t a2 = a; a2 < n; ++a2) {
      const double* pa = &psi[a * n * n];
      const double* pb = &psi[a2 * n * n];
      for (std::size_t y = 0; y < n * n; ++y) terms[y] = wy[y] * pa[y] * pb[y];
      rho[a * n + a2] = rho[a2 * n + a] = pairwise_sum(terms);
    }
  }

  std::vector<double> diag(n);
  for (std::size_t a = 0; a < n; ++a) diag[a] = rk.weights[a] * rho[a * n + a];
  const double trace = pairwise_sum(diag);

  const double closed = 1.0 / (g.normalization() * g.normalization());
  const double drift = std::abs(trace / closed - 1.0);
  if (drift > 1e-4) {
    std::ostringstream msg;
    msg << "quadrature grid too coarse: normalization drift " << drift;
    throw AccuracyError(msg.str(), drift);
  }

  std::vector<double> sq(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      const double r = rho[a * n + b];
      sq[a * n + b] = rk.weights[a] * rk.weights[b] * r * r;
    }
  return pairwise_sum(sq) / (trace * trace);
}

namespace {

std::vector<double> second_derivative_stencil(int order) {
  switch (order) {
    case 2: return {1.0, -2.0, 1.0};
    case 4: return {-1.0 / 12, 4.0 / 3, -5.0 / 2, 4.0 / 3, -1.0 / 12};
    case 6: return {1.0 / 90, -3.0 / 20, 3.0 / 2, -49.0 / 18, 3.0 / 2, -3.0 / 20, 1.0 / 90};
    case 8:
      return {-1.0 / 560, 8.0 / 315, -1.0 / 5, 8.0 / 5, -205.0 / 72,
              8.0 / 5,    -1.0 / 5,   8.0 / 315, -1.0 / 560};
    default: throw DomainError("finite-difference accuracy order must be 2, 4, 6 or 8");
  }
}

}  // namespace

double fd_hamiltonian_residual(const NormalModes& modes, const NormalizedSystem& ns,
                               const QuantumNumbers& n, const FdGrid& grid, double hbar,
                               double energy_offset) {
  n.validate();
  const std::vector<double> stencil = second_derivative_stencil(grid.accuracy_order);
  const int half = static_cast<int>(stencil.size()) / 2;
  const int np = grid.points;
  if (np < 2 * half + 3) throw DomainError("finite-difference grid has too few points");

  Vec3 step{};
  std::array<std::vector<double>, 3> q;
  for (int d = 0; d < 3; ++d) {
    const double len = std::sqrt(hbar / (ns.m * modes.sigma[d]));
    const double lo = -grid.extent * len;
    step[d] = 2.0 * grid.extent * len / (np - 1);
    q[d].resize(np);
    for (int s = 0; s < np; ++s) q[d][s] = lo + s * step[d];
  }

  const Mat3 m = rotation(modes.angles).m;
  auto at = [np](int a, int b, int c) { return (static_cast<std::size_t>(a) * np + b) * np + c; };
  std::vector<double> psi(static_cast<std::size_t>(np) * np * np);
  for (int a = 0; a < np; ++a)
    for (int b = 0; b < np; ++b)
      for (int c = 0; c < np; ++c) {
        const Vec3 big_x = m * Vec3{q[0][a], q[1][b], q[2][c]};
        const Vec3 x{big_x[0] / ns.mu[0], big_x[1] / ns.mu[1], big_x[2] / ns.mu[2]};
        psi[at(a, b, c)] = wavefunction(n, modes, ns, x, hbar);
      }

  const double e = energy(modes, n, hbar) + energy_offset;
  const double kinetic = -hbar * hbar / (2.0 * ns.m);
  std::vector<double> res_sq;
  std::vector<double> ref_sq;
  for (int a = half; a < np - half; ++a)
    for (int b = half; b < np - half; ++b)
      for (int c = half; c < np - half; ++c) {
        double lap = 0.0;
        for (int s = -half; s <= half; ++s) {
          const double w = stencil[s + half];
          lap += w * psi[at(a + s, b, c)] / (step[0] * step[0]);
          lap += w * psi[at(a, b + s, c)] / (step[1] * step[1]);
          lap += w * psi[at(a, b, c + s)] / (step[2] * step[2]);
        }
        const double p = psi[at(a, b, c)];
        double pot = 0.0;
        const double qq[3] = {q[0][a], q[1][b], q[2][c]};
        for (int d = 0; d < 3; ++d) pot += modes.sigma[d] * modes.sigma[d] * qq[d] * qq[d];
        pot *= 0.5 * ns.m;
        const double h_psi = kinetic * lap + pot * p;
        res_sq.push_back((h_psi - e * p) * (h_psi - e * p));
        ref_sq.push_back(e * p * e * p);
      }
  return std::sqrt(pairwise_sum(res_sq) / pairwise_sum(ref_sq));
}

}  // namespace trimode::oracle
