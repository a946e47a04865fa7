#pragma once

#include <functional>
#include <span>
#include <vector>

#include "trimode/decouple.hpp"
#include "trimode/model.hpp"
#include "trimode/spectrum.hpp"

// Brute-force checks of the closed-form results. Nothing in here calls the
// Schur-complement, purity or closed-form eigenvalue code it is meant to check.

namespace trimode::oracle {

enum class Scheme { GaussLegendre, GaussHermite };

/// Tensor-product quadrature over physical coordinates.
///
/// Gauss-Legendre covers [-extent * length_i, extent * length_i] on axis i.
/// Gauss-Hermite uses x = length_i * t with the e^{t^2} weight folded into the
/// weights, so `extent` does not apply.
struct QuadratureGrid {
  int nodes_per_axis = 64;
  double extent = 8.0;
  Scheme scheme = Scheme::GaussLegendre;
  Vec3 length{1.0, 1.0, 1.0};

  /// DomainError unless nodes_per_axis >= 16 and extent >= 5.
  void validate() const;
};

/// Per-axis length l / mu_i with l = sqrt(hbar / (m Sigma_min)), the widest
/// mode in the rescaled frame.
Vec3 characteristic_lengths(const NormalModes& modes, const NormalizedSystem& ns, double hbar);

/// nodes_per_axis is a floor: Gauss-Legendre grids get more nodes when the
/// mode lengths are spread far enough that the narrowest one would be
/// under-resolved.
QuadratureGrid make_grid(const NormalModes& modes, const NormalizedSystem& ns, double hbar,
                         int nodes_per_axis = 64, double extent = 8.0,
                         Scheme scheme = Scheme::GaussLegendre);

struct Rule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// n-point Gauss-Legendre rule on [-1, 1].
Rule gauss_legendre(int n);

/// n-point Gauss-Hermite rule with weights multiplied by e^{t^2}, so that
/// sum w_i f(t_i) approximates the plain integral of f.
Rule gauss_hermite_folded(int n);

/// Physical-coordinate rule for one axis of `grid`.
Rule axis_rule(const QuadratureGrid& grid, int axis);

/// Sum by a fixed binary tree; the result depends only on the input order.
double pairwise_sum(std::span<const double> values);

/// Roots of det(R - lambda I) from the trigonometric solution of the
/// characteristic cubic, sorted descending.
Vec3 eigen3_charpoly(const CouplingMatrix& cm);

/// Integral of psi^2 over R^3.
double quad_normalization(const std::function<double(const Vec3&)>& psi, const QuadratureGrid& grid);

/// tr(rho_red^2) for the retained oscillator, from exp(-Q) sampled in raw
/// coordinates: rho(x, x') by quadrature over the two traced axes,
/// normalized to unit trace, then the double integral of rho(x, x') rho(x', x).
/// Throws AccuracyError when the numerical norm drifts from the closed
/// Gaussian integral by more than 1e-4.
double quad_purity(const GaussianGroundState& g, int kept, const QuadratureGrid& grid);

/// Uniform grid in normal coordinates for the finite-difference check.
struct FdGrid {
  int points = 64;
  double extent = 6.0;     ///< half-width in units of each mode's own length
  int accuracy_order = 8;  ///< 2, 4, 6 or 8
};

/// Applies the decoupled Hamiltonian -hbar^2/(2m) sum d^2/dq_i^2 + (m/2) sum S_i^2 q_i^2
/// by central differences to psi_n sampled on the grid (through the physical
/// coordinates x = mu^-1 M q) and returns ||H psi - E psi|| / ||E psi|| over the
/// interior points. `energy_offset` shifts E, for detector sanity checks.
double fd_hamiltonian_residual(const NormalModes& modes, const NormalizedSystem& ns,
                               const QuantumNumbers& n, const FdGrid& grid, double hbar,
                               double energy_offset = 0.0);

}  // namespace trimode::oracle
