#pragma once

#include "trimode/decouple.hpp"
#include "trimode/model.hpp"
#include "trimode/spectrum.hpp"

namespace trimode {

/// rho_red(x, x') = sqrt((2L - w)/pi) exp(-L (x^2 + x'^2) + w x x') for the
/// retained oscillator `kept` (1, 2 or 3).
struct ReducedDensityParams {
  double L = 0.0;
  double w = 0.0;
  int kept = 1;
};

struct PurityResult {
  double purity = 1.0;
  double linear_entropy = 0.0;
};

/// Traces the two other oscillators out of |psi_000><psi_000|.
///
/// With the kept index k and the traced pair (i, j) taken cyclically,
///   w = mu_k^2 ( G_kj^2 / C_j + (G_ki + G_kj G_ij / C_j)^2 / (B_i - G_ij^2 / C_j) )
///   L = mu_k^2 A_k - w / 2
/// which is the Schur complement of the traced 2x2 block. The often-quoted
/// form of L with "2(B^2 - G23^2/C)" in the last denominator is a misprint:
/// only B (not B^2) is dimensionally consistent and agrees with the
/// marginalization.
///
/// Throws DomainError if the quadratic form is not positive definite.
ReducedDensityParams reduced_density_params(const GaussianGroundState& g, int kept);

/// P = sqrt((2L - w) / (2L + w)), S = 1 - P.
PurityResult purity_from_Lw(const ReducedDensityParams& rd);

/// Product formula in the log-ratios and angles:
///   P = (f1 f2 f3)^(-1/2),  f_i = sum_k M_ik^2 exp(-d_k).
/// When M rotates a single coordinate plane it equals the two-body purity of
/// that pair (for the 2-3 plane this is the purity of oscillator 2, while
/// oscillator 1 stays pure). For general angles it differs from the
/// marginalized purity; see purity_from_Lw for the exact value.
PurityResult purity_closed_form(const LogFrequencyParams& lp, const EulerAngles& angles);

/// Everything computed on the way from a physical system to its purity.
struct EntanglementReport {
  NormalizedSystem normalized;
  NormalModes modes;
  GaussianGroundState ground;
  ReducedDensityParams reduced;
  PurityResult result;
};

/// normalize -> coupling_matrix -> decouple -> ground_gaussian -> (L, w) -> P.
EntanglementReport analyze(const OscillatorSystem& sys, int kept);

PurityResult purity(const OscillatorSystem& sys, int kept);

}  // namespace trimode
