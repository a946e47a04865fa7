#pragma once

#include <optional>
#include <string>
#include <vector>

#include "trimode/cli/io.hpp"
#include "trimode/model.hpp"
#include "trimode/spectrum.hpp"

namespace trimode::cli {

/// JSON: sigma, angles, varpi, log_diffs, residual, degenerate.
std::string decouple_json(const OscillatorSystem& sys);

/// CSV n1,n2,n3,E for every n1+n2+n3 <= n_max, by energy then by (n1,n2,n3).
std::string spectrum_csv(const OscillatorSystem& sys, int n_max);

/// CSV x1,x2,x3,psi on a points^3 box of half-width extent characteristic lengths.
std::string wavefunction_csv(const OscillatorSystem& sys, const QuantumNumbers& n, int points,
                             double extent);

/// JSON: kept, L, w, purity, entropy and, with the oracle, oracle_purity and discrepancy.
std::string purity_json(const OscillatorSystem& sys, int kept, bool with_oracle);

struct SweepAxis {
  std::string path;  ///< masses.1..3, frequencies.1..3, couplings.d12|d13|d23 or hbar
  double start = 0.0;
  double stop = 0.0;
  int steps = 2;
};

struct SweepSpec {
  SweepAxis first;
  std::optional<SweepAxis> second;
  int kept = 1;

  void validate() const;
};

/// Sets the parameter named by path; throws UsageError for an unknown path.
void set_parameter(OscillatorSystem& sys, const std::string& path, double value);

/// Grid coordinate i of steps evenly spaced values, endpoints exact.
double sweep_value(const SweepAxis& axis, int i);

/// CSV: swept parameters, L, w, purity, entropy; rows are row-major over the
/// grid whatever the thread count. Unstable points carry "unstable".
std::string sweep_csv(const OscillatorSystem& base, const SweepSpec& spec, int threads);

enum class CheckStatus { pass, fail, skip };

struct VerifyCheck {
  std::string name;
  double threshold = 0.0;
  double observed = 0.0;
  CheckStatus status = CheckStatus::skip;
};

struct VerifyReport {
  std::vector<VerifyCheck> checks;

  bool passed() const;
  std::string text() const;
};

/// Fixed system used by verify when no input is given.
OscillatorSystem default_verify_system();

VerifyReport verify(const SystemInput& input);

}  // namespace trimode::cli
