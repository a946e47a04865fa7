#include "trimode/cli/commands.hpp"

#include <algorithm>
#include <tuple>

#include "trimode/cli/format.hpp"
#include "trimode/decouple.hpp"
#include "trimode/entangle.hpp"
#include "trimode/errors.hpp"
#include "trimode/oracle.hpp"

namespace trimode::cli {

namespace {

NormalModes solve(const OscillatorSystem& sys, NormalizedSystem* ns_out = nullptr) {
  const NormalizedSystem ns = normalize(sys);
  if (ns_out) *ns_out = ns;
  return decouple(coupling_matrix(ns));
}

}  // namespace

std::string decouple_json(const OscillatorSystem& sys) {
  NormalizedSystem ns;
  const NormalModes modes = solve(sys, &ns);
  const LogFrequencyParams lp = log_params(modes);
  JsonWriter j;
  j.begin_object()
      .numbers("sigma", {modes.sigma[0], modes.sigma[1], modes.sigma[2]})
      .begin_object("angles")
      .number("theta", modes.angles.theta)
      .number("phi", modes.angles.phi)
      .number("varphi", modes.angles.varphi)
      .end_object()
      .number("varpi", lp.varpi)
      .numbers("log_diffs", {lp.d1, lp.d2, lp.d3})
      .number("residual", reconstruction_residual(modes, coupling_matrix(ns)))
      .boolean("degenerate", modes.degenerate)
      .end_object();
  return j.str();
}

std::string spectrum_csv(const OscillatorSystem& sys, int n_max) {
  if (n_max < 0 || n_max > kMaxQuantumNumber) {
    throw DomainError("n-max must lie in [0, " + std::to_string(kMaxQuantumNumber) + "]");
  }
  const NormalModes modes = solve(sys);
  struct Row {
    QuantumNumbers n;
    double e;
  };
  std::vector<Row> rows;
  for (int a = 0; a <= n_max; ++a)
    for (int b = 0; a + b <= n_max; ++b)
      for (int c = 0; a + b + c <= n_max; ++c) rows.push_back({{a, b, c}, energy(modes, {a, b, c}, sys.hbar)});
  std::sort(rows.begin(), rows.end(), [](const Row& x, const Row& y) {
    return std::tie(x.e, x.n.n1, x.n.n2, x.n.n3) < std::tie(y.e, y.n.n1, y.n.n2, y.n.n3);
  });
  std::string out = "n1,n2,n3,E\n";
  for (const Row& r : rows) {
    out += std::to_string(r.n.n1) + "," + std::to_string(r.n.n2) + "," + std::to_string(r.n.n3) + "," +
           format_double(r.e) + "\n";
  }
  return out;
}

std::string wavefunction_csv(const OscillatorSystem& sys, const QuantumNumbers& n, int points,
                             double extent) {
  n.validate();
  if (points < 2) throw DomainError("points must be at least 2");
  if (!(extent > 0.0)) throw DomainError("extent must be positive");
  NormalizedSystem ns;
  const NormalModes modes = solve(sys, &ns);
  const Vec3 len = oracle::characteristic_lengths(modes, ns, sys.hbar);
  auto coord = [&](int axis, int i) {
    const double h = extent * len[axis];
    return -h + 2.0 * h * i / (points - 1);
  };
  std::string out = "x1,x2,x3,psi\n";
  for (int i = 0; i < points; ++i)
    for (int j = 0; j < points; ++j)
      for (int k = 0; k < points; ++k) {
        const Vec3 x{coord(0, i), coord(1, j), coord(2, k)};
        out += format_double(x[0]) + "," + format_double(x[1]) + "," + format_double(x[2]) + "," +
               format_double(wavefunction(n, modes, ns, x, sys.hbar)) + "\n";
      }
  return out;
}

std::string purity_json(const OscillatorSystem& sys, int kept, bool with_oracle) {
  if (kept < 1 || kept > 3) throw DomainError("kept must be 1, 2 or 3");
  const EntanglementReport r = analyze(sys, kept);
  JsonWriter j;
  j.begin_object()
      .integer("kept", kept)
      .number("L", r.reduced.L)
      .number("w", r.reduced.w)
      .number("purity", r.result.purity)
      .number("entropy", r.result.linear_entropy);
  if (with_oracle) {
    const double q = oracle::quad_purity(r.ground, kept, oracle::make_grid(r.modes, r.normalized, sys.hbar));
    j.number("oracle_purity", q).number("discrepancy", std::abs(q - r.result.purity));
  }
  j.end_object();
  return j.str();
}

}  // namespace trimode::cli
