#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "trimode/cli/commands.hpp"
#include "trimode/cli/format.hpp"
#include "trimode/decouple.hpp"
#include "trimode/entangle.hpp"
#include "trimode/limits.hpp"
#include "trimode/oracle.hpp"
#include "trimode/su3.hpp"

namespace trimode::cli {

namespace {

constexpr double kAlgebraTol = 1e-12;
constexpr double kDecoupleTol = 1e-10;
constexpr double kPairTol = 1e-10;
constexpr double kPairSpectrumTol = 1e-12;
constexpr double kOracleTol = 1e-6;
constexpr double kExpectedTol = 1e-9;

VerifyCheck check(std::string name, double threshold, double observed) {
  // A NaN observation must fail, hence the negated comparison.
  const CheckStatus s = observed < threshold ? CheckStatus::pass : CheckStatus::fail;
  return {std::move(name), threshold, observed, s};
}

double max_commutator_residual() {
  double worst = 0.0;
  for (int j = 1; j <= 8; ++j)
    for (int k = 1; k <= 8; ++k) worst = std::max(worst, commutator_residual(j, k));
  return worst;
}

double max_identity_residual() {
  std::mt19937_64 rng(20240601);
  std::uniform_real_distribution<double> angle(-std::numbers::pi, std::numbers::pi);
  std::uniform_real_distribution<double> diag(-2.0, 2.0);
  double worst = 0.0;
  for (int t = 0; t < 100; ++t) {
    const double a = angle(rng);
    const Vec3 d{diag(rng), diag(rng), diag(rng)};
    for (const IdentityResidual& r : conjugation_identity_residuals(a, d)) worst = std::max(worst, r.residual);
  }
  return worst;
}

double charpoly_mismatch(const NormalModes& modes, const CouplingMatrix& cm) {
  Vec3 s2 = modes.sigma_squared();
  std::sort(s2.begin(), s2.end(), std::greater<double>());
  const Vec3 ref = oracle::eigen3_charpoly(cm);
  double worst = 0.0;
  for (int i = 0; i < 3; ++i) worst = std::max(worst, std::abs(s2[i] - ref[i]) / std::abs(ref[0]));
  return worst;
}

/// Single-pair variants of the input: only D_ij survives, at fixed fractions
/// of its stability limit 2 sqrt(m_i m_j) w_i w_j.
std::vector<OscillatorSystem> pair_variants(const OscillatorSystem& sys, Pair pair) {
  const PairIndices ix = indices(pair);
  const double limit = 2.0 * std::sqrt(sys.mass[ix.first] * sys.mass[ix.second]) * sys.omega[ix.first] *
                       sys.omega[ix.second];
  std::vector<OscillatorSystem> out;
  for (double f : {-0.8, -0.3, 0.3, 0.8}) {
    OscillatorSystem s = sys;
    s.d12 = s.d13 = s.d23 = 0.0;
    (pair == Pair::k12 ? s.d12 : pair == Pair::k13 ? s.d13 : s.d23) = f * limit;
    out.push_back(s);
  }
  return out;
}

double relative(double got, double want) { return std::abs(got - want) / std::max(1.0, std::abs(want)); }

}  // namespace

OscillatorSystem default_verify_system() {
  OscillatorSystem s;
  s.mass = {1.0, 2.0, 3.0};
  s.omega = {1.0, 1.5, 2.0};
  s.d12 = 0.4;
  s.d13 = 0.3;
  s.d23 = 0.2;
  return s;
}

bool VerifyReport::passed() const {
  return std::none_of(checks.begin(), checks.end(), [](const VerifyCheck& c) { return c.status == CheckStatus::fail; });
}

std::string VerifyReport::text() const {
  std::string out;
  int pass = 0, fail = 0, skip = 0;
  for (const VerifyCheck& c : checks) {
    const char* tag = c.status == CheckStatus::pass ? "PASS" : c.status == CheckStatus::fail ? "FAIL" : "SKIP";
    (c.status == CheckStatus::pass ? pass : c.status == CheckStatus::fail ? fail : skip)++;
    out += std::string(tag) + " " + c.name;
    if (c.status != CheckStatus::skip) {
      out += " threshold=" + format_double(c.threshold) + " observed=" + format_double(c.observed);
    }
    out += "\n";
  }
  out += "verify: " + std::to_string(pass) + " passed, " + std::to_string(fail) + " failed, " +
         std::to_string(skip) + " skipped\n";
  return out;
}

VerifyReport verify(const SystemInput& input) {
  const OscillatorSystem& sys = input.system;
  VerifyReport rep;
  rep.checks.push_back(check("su3-commutators", kAlgebraTol, max_commutator_residual()));
  rep.checks.push_back(check("su3-conjugation-identities", kAlgebraTol, max_identity_residual()));

  const NormalizedSystem ns = normalize(sys);
  const CouplingMatrix cm = coupling_matrix(ns);
  const NormalModes modes = decouple(cm);
  rep.checks.push_back(check("decoupling-round-trip", kDecoupleTol, reconstruction_residual(modes, cm)));
  rep.checks.push_back(check("charpoly-agreement", kDecoupleTol, charpoly_mismatch(modes, cm)));

  for (Pair p : {Pair::k12, Pair::k13, Pair::k23}) {
    double limit = 0.0, spectrum = 0.0;
    for (const OscillatorSystem& s : pair_variants(sys, p)) {
      limit = std::max(limit, verify_pair_limit(s, p));
      spectrum = std::max(spectrum, verify_pair_spectrum(s, p, 4));
    }
    const std::string tag(to_string(p));
    rep.checks.push_back(check("pair-limit-" + tag, kPairTol, limit));
    rep.checks.push_back(check("pair-spectrum-" + tag, kPairSpectrumTol, spectrum));
  }

  for (int kept = 1; kept <= 3; ++kept) {
    const EntanglementReport r = analyze(sys, kept);
    const double q = oracle::quad_purity(r.ground, kept, oracle::make_grid(r.modes, r.normalized, sys.hbar));
    rep.checks.push_back(
        check("oracle-agreement-kept" + std::to_string(kept), kOracleTol, std::abs(q - r.result.purity)));
  }

  if (input.expected) {
    const ExpectedPurity& e = *input.expected;
    const EntanglementReport r = analyze(sys, e.kept);
    double worst = 0.0;
    if (e.L) worst = std::max(worst, relative(r.reduced.L, *e.L));
    if (e.w) worst = std::max(worst, relative(r.reduced.w, *e.w));
    if (e.purity) worst = std::max(worst, relative(r.result.purity, *e.purity));
    rep.checks.push_back(check("purity-agreement", kExpectedTol, worst));
  } else {
    rep.checks.push_back({"purity-agreement", kExpectedTol, 0.0, CheckStatus::skip});
  }
  return rep;
}

}  // namespace trimode::cli
