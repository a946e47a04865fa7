#include <algorithm>
#include <atomic>
#include <exception>
#include <thread>

#include "trimode/cli/commands.hpp"
#include "trimode/cli/format.hpp"
#include "trimode/entangle.hpp"
#include "trimode/errors.hpp"

namespace trimode::cli {

namespace {

constexpr int kMaxSteps = 100000;

void validate_axis(const SweepAxis& a) {
  OscillatorSystem probe;
  set_parameter(probe, a.path, 1.0);
  if (a.steps < 2 || a.steps > kMaxSteps) throw UsageError("sweep steps must lie in [2, 100000]");
  if (!(a.start <= a.stop)) throw UsageError("sweep start must not exceed stop for " + a.path);
}

}  // namespace

void set_parameter(OscillatorSystem& sys, const std::string& path, double value) {
  auto index = [&](const std::string& prefix) -> int {
    if (path.size() == prefix.size() + 1 && path.compare(0, prefix.size(), prefix) == 0) {
      const char c = path.back();
      if (c >= '1' && c <= '3') return c - '1';
    }
    return -1;
  };
  if (int i = index("masses."); i >= 0) sys.mass[i] = value;
  else if (int k = index("frequencies."); k >= 0) sys.omega[k] = value;
  else if (path == "couplings.d12") sys.d12 = value;
  else if (path == "couplings.d13") sys.d13 = value;
  else if (path == "couplings.d23") sys.d23 = value;
  else if (path == "hbar") sys.hbar = value;
  else throw UsageError("unknown sweep parameter \"" + path + "\"");
}

double sweep_value(const SweepAxis& axis, int i) {
  if (i == axis.steps - 1) return axis.stop;
  return axis.start + (axis.stop - axis.start) * i / (axis.steps - 1);
}

void SweepSpec::validate() const {
  validate_axis(first);
  if (second) {
    validate_axis(*second);
    if (second->path == first.path) throw UsageError("the two sweep parameters must differ");
    if (static_cast<long long>(first.steps) * second->steps > kMaxSteps) {
      throw UsageError("sweep grid exceeds 100000 points");
    }
  }
  if (kept < 1 || kept > 3) throw UsageError("kept must be 1, 2 or 3");
}

std::string sweep_csv(const OscillatorSystem& base, const SweepSpec& spec, int threads) {
  spec.validate();
  const int n1 = spec.first.steps;
  const int n2 = spec.second ? spec.second->steps : 1;
  const std::size_t total = static_cast<std::size_t>(n1) * n2;

  std::vector<std::string> rows(total);
  std::vector<std::exception_ptr> errors(total);

  auto work = [&](std::size_t idx) {
    const int i = static_cast<int>(idx / n2);
    const int j = static_cast<int>(idx % n2);
    OscillatorSystem sys = base;
    std::string row = format_double(sweep_value(spec.first, i));
    set_parameter(sys, spec.first.path, sweep_value(spec.first, i));
    if (spec.second) {
      row += "," + format_double(sweep_value(*spec.second, j));
      set_parameter(sys, spec.second->path, sweep_value(*spec.second, j));
    }
    try {
      const EntanglementReport r = analyze(sys, spec.kept);
      row += "," + format_double(r.reduced.L) + "," + format_double(r.reduced.w) + "," +
             format_double(r.result.purity) + "," + format_double(r.result.linear_entropy);
    } catch (const InstabilityError&) {
      row += ",unstable,unstable,unstable,unstable";
    }
    rows[idx] = std::move(row);
  };

  if (threads <= 0) threads = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  threads = static_cast<int>(std::min<std::size_t>(threads, total));
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t idx; (idx = next.fetch_add(1)) < total;) {
      try {
        work(idx);
      } catch (...) {
        errors[idx] = std::current_exception();
      }
    }
  };
  {
    std::vector<std::jthread> pool;
    for (int t = 1; t < threads; ++t) pool.emplace_back(worker);
    worker();
  }
  // The first failing point in grid order decides, so the error is thread-count independent.
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);

  std::string out = spec.first.path;
  if (spec.second) out += "," + spec.second->path;
  out += ",L,w,purity,entropy\n";
  for (const std::string& r : rows) out += r + "\n";
  return out;
}

}  // namespace trimode::cli
