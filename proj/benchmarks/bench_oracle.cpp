#include <benchmark/benchmark.h>

#include "trimode/entangle.hpp"
#include "trimode/oracle.hpp"

namespace {

trimode::EntanglementReport coupled_report() {
  trimode::OscillatorSystem s;
  s.mass = {1.3, 0.6, 2.2};
  s.omega = {0.9, 1.6, 1.2};
  s.d12 = 0.5;
  s.d13 = -0.4;
  s.d23 = 0.7;
  return trimode::analyze(s, 1);
}

void BM_QuadPurity(benchmark::State& state) {
  const trimode::EntanglementReport r = coupled_report();
  const trimode::oracle::QuadratureGrid grid =
      trimode::oracle::make_grid(r.modes, r.normalized, 1.0, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(trimode::oracle::quad_purity(r.ground, 1, grid));
}
BENCHMARK(BM_QuadPurity)->Arg(64)->Arg(96)->Unit(benchmark::kMillisecond);

void BM_FdResidual(benchmark::State& state) {
  const trimode::EntanglementReport r = coupled_report();
  trimode::oracle::FdGrid grid;
  grid.points = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(trimode::oracle::fd_hamiltonian_residual(r.modes, r.normalized, {1, 1, 0}, grid, 1.0));
  }
}
BENCHMARK(BM_FdResidual)->Arg(32)->Arg(64)->Unit(benchmark::kMillisecond);

void BM_GaussLegendreRule(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(trimode::oracle::gauss_legendre(static_cast<int>(state.range(0))));
}
BENCHMARK(BM_GaussLegendreRule)->Arg(64)->Arg(128);

}  // namespace
