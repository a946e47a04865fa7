#include <benchmark/benchmark.h>

#include "trimode/decouple.hpp"
#include "trimode/entangle.hpp"
#include "trimode/spectrum.hpp"
#include "trimode/su3.hpp"

namespace {

trimode::OscillatorSystem coupled() {
  trimode::OscillatorSystem s;
  s.mass = {1.0, 2.0, 3.0};
  s.omega = {1.0, 1.5, 2.0};
  s.d12 = 0.4;
  s.d13 = 0.3;
  s.d23 = 0.2;
  return s;
}

void BM_JacobiEigen(benchmark::State& state) {
  const trimode::CouplingMatrix cm = trimode::coupling_matrix(trimode::normalize(coupled()));
  for (auto _ : state) benchmark::DoNotOptimize(trimode::jacobi_eigen(cm.matrix()));
}
BENCHMARK(BM_JacobiEigen);

void BM_Decouple(benchmark::State& state) {
  const trimode::CouplingMatrix cm = trimode::coupling_matrix(trimode::normalize(coupled()));
  for (auto _ : state) benchmark::DoNotOptimize(trimode::decouple(cm));
}
BENCHMARK(BM_Decouple);

void BM_Purity(benchmark::State& state) {
  const trimode::OscillatorSystem s = coupled();
  for (auto _ : state) benchmark::DoNotOptimize(trimode::purity(s, 1));
}
BENCHMARK(BM_Purity);

void BM_Wavefunction(benchmark::State& state) {
  const trimode::OscillatorSystem s = coupled();
  const trimode::NormalizedSystem ns = trimode::normalize(s);
  const trimode::NormalModes modes = trimode::decouple(trimode::coupling_matrix(ns));
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(trimode::wavefunction({n, n, n}, modes, ns, {0.3, -0.2, 0.1}, 1.0));
  }
}
BENCHMARK(BM_Wavefunction)->Arg(0)->Arg(4)->Arg(30);

void BM_RotationViaExponentials(benchmark::State& state) {
  const trimode::EulerAngles a{0.3, -0.7, 1.1};
  for (auto _ : state) benchmark::DoNotOptimize(trimode::rotation_via_exponentials(a));
}
BENCHMARK(BM_RotationViaExponentials);

}  // namespace
BENCHMARK_MAIN();
