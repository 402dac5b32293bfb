#include <benchmark/benchmark.h>

#include "spdc/spdc.hpp"

namespace {

spdc::MaterialOptics literal_material() {
  spdc::MaterialOptics m;
  m.n_p = m.n_1 = m.n_2 = 1.8;
  m.ng_p = 2.0;
  m.ng_1 = 1.8;
  m.ng_2 = 1.9;
  m.d_eff = 2.4e-12;
  m.Lz = 0.01;
  return m;
}

const spdc::MaterialOptics kMaterial = literal_material();
const spdc::BeamTriple kBeams = spdc::make_beams(kMaterial, 405e-9, 810e-9, 810e-9, 30e-6, 42e-6, 42e-6);

void BM_AxialIntegral(benchmark::State& state) {
  const double phi = static_cast<double>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(spdc::axial_integral(0.5, 0.01, phi, 1e-9));
}
BENCHMARK(BM_AxialIntegral)->Arg(0)->Arg(30)->Arg(300);

void BM_OverlapDirect(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(spdc::overlap_direct(kBeams, kMaterial, 500.0, 1e-9));
}
BENCHMARK(BM_OverlapDirect);

void BM_OverlapDirectPoled(benchmark::State& state) {
  auto m = kMaterial;
  m.poling_period = 1e-4;
  for (auto _ : state) benchmark::DoNotOptimize(spdc::overlap_direct(kBeams, m, 2 * 3.141592653589793 / 1e-4, 1e-9));
}
BENCHMARK(BM_OverlapDirectPoled);

void BM_ClosedForm(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(spdc::pairs_closed_form(kMaterial, kBeams));
}
BENCHMARK(BM_ClosedForm);

void BM_BruteForce(benchmark::State& state) {
  const auto pump = spdc::make_pump_spec(1e-3, 405e-9, 1e9);
  spdc::BruteForceOptions opt;
  opt.phase_span = static_cast<double>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(spdc::pairs_via_bruteforce(kMaterial, kBeams, pump, spdc::kCodata, opt));
}
BENCHMARK(BM_BruteForce)->Arg(50)->Arg(200)->Unit(benchmark::kMillisecond)->Iterations(1);

}  // namespace
BENCHMARK_MAIN();
