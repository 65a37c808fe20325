#include <benchmark/benchmark.h>

#include <cmath>
#include <cstdint>

#include "casimir/correction.hpp"
#include "casimir/lifshitz.hpp"
#include "casimir/mirror.hpp"
#include "casimir/oracle.hpp"
#include "casimir/response.hpp"
#include "casimir/spectra.hpp"

namespace {

const double kGoldKp = 9.239978392911157; // L = 200 nm, lambda_p = 136 nm

void BM_ReducedEnergy(benchmark::State& state) {
  const double tol = std::pow(10.0, -double(state.range(0)));
  for (auto _ : state)
    benchmark::DoNotOptimize(casimir::reduced_energy(kGoldKp, tol).e);
}
BENCHMARK(BM_ReducedEnergy)->Arg(6)->Arg(8);

void BM_ReducedEnergyPerfect(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(casimir::reduced_energy_perfect(1e-8).e);
}
BENCHMARK(BM_ReducedEnergyPerfect);

void BM_CurvatureRatio(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(casimir::pfa_curvature_ratio_reduced(kGoldKp, 1e-6));
}
BENCHMARK(BM_CurvatureRatio);

void BM_Alpha(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(casimir::alpha(kGoldKp, 1e-6));
}
BENCHMARK(BM_Alpha);

void BM_GPerfect(benchmark::State& state) {
  const double q = double(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(casimir::g_perfect(q, 1e-6));
}
BENCHMARK(BM_GPerfect)->Arg(1)->Arg(10);

void BM_DeltaStitched(benchmark::State& state) {
  auto gold = casimir::MirrorSpec::plasma(136.0);
  auto spec = casimir::RoughnessSpectrum::gaussian(4.0, 40.0);
  for (auto _ : state)
    benchmark::DoNotOptimize(
        casimir::delta(200.0, gold, spec, casimir::ResponseModel::stitched,
                       1e-6)
            .delta);
}
BENCHMARK(BM_DeltaStitched);

void BM_TrapezoidEnergy(benchmark::State& state) {
  const int n = int(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(casimir::oracle::trapezoid_energy(kGoldKp, n, n, 40.0));
}
BENCHMARK(BM_TrapezoidEnergy)->Arg(256)->Arg(1024);

void BM_SynthesizeSurface(benchmark::State& state) {
  auto spec = casimir::RoughnessSpectrum::gaussian(4.0, 20.0);
  const int n = int(state.range(0));
  std::uint64_t seed = 0;
  for (auto _ : state)
    benchmark::DoNotOptimize(
        casimir::oracle::synthesize_surface(spec, n, 4.0, ++seed).h.size());
}
BENCHMARK(BM_SynthesizeSurface)->Arg(128)->Arg(512);

} // namespace

BENCHMARK_MAIN();
