// Serial vs OpenMP timings for the three parallel kernels.
#include <benchmark/benchmark.h>

#include "eqbif/burnside.hpp"
#include "eqbif/verify.hpp"

using namespace eqbif;

namespace {

Exec exec_of(const benchmark::State& s) { return s.range(0) ? Exec::Parallel : Exec::Serial; }

void BM_BurnsideTable(benchmark::State& state) {
  auto L = SubgroupClassLattice::build(std::make_shared<const FiniteGroup>(gamma_prime(static_cast<int>(state.range(1)))));
  for (auto _ : state) {
    BurnsideRing R(L); // fresh cache each iteration
    benchmark::DoNotOptimize(R.product_table(exec_of(state)));
  }
}
BENCHMARK(BM_BurnsideTable)->ArgsProduct({{0, 1}, {4, 6}})->Unit(benchmark::kMillisecond);

void BM_CriticalPoints(benchmark::State& state) {
  auto p = ModelParams::make({1, 1}, 1.0, 2.0, 7, CouplingCurve::sigmoid());
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_critical_points(p, 200, 200, exec_of(state)));
}
BENCHMARK(BM_CriticalPoints)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_SigmaMinScan(benchmark::State& state) {
  auto p = ModelParams::make({1, 1}, 1.0, 2.0, 3, CouplingCurve::sigmoid());
  for (auto _ : state) benchmark::DoNotOptimize(sigma_min_scan(p, {-0.17, 1.1}, 0.1, 8, 64, 32, exec_of(state)));
}
BENCHMARK(BM_SigmaMinScan)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
