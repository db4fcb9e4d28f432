#include <benchmark/benchmark.h>

#include <cmath>

#include "conic/builtins.hpp"
#include "conic/dyadic.hpp"
#include "conic/modegrid.hpp"
#include "conic/norms.hpp"

using namespace conic;

static void BM_Analyze(benchmark::State& state) {
  const ConeParam p(Rational(1));
  const RadialGrid grid = RadialGrid::octaves(-10, 0, static_cast<int>(state.range(0)));
  const ConeFunction f = cone_field("band:0.5:3", p);
  for (auto _ : state) benchmark::DoNotOptimize(analyze(f, p, grid, 16));
  state.SetItemsProcessed(state.iterations() * static_cast<long>(grid.size()));
}
BENCHMARK(BM_Analyze)->Arg(64)->Arg(256)->Unit(benchmark::kMillisecond);

static void BM_Construct(benchmark::State& state) {
  DyadicConfig cfg;
  cfg.params = ConeParam(Rational(1, 2));
  cfg.q = 0.5;
  cfg.levels = static_cast<int>(state.range(0));
  cfg.points_per_octave = 128;
  const ConeFunction f = cone_field("band:0.5:7", cfg.params);
  for (auto _ : state) benchmark::DoNotOptimize(construct(f, cfg));
}
BENCHMARK(BM_Construct)->Arg(8)->Arg(12)->Unit(benchmark::kMillisecond);

static void BM_UqNorm(benchmark::State& state) {
  const ConeParam p(Rational(3, 4));
  const SamplingPlan plan = SamplingPlan::cone_default(p);
  const ConeFunction u = cone_field("family:2:2.4", p);
  for (auto _ : state) benchmark::DoNotOptimize(uq_norm(u, 2.4, p, plan));
}
BENCHMARK(BM_UqNorm)->Unit(benchmark::kMillisecond);
