#include <benchmark/benchmark.h>

#include "magswim/geom.h"
#include "magswim/model.h"
#include "magswim/sim.h"
#include "magswim/stability.h"

namespace {

using namespace magswim;

const ControlSignal kTranslate = make_const_plus_sine(1.0, kTwoPi, 0.0);

void BM_Mobility(benchmark::State& state) {
  const SwimmerParams p;
  Angles theta(0.3, -0.7);
  for (auto _ : state) {
    benchmark::DoNotOptimize(mobility(p, theta));
    theta[0] += 1e-9;
  }
}
BENCHMARK(BM_Mobility);

void BM_Rollout(benchmark::State& state) {
  const SwimmerParams p;
  const int steps_per_unit = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(rollout_final(p, kTranslate, State{}, 1.0, steps_per_unit));
  }
  state.SetItemsProcessed(state.iterations() * steps_per_unit);
}
BENCHMARK(BM_Rollout)->Arg(500)->Arg(2000)->Unit(benchmark::kMicrosecond);

void BM_CurvatureField(benchmark::State& state) {
  const SwimmerParams p;
  const int resolution = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(curvature_field(p, {}, resolution));
  }
}
BENCHMARK(BM_CurvatureField)->Arg(64)->Arg(256)->Unit(benchmark::kMillisecond);

void BM_StrobeMap(benchmark::State& state) {
  const SwimmerParams p;
  for (auto _ : state) {
    benchmark::DoNotOptimize(strobe_map(p, kTranslate, 1.0, Angles(0.4, -0.2)));
  }
}
BENCHMARK(BM_StrobeMap)->Unit(benchmark::kMicrosecond);

void BM_FindLimitCycle(benchmark::State& state) {
  const SwimmerParams p;
  for (auto _ : state) {
    benchmark::DoNotOptimize(find_limit_cycle(p, kTranslate, 1.0, Angles::Zero()));
  }
}
BENCHMARK(BM_FindLimitCycle)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
