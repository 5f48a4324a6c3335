// Serial reference loops against their OpenMP counterparts.

#include <benchmark/benchmark.h>

#include "tiltcell/quiver.hpp"
#include "tiltcell/sweeps.hpp"

using namespace tiltcell;

namespace {

Exec exec_of(const benchmark::State& state) {
  return state.range(0) == 0 ? Exec::Serial : Exec::Parallel;
}

void BM_ReciprocitySweep(benchmark::State& state) {
  const Context ctx(5, 2);
  for (auto _ : state) {
    auto report = sweep(SweepCheck::Reciprocity, ctx, -2 * ctx.q(), 2 * ctx.q(), exec_of(state));
    benchmark::DoNotOptimize(report.items.size());
  }
  state.SetLabel(state.range(0) == 0 ? "serial" : "parallel");
}

void BM_BoundsSweep(benchmark::State& state) {
  const Context ctx(7, 3);
  for (auto _ : state) {
    auto report = sweep(SweepCheck::Bounds, ctx, -4 * ctx.q(), 4 * ctx.q(), exec_of(state));
    benchmark::DoNotOptimize(report.items.size());
  }
  state.SetLabel(state.range(0) == 0 ? "serial" : "parallel");
}

void BM_QuotientSpaceP2(benchmark::State& state) {
  const auto pre = build_p2_quiver(5, 2);
  for (auto _ : state) {
    auto space = quotient_space(pre.quiver, pre.relations, pre.max_len, {}, exec_of(state));
    benchmark::DoNotOptimize(space.pairs.size());
  }
  state.SetLabel(state.range(0) == 0 ? "serial" : "parallel");
}

}  // namespace

BENCHMARK(BM_ReciprocitySweep)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_BoundsSweep)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_QuotientSpaceP2)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
