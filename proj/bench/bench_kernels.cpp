// Serial reference vs OpenMP kernels.

#include <benchmark/benchmark.h>

#include "bubbleton/geometry.hpp"
#include "bubbleton/kernels.hpp"

using namespace bubbleton;

namespace {

Execution exec_of(const benchmark::State& state) {
  return state.range(1) == 0 ? Execution::serial : Execution::parallel;
}

void BM_SurfaceMesh(benchmark::State& state) {
  const BubbletonParams p = BubbletonParams::single(2);
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(surface_mesh(p, n, n, {-3.0, 3.0}, exec_of(state)));
  state.SetItemsProcessed(state.iterations() * n * n);
}

void BM_MeanCurvature(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const SurfaceMesh mesh = surface_mesh(BubbletonParams::single(2), n, n, {-0.5, 0.5});
  for (auto _ : state) benchmark::DoNotOptimize(mean_curvature_estimate(mesh, exec_of(state)));
  state.SetItemsProcessed(state.iterations() * n * n);
}

void BM_PlanarCurve(benchmark::State& state) {
  CurveOptions o;
  o.samples = static_cast<int>(state.range(0));
  o.exec = exec_of(state);
  const BubbletonParams p = BubbletonParams::single(5);
  for (auto _ : state) benchmark::DoNotOptimize(extract_planar_curve(p, o));
  state.SetItemsProcessed(state.iterations() * o.samples);
}

}  // namespace

BENCHMARK(BM_SurfaceMesh)->ArgsProduct({{128, 512}, {0, 1}})->ArgNames({"n", "parallel"})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MeanCurvature)->ArgsProduct({{256, 1024}, {0, 1}})->ArgNames({"n", "parallel"})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_PlanarCurve)->ArgsProduct({{2048, 16384}, {0, 1}})->ArgNames({"samples", "parallel"})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
