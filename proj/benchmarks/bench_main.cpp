#include <benchmark/benchmark.h>

#include "antipodal/annuli.hpp"
#include "antipodal/boundary_graph.hpp"
#include "antipodal/generators.hpp"
#include "antipodal/spectral.hpp"

using namespace antipodal;

namespace {

void BM_PairCounts(benchmark::State& state) {
  const auto ps = random_disk_config(static_cast<std::size_t>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(pair_counts(ps, 0.01));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_PairCounts)->RangeMultiplier(2)->Range(500, 4000)->Complexity(benchmark::oNSquared);

const ConvexPolygon& circle_hull() {
  static const ConvexPolygon hull = convex_hull(circle_config(10000));
  return hull;
}

void BM_BuildGraph(benchmark::State& state) {
  const auto boxing = discretize_boundary(circle_hull(), 1.0 / static_cast<double>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(build_graph(boxing));
  state.counters["k"] = static_cast<double>(boxing.k());
}
BENCHMARK(BM_BuildGraph)->RangeMultiplier(2)->Range(64, 1024)->Unit(benchmark::kMillisecond);

void BM_Lambda1(benchmark::State& state) {
  const auto boxing = discretize_boundary(circle_hull(), 1.0 / static_cast<double>(state.range(0)));
  const auto graph = build_graph(boxing);
  for (auto _ : state) benchmark::DoNotOptimize(lambda1(graph));
  state.counters["k"] = static_cast<double>(boxing.k());
}
BENCHMARK(BM_Lambda1)->RangeMultiplier(2)->Range(64, 1024)->Unit(benchmark::kMillisecond);

void BM_CoverCount(benchmark::State& state) {
  const AnnulusPairConfig cfg{0.5, 1.0 / static_cast<double>(state.range(0))};
  for (auto _ : state) benchmark::DoNotOptimize(cover_count(cfg));
}
BENCHMARK(BM_CoverCount)->Arg(100)->Arg(200)->Arg(1000);

void BM_TailStats(benchmark::State& state) {
  const auto boxing = discretize_boundary(circle_hull(), 1.0 / static_cast<double>(state.range(0)));
  const auto graph = build_graph(boxing);
  for (auto _ : state) benchmark::DoNotOptimize(graph_stats(boxing, graph, 10.0));
}
BENCHMARK(BM_TailStats)->Arg(64)->Arg(128)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
