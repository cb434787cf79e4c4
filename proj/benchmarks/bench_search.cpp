// Microbenchmarks for the hot paths: pruned self-map enumeration, freezing
// verification, and all-pairs shortest-path table construction.

#include <benchmark/benchmark.h>

#include "digitop/enumerate.hpp"
#include "digitop/freezing.hpp"
#include "digitop/metric.hpp"

using namespace digitop;

namespace {

ImagePtr grid(std::int64_t mx, std::int64_t my, int u) {
  return share(rectangle({mx, my}, Adjacency::cu(u)));
}

ImagePtr interval(std::int64_t m) { return share(rectangle({m}, Adjacency::cu(1))); }

void BM_enumerate_continuous_interval(benchmark::State& state) {
  ImagePtr X = interval(state.range(0));
  EnumerationConstraints c;
  c.require_continuous = true;
  c.node_budget = 1'000'000'000;
  for (auto _ : state) {
    const EnumerationResult r = enumerate_maps(X, c);
    benchmark::DoNotOptimize(r.count);
  }
}
BENCHMARK(BM_enumerate_continuous_interval)->Arg(2)->Arg(4)->Arg(6);

void BM_enumerate_continuous_grid(benchmark::State& state) {
  ImagePtr X = grid(state.range(0), state.range(0), 1);
  EnumerationConstraints c;
  c.require_continuous = true;
  c.node_budget = 1'000'000'000;
  for (auto _ : state) {
    const EnumerationResult r = enumerate_maps(X, c);
    benchmark::DoNotOptimize(r.count);
  }
}
BENCHMARK(BM_enumerate_continuous_grid)->Arg(1)->Arg(2);

void BM_freezing_boundary_minimal(benchmark::State& state) {
  ImagePtr X = grid(state.range(0), state.range(0), 2);
  const std::vector<Point> bd = boundary(*X);
  for (auto _ : state) {
    const MinimalityReport r = is_minimal_freezing_set(X, bd, 100'000'000);
    benchmark::DoNotOptimize(r.verdict);
  }
}
BENCHMARK(BM_freezing_boundary_minimal)->Arg(2)->Arg(3);

void BM_shortest_path_table(benchmark::State& state) {
  ImagePtr X = grid(state.range(0), state.range(0), 1);
  for (auto _ : state) {
    const Metric d = Metric::shortest_path(X);
    benchmark::DoNotOptimize(d.path_length(0, static_cast<int>(X->size()) - 1));
  }
}
BENCHMARK(BM_shortest_path_table)->Arg(4)->Arg(8);

}  // namespace

int main(int argc, char** argv) {
  benchmark::Initialize(&argc, argv);
  if (benchmark::ReportUnrecognizedArguments(argc, argv)) return 1;
  benchmark::RunSpecifiedBenchmarks();
  return 0;
}
