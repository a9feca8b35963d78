#include <benchmark/benchmark.h>

#include "fiedler/game.hpp"
#include "fiedler/generators.hpp"
#include "fiedler/hitting.hpp"

namespace {

void BM_HittingRandomTree(benchmark::State& state) {
  const auto t = fiedler::gen_random_tree(static_cast<int>(state.range(0)), 2);
  const std::vector<fiedler::Vertex> target{0};
  for (auto _ : state) benchmark::DoNotOptimize(fiedler::hitting_times(t, target));
}
BENCHMARK(BM_HittingRandomTree)->RangeMultiplier(8)->Range(64, 16384);

void BM_HittingDriftGraph(benchmark::State& state) {
  const auto g = fiedler::gen_drift_graph(4, static_cast<int>(state.range(0)));
  const std::vector<fiedler::Vertex> target{0};
  for (auto _ : state) benchmark::DoNotOptimize(fiedler::hitting_times(g, target));
}
BENCHMARK(BM_HittingDriftGraph)->DenseRange(4, 8, 2);

void BM_SimulatePayoff(benchmark::State& state) {
  const auto g = fiedler::gen_rose_on_path(9, 3, 12);
  const auto pair = fiedler::fiedler_pair(g);
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        fiedler::simulate_payoff({g, pair, 22, 0}, {.samples = state.range(0), .seed = 1}));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_SimulatePayoff)->Arg(10000)->Arg(100000);

}  // namespace
