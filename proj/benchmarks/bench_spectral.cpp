#include <benchmark/benchmark.h>

#include "fiedler/generators.hpp"
#include "fiedler/spectral.hpp"

namespace {

void BM_FiedlerDenseRandomTree(benchmark::State& state) {
  const auto t = fiedler::gen_random_tree(static_cast<int>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(fiedler::fiedler_pair(t, {.path = fiedler::SolverPath::dense}));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_FiedlerDenseRandomTree)->RangeMultiplier(4)->Range(16, 1024)->Complexity();

void BM_FiedlerIterativeRandomTree(benchmark::State& state) {
  const auto t = fiedler::gen_random_tree(static_cast<int>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(fiedler::fiedler_pair(t, {.path = fiedler::SolverPath::iterative}));
}
BENCHMARK(BM_FiedlerIterativeRandomTree)->RangeMultiplier(4)->Range(256, 16384);

void BM_FiedlerPath(benchmark::State& state) {
  const auto p = fiedler::gen_path(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(fiedler::fiedler_pair(p));
}
BENCHMARK(BM_FiedlerPath)->Arg(20)->Arg(512)->Arg(4096);

}  // namespace
