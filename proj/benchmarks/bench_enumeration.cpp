#include <benchmark/benchmark.h>

#include "fiedler/enumeration.hpp"

namespace {

void BM_EnumerateFreeTrees(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::uint64_t count = 0;
  for (auto _ : state) {
    fiedler::FreeTreeEnumerator it(n);
    while (it.next()) benchmark::DoNotOptimize(it.level_sequence().data());
    count = *fiedler::known_free_tree_count(n);
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(count));
}
BENCHMARK(BM_EnumerateFreeTrees)->DenseRange(10, 18, 4);

void BM_AnalyseTree(benchmark::State& state) {
  fiedler::FreeTreeEnumerator it(static_cast<int>(state.range(0)));
  it.next();
  const auto levels = it.level_sequence();
  for (auto _ : state) benchmark::DoNotOptimize(fiedler::analyse_tree(levels));
}
BENCHMARK(BM_AnalyseTree)->Arg(11)->Arg(20);

}  // namespace
