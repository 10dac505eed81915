// Serial reference vs OpenMP kernels. The second argument is the thread count;
// 0 selects the serial entry point.
#include <benchmark/benchmark.h>

#include "kkit/alternation.hpp"
#include "kkit/coloring_search.hpp"
#include "kkit/ramsey.hpp"
#include "kkit/tucker.hpp"

using namespace kkit;

namespace {

Hypergraph cycle_with_chords(int n) {
  std::vector<VertexMask> edges;
  for (int v = 1; v <= n; ++v) edges.push_back(mask_of({v, v % n + 1}));
  for (int v = 1; v + 3 <= n; v += 2) edges.push_back(mask_of({v, v + 3}));
  return Hypergraph(n, edges);
}

void BM_Alternation(benchmark::State& state) {
  const Hypergraph h = cycle_with_chords(static_cast<int>(state.range(0)));
  AlternationOptions opts;
  opts.threads = static_cast<int>(state.range(1));
  for (auto _ : state) {
    const auto res = opts.threads == 0 ? alternation_number_serial(h, 2, opts) : alternation_number(h, 2, opts);
    benchmark::DoNotOptimize(res.value);
  }
}
BENCHMARK(BM_Alternation)->ArgsProduct({{8, 9}, {0, 1, 2, 4}})->Unit(benchmark::kMillisecond);

void BM_CappedColoring(benchmark::State& state) {
  // Refuting a 3-class split of K_7^2 with at most 2 disjoint edges per class.
  const Hypergraph h = complete_uniform(static_cast<int>(state.range(0)), 2);
  const std::vector<int> caps{1, 2, 2};
  const int threads = static_cast<int>(state.range(1));
  for (auto _ : state) {
    const auto res = threads == 0 ? find_capped_coloring_serial(h.edges(), caps)
                                  : find_capped_coloring(h.edges(), caps, {threads, Budget{}});
    benchmark::DoNotOptimize(res.status);
  }
}
BENCHMARK(BM_CappedColoring)->ArgsProduct({{7, 8}, {0, 1, 2, 4}})->Unit(benchmark::kMillisecond);

void BM_Arrows(benchmark::State& state) {
  const RamseyInstance inst(3, {2, 3});
  const int threads = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(arrows(10, inst, {std::max(threads, 1), Budget{}}).verdict);
}
BENCHMARK(BM_Arrows)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_Hunt(benchmark::State& state) {
  const std::vector<int> gamma{1, 1};
  const int threads = static_cast<int>(state.range(0));
  for (auto _ : state) {
    const auto res = threads == 0 ? search_counterexample_serial(3, 2, gamma)
                                  : search_counterexample(3, 2, gamma, {threads, Budget{}});
    benchmark::DoNotOptimize(res.status);
  }
}
BENCHMARK(BM_Hunt)->Arg(0)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
