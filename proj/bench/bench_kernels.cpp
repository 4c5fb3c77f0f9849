// Secular kernels (exact serial reference vs modular OpenMP) and the search
// pipeline at 1 vs N workers.

#include <benchmark/benchmark.h>
#include <omp.h>

#include "qgiso/constructors.hpp"
#include "qgiso/generate.hpp"
#include "qgiso/search.hpp"
#include "qgiso/secular.hpp"

namespace {

qg::MetricGraph bench_graph(int which) {
  switch (which) {
    case 0: return qg::build(qg::parse_family("complete:6"));
    case 1: return qg::build(qg::parse_family("complete:8"));
    default: return qg::build(qg::parse_family("chain-of-loops:1,2,3,2,1"));
  }
}

const char* bench_name(int which) {
  static const char* names[] = {"K6", "K8", "chain-of-loops:1,2,3,2,1"};
  return names[which];
}

void BM_SecularReference(benchmark::State& state) {
  const auto g = bench_graph(static_cast<int>(state.range(0)));
  state.SetLabel(bench_name(static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(qg::secular_polynomial_reference(g));
}

void BM_SecularModular(benchmark::State& state) {
  const auto g = bench_graph(static_cast<int>(state.range(0)));
  omp_set_num_threads(static_cast<int>(state.range(1)));
  state.SetLabel(bench_name(static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(qg::secular_polynomial(g));
}

const std::vector<qg::CorpusEntry>& corpus7() {
  static const auto corpus = [] {
    std::vector<qg::CorpusEntry> c;
    auto g6 = qg::connected_graphs(7);
    for (std::size_t i = 0; i < g6.size(); ++i) c.push_back({"connected7", i + 1, g6[i]});
    return c;
  }();
  return corpus;
}

void BM_Search7(benchmark::State& state) {
  qg::SearchConfig cfg;
  cfg.jobs = static_cast<std::size_t>(state.range(0));
  cfg.prefilter = state.range(1) != 0;
  const auto& corpus = corpus7();
  for (auto _ : state) benchmark::DoNotOptimize(qg::search(corpus, cfg));
}

}  // namespace

BENCHMARK(BM_SecularReference)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SecularModular)->ArgsProduct({{0, 1, 2}, {1, 4}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Search7)->ArgsProduct({{1, 4}, {0, 1}})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
