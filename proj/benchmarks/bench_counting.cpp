#include <benchmark/benchmark.h>

#include <random>

#include "cutcount/counting.hpp"
#include "cutcount/sampling.hpp"
#include "fixtures.hpp"

namespace {

using namespace cutcount;

// Random multigraph on n vertices with m edges, redrawn until 1 <= p <= max_p.
CutInstance sparse_random(std::size_t n, std::size_t m, std::size_t max_p, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  for (;;) {
    MultiGraph g(n);
    for (std::size_t e = 0; e < m; ++e) {
      const auto u = static_cast<Vertex>(rng() % n);
      auto v = static_cast<Vertex>(rng() % (n - 1));
      if (v >= u) ++v;
      g.add_edge(u, v);
    }
    CutInstance inst(std::move(g), {0}, {static_cast<Vertex>(n - 1)});
    const std::size_t p = min_cut_size(inst);
    if (p >= 1 && p <= max_p) return inst;
  }
}

void BM_CountPar(benchmark::State& state) {
  const CutInstance inst = testing::par(static_cast<std::size_t>(state.range(0)), static_cast<std::size_t>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(count_min_cuts(inst));
}
BENCHMARK(BM_CountPar)->Args({2, 8})->Args({3, 4})->Args({3, 8})->Args({4, 3})->Args({5, 2})->Unit(benchmark::kMillisecond);

void BM_CountRandom(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const CutInstance inst = sparse_random(n, 5 * n / 2, 4, 2024);
  for (auto _ : state) benchmark::DoNotOptimize(count_min_cuts(inst));
  state.counters["p"] = static_cast<double>(min_cut_size(inst));
}
BENCHMARK(BM_CountRandom)->Arg(60)->Arg(240)->Arg(1000)->Unit(benchmark::kMillisecond);

void BM_TreeBuild(benchmark::State& state) {
  const CutInstance inst = testing::par(static_cast<std::size_t>(state.range(0)), 3);
  std::size_t nodes = 0;
  for (auto _ : state) {
    CountingTree tree(inst);
    tree.fill_all();
    nodes = tree.size();
  }
  state.counters["nodes"] = static_cast<double>(nodes);
}
BENCHMARK(BM_TreeBuild)->DenseRange(2, 5)->Unit(benchmark::kMillisecond);

void BM_Sample(benchmark::State& state) {
  const CutInstance inst = testing::par(static_cast<std::size_t>(state.range(0)), 4);
  CountingTree tree(inst);
  tree.fill_all();
  SamplerState sampler(tree, 1);
  for (auto _ : state) benchmark::DoNotOptimize(sampler.sample());
}
BENCHMARK(BM_Sample)->DenseRange(2, 4);

}  // namespace

BENCHMARK_MAIN();
