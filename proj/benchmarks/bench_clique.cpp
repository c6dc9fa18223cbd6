#include <benchmark/benchmark.h>

#include "sparsek/clique_engine.hpp"
#include "sparsek/random_models.hpp"

namespace {

using namespace sparsek;

void BM_CountCliques(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const int k = static_cast<int>(state.range(1));
  Rng rng(42);
  const Graph g = random_graph(n, 0.5, rng);
  for (auto _ : state) benchmark::DoNotOptimize(count_k_cliques(g, k));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_CountCliques)->ArgsProduct({{24, 48, 96}, {3, 4, 5, 6}})->Unit(benchmark::kMillisecond);

void BM_CountIndependentSetsSparse(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  Rng rng(43);
  const Graph g = random_graph_edges(n, 4 * n, rng);
  for (auto _ : state) benchmark::DoNotOptimize(count_k_is(g, 3));
}
BENCHMARK(BM_CountIndependentSetsSparse)->RangeMultiplier(2)->Range(32, 256)->Unit(benchmark::kMillisecond);

void BM_TriangleCount(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  Rng rng(44);
  auto fill = [&] {
    BitMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (rng.bernoulli(0.3)) m.set(i, j);
      }
    }
    return m;
  };
  const BitMatrix ab = fill(), bc = fill(), ac = fill();
  for (auto _ : state) benchmark::DoNotOptimize(count_triangles_tripartite(ab, bc, ac));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_TriangleCount)->RangeMultiplier(2)->Range(64, 1024)->Complexity();

}  // namespace
