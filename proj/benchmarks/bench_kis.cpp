#include <benchmark/benchmark.h>

#include "sparsek/kis_solver.hpp"
#include "sparsek/random_models.hpp"

namespace {

using namespace sparsek;

Hypergraph random_three(std::size_t n, double gamma, std::uint64_t seed) {
  Rng rng(seed);
  std::array<std::size_t, kMaxArity + 1> per{};
  per[3] = edges_for_density(n, 3, gamma);
  return random_hypergraph(n, per, rng);
}

// Runtime against the density exponent of a 3-uniform instance; the second
// argument is 10 * gamma.
void BM_CountKisByDensity(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const double gamma = static_cast<double>(state.range(1)) / 10.0;
  const Hypergraph h = random_three(n, gamma, 7);
  for (auto _ : state) benchmark::DoNotOptimize(count_k_is_hypergraph(h, 6));
  state.counters["m"] = static_cast<double>(h.num_edges());
}
BENCHMARK(BM_CountKisByDensity)->ArgsProduct({{20, 30}, {15, 18, 21, 24, 27}})->Unit(benchmark::kMillisecond);

void BM_CountKisMixed(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  Rng rng(8);
  std::array<std::size_t, kMaxArity + 1> per{};
  per[2] = n;
  per[3] = 2 * n;
  per[4] = 4 * n;
  const Hypergraph h = random_hypergraph(n, per, rng);
  for (auto _ : state) benchmark::DoNotOptimize(count_k_is_mixed(h, 5));
}
BENCHMARK(BM_CountKisMixed)->Arg(16)->Arg(24)->Arg(32)->Unit(benchmark::kMillisecond);

void BM_DecideWithWitness(benchmark::State& state) {
  const Hypergraph h = random_three(static_cast<std::size_t>(state.range(0)), 2.0, 9);
  for (auto _ : state) benchmark::DoNotOptimize(decide_k_is(h, 4, true));
}
BENCHMARK(BM_DecideWithWitness)->Arg(16)->Arg(24)->Unit(benchmark::kMillisecond);

}  // namespace
