#include <benchmark/benchmark.h>

#include "sparsek/constraint.hpp"
#include "sparsek/csp_core.hpp"
#include "sparsek/random_models.hpp"
#include "sparsek/turan_greedy.hpp"

namespace {

using namespace sparsek;
namespace fn = functions;

void BM_SolveNandImpl(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const std::vector<ConstraintFunction> fam{fn::nand(2), fn::impl()};
  Rng rng(11);
  const CspInstance inst = random_csp(n, fam, 2 * n, rng);
  for (auto _ : state) benchmark::DoNotOptimize(solve_csp(inst, 4));
}
BENCHMARK(BM_SolveNandImpl)->RangeMultiplier(2)->Range(16, 128)->Unit(benchmark::kMillisecond);

void BM_SparseCspGreedy(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const std::vector<ConstraintFunction> fam{fn::nand(2), fn::nand(3)};
  Rng rng(12);
  const CspInstance inst = random_csp(n, fam, n, rng);
  for (auto _ : state) benchmark::DoNotOptimize(sparse_csp_solve(inst, 5));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_SparseCspGreedy)->RangeMultiplier(4)->Range(1 << 10, 1 << 16)->Complexity(benchmark::oN);

void BM_TuranGreedy(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  Rng rng(13);
  const Graph g = random_graph_edges(n, n * n / 200, rng);
  for (auto _ : state) benchmark::DoNotOptimize(find_k_is_sparse(g, 5));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_TuranGreedy)->RangeMultiplier(2)->Range(128, 2048);

}  // namespace
