#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "sparsek/csp.hpp"
#include "sparsek/hypergraph.hpp"

namespace sparsek {

struct GreedyRound {
  std::size_t vertices = 0;
  std::size_t edges = 0;
};

// n >= 4k^2 and m <= n^2 / (2k^2): the greedy below cannot fail.
bool turan_premise(std::size_t n, std::size_t m, int k);

// Repeatedly takes a minimum-degree vertex (smallest id on ties) and deletes
// its closed neighbourhood. O(k(n + m)). The sizes of the remaining graph
// before each round are appended to `trace` when given.
std::optional<std::vector<Vertex>> find_k_is_sparse(const Graph& g, int k,
                                                    std::vector<GreedyRound>* trace = nullptr);

// m_f * 2k|F| <= n^{u_min(f)} for every function f in use.
bool sparse_csp_premise(const CspInstance& inst, int k);

// Weight-k assignment for an instance whose functions are all 0-valid, found
// by k rounds of "set a low-degree variable true and specialize". Returns
// nullopt when the premise fails or no suitable variable exists.
// Throws InvalidArgument if some function is not 0-valid.
std::optional<std::vector<Var>> sparse_csp_solve(const CspInstance& inst, int k);

}  // namespace sparsek
