#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <span>

#include "sparsek/bitset.hpp"
#include "sparsek/common.hpp"
#include "sparsek/hypergraph.hpp"

namespace sparsek {

struct CliqueOptions {
  // Upper bound on the number of part-nodes (cliques of size about k/3)
  // materialized per part; exceeding it raises ResourceLimit.
  std::size_t node_cap = 40000;
};

// Number of triples (a, b, c) with AB[a][b], BC[b][c] and AC[a][c] all set.
Count count_triangles_tripartite(const BitMatrix& ab, const BitMatrix& bc, const BitMatrix& ac);
// Such a triple with the smallest a, then the smallest c, then the smallest b.
std::optional<std::array<std::size_t, 3>> find_triangle_tripartite(const BitMatrix& ab,
                                                                   const BitMatrix& bc,
                                                                   const BitMatrix& ac);

Count count_k_cliques(const Graph& g, int k, const CliqueOptions& options = {});
Count count_k_is(const Graph& g, int k, const CliqueOptions& options = {});
// Independent k-sets of g that contain w.
Count count_k_is_containing(const Graph& g, int k, std::span<const Vertex> w,
                            const CliqueOptions& options = {});

// Cliques of `adjacency` (symmetric, irreflexive rows) of size k.
Count count_cliques_in_rows(std::span<const Bitset> adjacency, int k, const CliqueOptions& options = {});

}  // namespace sparsek
