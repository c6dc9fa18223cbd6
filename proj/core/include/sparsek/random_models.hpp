#pragma once

#include <array>
#include <cstddef>
#include <span>

#include "sparsek/csp.hpp"
#include "sparsek/hypergraph.hpp"
#include "sparsek/random.hpp"
#include "sparsek/reductions.hpp"

namespace sparsek {

// ceil(n^gamma), capped at the number of arity-sized subsets.
std::size_t edges_for_density(std::size_t n, int arity, double gamma);

// per_arity[r] distinct uniformly random edges of arity r, arities ascending.
Hypergraph random_hypergraph(std::size_t n, const std::array<std::size_t, kMaxArity + 1>& per_arity, Rng& rng);

// G(n, p).
Graph random_graph(std::size_t n, double p, Rng& rng);
// m distinct uniformly random edges.
Graph random_graph_edges(std::size_t n, std::size_t m, Rng& rng);

// m constraints, each a uniformly chosen family member on distinct random
// variables. Repeated tuples are allowed.
CspInstance random_csp(std::size_t n, std::span<const ConstraintFunction> family, std::size_t m, Rng& rng);

// Parts of the given sizes; every r-set with vertices in r distinct parts is
// an edge with probability p.
PartiteHypergraph random_partite(std::span<const std::size_t> part_sizes, int r, double p, Rng& rng);

}  // namespace sparsek
