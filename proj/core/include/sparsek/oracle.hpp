#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "sparsek/common.hpp"
#include "sparsek/csp.hpp"
#include "sparsek/hypergraph.hpp"

// Exhaustive reference implementations. Nothing here calls into the solvers.
namespace sparsek::oracle {

inline constexpr std::uint64_t kDefaultCap = 20'000'000;

Count brute_count_k_is(const Hypergraph& h, int k, std::uint64_t cap = kDefaultCap);
std::optional<std::vector<Vertex>> brute_find_k_is(const Hypergraph& h, int k, std::uint64_t cap = kDefaultCap);

// k-sets independent in the arity-2 part of h that contain an edge of arity >= 3.
Count brute_count_invalid(const Hypergraph& h, int k, std::uint64_t cap = kDefaultCap);

// k-sets X independent in the arity-2 part, containing every edge of `matching`,
// such that no edge e' of arity >= 3 lying inside X meets an edge e of the
// matching with index(e') < index(e).
Count brute_restricted_term(const Hypergraph& h, std::span<const std::size_t> matching, int k,
                            std::uint64_t cap = kDefaultCap);

Count brute_count_k_cliques(const Graph& g, int k, std::uint64_t cap = kDefaultCap);
Count brute_count_k_is(const Graph& g, int k, std::uint64_t cap = kDefaultCap);

// Lexicographically first weight-k satisfying assignment (as its true variables).
std::optional<std::vector<Var>> brute_solve_csp(const CspInstance& inst, int k, std::uint64_t cap = kDefaultCap);
std::vector<std::vector<Var>> brute_all_solutions(const CspInstance& inst, int k, std::uint64_t cap = kDefaultCap);

// Whether some choice of one vertex per part is independent in h.
bool brute_has_colorful_is(const Hypergraph& h, std::span<const std::vector<Vertex>> parts,
                           std::uint64_t cap = kDefaultCap);

}  // namespace sparsek::oracle
