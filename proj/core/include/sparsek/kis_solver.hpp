#pragma once

#include <array>
#include <optional>
#include <span>
#include <vector>

#include "sparsek/clique_engine.hpp"
#include "sparsek/common.hpp"
#include "sparsek/hypergraph.hpp"

namespace sparsek {

struct KisOptions {
  CliqueOptions clique;
  // Arity classes that count_k_is_mixed must route through dense enumeration
  // regardless of the sparse/dense split rule.
  std::vector<int> force_dense;
};

// Outcome of resolving the edges of a matching S against the edges that
// precede them and meet them.
struct Resolution {
  Hypergraph hypergraph;          // on the surviving vertices, relabeled
  std::vector<Vertex> original;   // surviving vertex -> vertex of the input
  std::vector<Vertex> deleted;    // input vertices removed by resolution
  std::vector<bool> introduced;   // per edge of `hypergraph`: created by resolution
};

Resolution resolve_intersections(const Hypergraph& h, std::span<const std::size_t> matching);
// Keeps the arity-2 edges and the arity >= 3 edges created by resolution.
Hypergraph strip_foreign_high_arity(const Resolution& r);

// The set family of independent k-sets that contain w, as a smaller instance:
// vertices that cannot join w are removed and edges meeting w shrink.
// Returns nullopt when w itself contains an edge.
struct Contraction {
  Hypergraph hypergraph;
  std::vector<Vertex> original;
};
std::optional<Contraction> contract(const Hypergraph& h, std::span<const Vertex> w);

// Number of k-sets that are independent in the underlying graph, contain
// every edge of the matching, and contain no arity >= 3 edge that meets a
// matching edge e and precedes e.
Count restricted_term(const Hypergraph& h, std::span<const std::size_t> matching, int k,
                      const KisOptions& options = {});

// Independent k-sets of the underlying graph that contain an arity >= 3 edge.
Count count_invalid(const Hypergraph& h, int k, const KisOptions& options = {});
Count count_k_is_hypergraph(const Hypergraph& h, int k, const KisOptions& options = {});

// dense[r] tells whether arity class r goes through dense enumeration.
struct ArityPartition {
  std::array<bool, kMaxArity + 1> dense{};
};
ArityPartition mixed_arity_partition(const Hypergraph& h, int k, const KisOptions& options = {});
Count count_k_is_mixed(const Hypergraph& h, int k, const KisOptions& options = {});

struct KisDecision {
  bool found = false;
  Count count;
  std::optional<std::vector<Vertex>> witness;
};
KisDecision decide_k_is(const Hypergraph& h, int k, bool want_witness, const KisOptions& options = {});

}  // namespace sparsek
