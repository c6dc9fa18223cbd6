#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <vector>

#include "sparsek/csp.hpp"
#include "sparsek/hypergraph.hpp"
#include "sparsek/random.hpp"
#include "sparsek/random_models.hpp"

namespace sparsek::testing {

inline Hypergraph make_hypergraph(std::size_t n, std::initializer_list<std::initializer_list<Vertex>> edges) {
  std::vector<Edge> es;
  for (auto e : edges) es.emplace_back(e);
  return Hypergraph(n, std::move(es));
}

inline Graph make_graph(std::size_t n, std::initializer_list<std::pair<Vertex, Vertex>> edges) {
  std::vector<std::pair<Vertex, Vertex>> es(edges);
  return Graph(n, es);
}

inline Graph complete_graph(std::size_t n) {
  std::vector<std::pair<Vertex, Vertex>> es;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) es.emplace_back(u, v);
  }
  return Graph(n, es);
}

// Arities 2..max_arity, each with a random edge count up to cap.
inline Hypergraph random_mixed(Rng& rng, std::size_t n, int max_arity, std::size_t cap) {
  std::array<std::size_t, kMaxArity + 1> per{};
  for (int r = 2; r <= max_arity; ++r) {
    const auto most = std::min<std::uint64_t>(cap, binomial_u64(n, static_cast<std::uint64_t>(r)));
    per[r] = rng.below(most + 1);
  }
  return random_hypergraph(n, per, rng);
}

inline std::vector<std::size_t> random_permutation(Rng& rng, std::size_t m) {
  std::vector<std::size_t> p(m);
  for (std::size_t i = 0; i < m; ++i) p[i] = i;
  rng.shuffle(std::span<std::size_t>(p));
  return p;
}

}  // namespace sparsek::testing
