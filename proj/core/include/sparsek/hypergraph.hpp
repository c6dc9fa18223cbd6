#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "sparsek/common.hpp"

namespace sparsek {

inline constexpr int kMaxArity = 6;

// A hyperedge: a sorted set of at most kMaxArity distinct vertices.
class Edge {
 public:
  Edge() = default;
  Edge(std::initializer_list<Vertex> vs) : Edge(std::span<const Vertex>(vs.begin(), vs.size())) {}
  // Sorts the input. Throws InvalidArgument on repeated vertices or too many of them.
  explicit Edge(std::span<const Vertex> vs);

  std::size_t size() const { return size_; }
  bool empty() const { return size_ == 0; }
  const Vertex* begin() const { return v_.data(); }
  const Vertex* end() const { return v_.data() + size_; }
  Vertex operator[](std::size_t i) const { return v_[i]; }
  bool contains(Vertex x) const;
  bool intersects(const Edge& other) const;

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;

 private:
  std::array<Vertex, kMaxArity> v_{};
  std::uint8_t size_ = 0;
};

struct EdgeHash {
  std::size_t operator()(const Edge& e) const noexcept;
};

// Vertices 0..n-1 plus an ordered sequence of hyperedges with arity in
// [2, kMaxArity]. The sequence order is the tie-breaking order used by the
// inclusion-exclusion solver.
class Hypergraph {
 public:
  Hypergraph() = default;
  explicit Hypergraph(std::size_t n) : n_(n) {}
  // Validates arity, range and uniqueness; throws InvalidArgument.
  Hypergraph(std::size_t n, std::vector<Edge> edges);

  // Like the validating constructor, but silently drops repeated edges
  // (keeping the first occurrence).
  static Hypergraph with_unique_edges(std::size_t n, std::span<const Edge> edges);

  std::size_t num_vertices() const { return n_; }
  std::size_t num_edges() const { return edges_.size(); }
  std::span<const Edge> edges() const { return edges_; }
  const Edge& edge(std::size_t i) const { return edges_[i]; }

  // m_r for r = 0..kMaxArity.
  std::array<std::size_t, kMaxArity + 1> arity_profile() const;
  int max_arity() const;

 private:
  std::size_t n_ = 0;
  std::vector<Edge> edges_;
};

class Graph {
 public:
  explicit Graph(std::size_t n = 0) : adj_(n) {}
  // Repeated edges are merged; self-loops and out-of-range ends throw.
  Graph(std::size_t n, std::span<const std::pair<Vertex, Vertex>> edges);

  std::size_t num_vertices() const { return adj_.size(); }
  std::size_t num_edges() const { return m_; }
  std::span<const Vertex> neighbors(Vertex v) const { return adj_[v]; }
  std::size_t degree(Vertex v) const { return adj_[v].size(); }
  bool has_edge(Vertex u, Vertex v) const;
  std::vector<std::pair<Vertex, Vertex>> edge_list() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<std::vector<Vertex>> adj_;
  std::size_t m_ = 0;
};

struct Matching {
  std::vector<std::size_t> edges;  // indices into Hypergraph::edges(), increasing
  std::vector<Vertex> span;        // sorted union of the edges' vertices
};

Graph underlying_graph(const Hypergraph& h);
Graph complement(const Graph& g);
// W together with every vertex adjacent to W, sorted.
std::vector<Vertex> closed_neighborhood(const Graph& g, std::span<const Vertex> w);
Graph induced_subgraph(const Graph& g, std::span<const Vertex> keep);

struct Induced {
  Hypergraph hypergraph;
  std::vector<Vertex> original;  // new vertex -> old vertex
};
// Edges fully inside x, relabeled to 0..|x|-1 in increasing order of old id.
Induced induced(const Hypergraph& h, std::span<const Vertex> x);

// Visits every set of `size` pairwise disjoint edges of arity >= 3 (and at
// most arity_cap when given), in lexicographic order of edge index tuples.
// The visitor returns false to stop early.
void for_each_matching(const Hypergraph& h, std::size_t size, std::optional<int> arity_cap,
                       const std::function<bool(const Matching&)>& visit);
std::vector<Matching> enumerate_matchings(const Hypergraph& h, std::size_t size,
                                          std::optional<int> arity_cap = std::nullopt);

// Reorders edges by the given permutation: result edge i is h.edge(order[i]).
Hypergraph reorder_edges(const Hypergraph& h, std::span<const std::size_t> order);
// Stable sort by arity.
Hypergraph sort_by_arity(const Hypergraph& h);

bool is_independent(const Hypergraph& h, std::span<const Vertex> set);
bool is_independent(const Graph& g, std::span<const Vertex> set);

}  // namespace sparsek
