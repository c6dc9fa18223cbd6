#include "sparsek/hypergraph.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_set>

namespace sparsek {

Edge::Edge(std::span<const Vertex> vs) {
  if (vs.size() > static_cast<std::size_t>(kMaxArity)) {
    throw InvalidArgument("edge has more than " + std::to_string(kMaxArity) + " vertices");
  }
  std::copy(vs.begin(), vs.end(), v_.begin());
  size_ = static_cast<std::uint8_t>(vs.size());
  std::sort(v_.begin(), v_.begin() + size_);
  if (std::adjacent_find(v_.begin(), v_.begin() + size_) != v_.begin() + size_) {
    throw InvalidArgument("edge repeats a vertex");
  }
}

bool Edge::contains(Vertex x) const { return std::binary_search(begin(), end(), x); }

bool Edge::intersects(const Edge& other) const {
  std::size_t i = 0, j = 0;
  while (i < size_ && j < other.size_) {
    if (v_[i] == other.v_[j]) return true;
    if (v_[i] < other.v_[j]) {
      ++i;
    } else {
      ++j;
    }
  }
  return false;
}

std::size_t EdgeHash::operator()(const Edge& e) const noexcept {
  std::uint64_t h = 0x9e3779b97f4a7c15ULL ^ e.size();
  for (Vertex v : e) {
    h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return static_cast<std::size_t>(h);
}

Hypergraph::Hypergraph(std::size_t n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
  std::unordered_set<Edge, EdgeHash> seen;
  seen.reserve(edges_.size() * 2);
  for (const Edge& e : edges_) {
    if (e.size() < 2) throw InvalidArgument("edge arity below 2");
    if (e[e.size() - 1] >= n_) throw InvalidArgument("edge vertex out of range");
    if (!seen.insert(e).second) throw InvalidArgument("duplicate edge");
  }
}

Hypergraph Hypergraph::with_unique_edges(std::size_t n, std::span<const Edge> edges) {
  std::unordered_set<Edge, EdgeHash> seen;
  seen.reserve(edges.size() * 2);
  std::vector<Edge> kept;
  kept.reserve(edges.size());
  for (const Edge& e : edges) {
    if (seen.insert(e).second) kept.push_back(e);
  }
  return Hypergraph(n, std::move(kept));
}

std::array<std::size_t, kMaxArity + 1> Hypergraph::arity_profile() const {
  std::array<std::size_t, kMaxArity + 1> p{};
  for (const Edge& e : edges_) ++p[e.size()];
  return p;
}

int Hypergraph::max_arity() const {
  int r = 0;
  for (const Edge& e : edges_) r = std::max(r, static_cast<int>(e.size()));
  return r;
}

Graph::Graph(std::size_t n, std::span<const std::pair<Vertex, Vertex>> edges) : adj_(n) {
  for (auto [u, v] : edges) {
    if (u == v) throw InvalidArgument("self-loop");
    if (u >= n || v >= n) throw InvalidArgument("graph vertex out of range");
    adj_[u].push_back(v);
    adj_[v].push_back(u);
  }
  for (auto& row : adj_) {
    std::sort(row.begin(), row.end());
    row.erase(std::unique(row.begin(), row.end()), row.end());
    m_ += row.size();
  }
  m_ /= 2;
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  const auto& row = adj_[u];
  return std::binary_search(row.begin(), row.end(), v);
}

std::vector<std::pair<Vertex, Vertex>> Graph::edge_list() const {
  std::vector<std::pair<Vertex, Vertex>> out;
  out.reserve(m_);
  for (Vertex u = 0; u < adj_.size(); ++u) {
    for (Vertex v : adj_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

Graph underlying_graph(const Hypergraph& h) {
  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (const Edge& e : h.edges()) {
    if (e.size() == 2) pairs.emplace_back(e[0], e[1]);
  }
  return Graph(h.num_vertices(), pairs);
}

Graph complement(const Graph& g) {
  const std::size_t n = g.num_vertices();
  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (Vertex u = 0; u < n; ++u) {
    auto nb = g.neighbors(u);
    std::size_t j = 0;
    for (Vertex v = u + 1; v < n; ++v) {
      while (j < nb.size() && nb[j] < v) ++j;
      if (j < nb.size() && nb[j] == v) continue;
      pairs.emplace_back(u, v);
    }
  }
  return Graph(n, pairs);
}

std::vector<Vertex> closed_neighborhood(const Graph& g, std::span<const Vertex> w) {
  std::vector<char> mark(g.num_vertices(), 0);
  for (Vertex v : w) {
    mark[v] = 1;
    for (Vertex u : g.neighbors(v)) mark[u] = 1;
  }
  std::vector<Vertex> out;
  for (Vertex v = 0; v < mark.size(); ++v) {
    if (mark[v]) out.push_back(v);
  }
  return out;
}

Graph induced_subgraph(const Graph& g, std::span<const Vertex> keep) {
  std::vector<Vertex> sorted(keep.begin(), keep.end());
  std::sort(sorted.begin(), sorted.end());
  std::vector<std::int64_t> index(g.num_vertices(), -1);
  for (std::size_t i = 0; i < sorted.size(); ++i) index[sorted[i]] = static_cast<std::int64_t>(i);
  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (Vertex u : sorted) {
    for (Vertex v : g.neighbors(u)) {
      if (u < v && index[v] >= 0) {
        pairs.emplace_back(static_cast<Vertex>(index[u]), static_cast<Vertex>(index[v]));
      }
    }
  }
  return Graph(sorted.size(), pairs);
}

Induced induced(const Hypergraph& h, std::span<const Vertex> x) {
  std::vector<Vertex> sorted(x.begin(), x.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  std::vector<std::int64_t> index(h.num_vertices(), -1);
  for (std::size_t i = 0; i < sorted.size(); ++i) index[sorted[i]] = static_cast<std::int64_t>(i);
  std::vector<Edge> edges;
  for (const Edge& e : h.edges()) {
    std::array<Vertex, kMaxArity> buf{};
    bool inside = true;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (index[e[i]] < 0) {
        inside = false;
        break;
      }
      buf[i] = static_cast<Vertex>(index[e[i]]);
    }
    if (inside) edges.emplace_back(std::span<const Vertex>(buf.data(), e.size()));
  }
  return {Hypergraph(sorted.size(), std::move(edges)), std::move(sorted)};
}

namespace {

struct MatchingWalker {
  const Hypergraph& h;
  std::vector<std::size_t> candidates;
  std::size_t target;
  const std::function<bool(const Matching&)>& visit;
  std::vector<char> used;
  Matching current;

  bool walk(std::size_t from) {
    if (current.edges.size() == target) {
      Matching out = current;
      std::sort(out.span.begin(), out.span.end());
      return visit(out);
    }
    for (std::size_t ci = from; ci < candidates.size(); ++ci) {
      const Edge& e = h.edge(candidates[ci]);
      bool free = true;
      for (Vertex v : e) {
        if (used[v]) {
          free = false;
          break;
        }
      }
      if (!free) continue;
      for (Vertex v : e) {
        used[v] = 1;
        current.span.push_back(v);
      }
      current.edges.push_back(candidates[ci]);
      const bool go_on = walk(ci + 1);
      current.edges.pop_back();
      for (Vertex v : e) {
        used[v] = 0;
        current.span.pop_back();
      }
      if (!go_on) return false;
    }
    return true;
  }
};

}  // namespace

void for_each_matching(const Hypergraph& h, std::size_t size, std::optional<int> arity_cap,
                       const std::function<bool(const Matching&)>& visit) {
  MatchingWalker w{h, {}, size, visit, std::vector<char>(h.num_vertices(), 0), {}};
  for (std::size_t i = 0; i < h.num_edges(); ++i) {
    const int r = static_cast<int>(h.edge(i).size());
    if (r >= 3 && (!arity_cap || r <= *arity_cap)) w.candidates.push_back(i);
  }
  w.walk(0);
}

std::vector<Matching> enumerate_matchings(const Hypergraph& h, std::size_t size,
                                          std::optional<int> arity_cap) {
  std::vector<Matching> out;
  for_each_matching(h, size, arity_cap, [&](const Matching& m) {
    out.push_back(m);
    return true;
  });
  return out;
}

Hypergraph reorder_edges(const Hypergraph& h, std::span<const std::size_t> order) {
  if (order.size() != h.num_edges()) throw InvalidArgument("edge order has wrong length");
  std::vector<Edge> edges;
  edges.reserve(order.size());
  for (std::size_t i : order) edges.push_back(h.edge(i));
  return Hypergraph(h.num_vertices(), std::move(edges));
}

Hypergraph sort_by_arity(const Hypergraph& h) {
  std::vector<std::size_t> order(h.num_edges());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return h.edge(a).size() < h.edge(b).size();
  });
  return reorder_edges(h, order);
}

bool is_independent(const Hypergraph& h, std::span<const Vertex> set) {
  std::vector<char> in(h.num_vertices(), 0);
  for (Vertex v : set) {
    if (v >= h.num_vertices() || in[v]) return false;
    in[v] = 1;
  }
  for (const Edge& e : h.edges()) {
    bool inside = true;
    for (Vertex v : e) {
      if (!in[v]) {
        inside = false;
        break;
      }
    }
    if (inside) return false;
  }
  return true;
}

bool is_independent(const Graph& g, std::span<const Vertex> set) {
  std::vector<char> in(g.num_vertices(), 0);
  for (Vertex v : set) {
    if (v >= g.num_vertices() || in[v]) return false;
    in[v] = 1;
  }
  for (Vertex v : set) {
    for (Vertex u : g.neighbors(v)) {
      if (in[u]) return false;
    }
  }
  return true;
}

}  // namespace sparsek
