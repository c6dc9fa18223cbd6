#include "sparsek/random_models.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <unordered_set>

namespace sparsek {
namespace {

Edge random_edge(std::size_t n, int arity, Rng& rng) {
  std::array<Vertex, kMaxArity> vs{};
  int have = 0;
  while (have < arity) {
    const auto v = static_cast<Vertex>(rng.below(n));
    if (std::find(vs.begin(), vs.begin() + have, v) == vs.begin() + have) vs[have++] = v;
  }
  return Edge(std::span<const Vertex>(vs.data(), static_cast<std::size_t>(arity)));
}

std::vector<Edge> all_edges(std::size_t n, int arity) {
  std::vector<Edge> out;
  std::vector<Vertex> idx(static_cast<std::size_t>(arity));
  std::iota(idx.begin(), idx.end(), Vertex{0});
  const auto r = static_cast<std::size_t>(arity);
  while (true) {
    out.emplace_back(std::span<const Vertex>(idx));
    std::size_t i = r;
    while (i > 0 && idx[i - 1] == n - r + i - 1) --i;
    if (i == 0) return out;
    ++idx[i - 1];
    for (std::size_t j = i; j < r; ++j) idx[j] = idx[j - 1] + 1;
  }
}

std::vector<Edge> sample_edges(std::size_t n, int arity, std::size_t m, Rng& rng) {
  if (m == 0) return {};
  const std::uint64_t total = binomial_u64(n, static_cast<std::uint64_t>(arity));
  if (m > total) throw InvalidArgument("more edges requested than exist");
  // Dense requests shuffle the full list; sparse ones use rejection.
  if (2 * m > total && total <= 5'000'000) {
    std::vector<Edge> every = all_edges(n, arity);
    for (std::size_t i = 0; i < m; ++i) std::swap(every[i], every[i + rng.below(every.size() - i)]);
    every.resize(m);
    return every;
  }
  std::unordered_set<Edge, EdgeHash> seen;
  seen.reserve(2 * m);
  std::vector<Edge> out;
  out.reserve(m);
  while (out.size() < m) {
    Edge e = random_edge(n, arity, rng);
    if (seen.insert(e).second) out.push_back(e);
  }
  return out;
}

}  // namespace

std::size_t edges_for_density(std::size_t n, int arity, double gamma) {
  const double want = std::ceil(std::pow(static_cast<double>(n), gamma) - 1e-9);
  const std::uint64_t cap = binomial_u64(n, static_cast<std::uint64_t>(arity));
  if (want >= static_cast<double>(cap)) return static_cast<std::size_t>(cap);
  return static_cast<std::size_t>(want);
}

Hypergraph random_hypergraph(std::size_t n, const std::array<std::size_t, kMaxArity + 1>& per_arity, Rng& rng) {
  std::vector<Edge> edges;
  for (int r = 2; r <= kMaxArity; ++r) {
    auto part = sample_edges(n, r, per_arity[r], rng);
    edges.insert(edges.end(), part.begin(), part.end());
  }
  return Hypergraph(n, std::move(edges));
}

Graph random_graph(std::size_t n, double p, Rng& rng) {
  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (rng.bernoulli(p)) pairs.emplace_back(u, v);
    }
  }
  return Graph(n, pairs);
}

Graph random_graph_edges(std::size_t n, std::size_t m, Rng& rng) {
  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (const Edge& e : sample_edges(n, 2, m, rng)) pairs.emplace_back(e[0], e[1]);
  return Graph(n, pairs);
}

CspInstance random_csp(std::size_t n, std::span<const ConstraintFunction> family, std::size_t m, Rng& rng) {
  if (family.empty() && m > 0) throw InvalidArgument("random CSP needs a non-empty family");
  CspInstance inst(n);
  std::vector<std::uint32_t> ids;
  for (const auto& f : family) {
    if (static_cast<std::size_t>(f.arity()) > n) throw InvalidArgument("function arity exceeds the variable count");
    ids.push_back(inst.intern(f));
  }
  for (std::size_t i = 0; i < m; ++i) {
    const std::uint32_t id = ids[rng.below(ids.size())];
    const int r = inst.function(id).arity();
    std::vector<Var> vars;
    while (static_cast<int>(vars.size()) < r) {
      const auto v = static_cast<Var>(rng.below(n));
      if (std::find(vars.begin(), vars.end(), v) == vars.end()) vars.push_back(v);
    }
    inst.add_constraint(id, std::move(vars));
  }
  return inst;
}

PartiteHypergraph random_partite(std::span<const std::size_t> part_sizes, int r, double p, Rng& rng) {
  if (r < 2 || r > kMaxArity) throw InvalidArgument("uniformity must be in [2, 6]");
  PartiteHypergraph out;
  Vertex next = 0;
  for (std::size_t s : part_sizes) {
    std::vector<Vertex> part(s);
    std::iota(part.begin(), part.end(), next);
    next += static_cast<Vertex>(s);
    out.parts.push_back(std::move(part));
  }
  std::vector<Edge> edges;
  const std::size_t k = part_sizes.size();
  std::vector<std::size_t> chosen;
  std::vector<Vertex> vs;
  auto pick_vertices = [&](auto&& self, std::size_t depth) -> void {
    if (depth == chosen.size()) {
      if (rng.bernoulli(p)) edges.emplace_back(std::span<const Vertex>(vs));
      return;
    }
    for (Vertex v : out.parts[chosen[depth]]) {
      vs.push_back(v);
      self(self, depth + 1);
      vs.pop_back();
    }
  };
  auto pick_parts = [&](auto&& self, std::size_t from) -> void {
    if (chosen.size() == static_cast<std::size_t>(r)) {
      pick_vertices(pick_vertices, 0);
      return;
    }
    for (std::size_t i = from; i < k; ++i) {
      chosen.push_back(i);
      self(self, i + 1);
      chosen.pop_back();
    }
  };
  pick_parts(pick_parts, 0);
  out.hypergraph = Hypergraph(next, std::move(edges));
  return out;
}

}  // namespace sparsek
