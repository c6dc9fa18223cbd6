#include "sparsek/clique_engine.hpp"

#include <algorithm>
#include <vector>

namespace sparsek {

namespace {

__extension__ typedef unsigned __int128 Wide;

void check_dims(const BitMatrix& ab, const BitMatrix& bc, const BitMatrix& ac) {
  if (ab.rows() != ac.rows() || ab.cols() != bc.rows() || bc.cols() != ac.cols()) {
    throw InvalidArgument("triangle matrices have incompatible dimensions");
  }
}

Count from_u128(Wide x) {
  Count c = static_cast<std::uint64_t>(x >> 64);
  c <<= 64;
  c += static_cast<std::uint64_t>(x);
  return c;
}

// All cliques of one size, stored flat, with the common neighbourhood of each.
struct CliqueList {
  int size = 0;
  std::vector<Vertex> vertices;  // size * count entries
  std::vector<Bitset> common;

  std::size_t count() const { return common.size(); }
  std::span<const Vertex> clique(std::size_t i) const {
    return {vertices.data() + i * static_cast<std::size_t>(size), static_cast<std::size_t>(size)};
  }
};

class CliqueCollector {
 public:
  CliqueCollector(std::span<const Bitset> adj, int size, std::size_t cap)
      : adj_(adj), cap_(cap) {
    out_.size = size;
  }

  CliqueList run() {
    const std::size_t n = adj_.size();
    Bitset all(n);
    for (std::size_t v = 0; v < n; ++v) all.set(v);
    std::vector<Vertex> stack;
    extend(stack, all, 0);
    return std::move(out_);
  }

 private:
  void extend(std::vector<Vertex>& stack, const Bitset& common, std::size_t from) {
    if (static_cast<int>(stack.size()) == out_.size) {
      if (out_.count() >= cap_) {
        throw ResourceLimit("clique engine: more than " + std::to_string(cap_) + " part nodes");
      }
      out_.vertices.insert(out_.vertices.end(), stack.begin(), stack.end());
      out_.common.push_back(common);
      return;
    }
    const std::size_t n = adj_.size();
    for (std::size_t v = from; v < n; ++v) {
      if (!common.test(v)) continue;
      Bitset next = common;
      next &= adj_[v];
      stack.push_back(static_cast<Vertex>(v));
      extend(stack, next, v + 1);
      stack.pop_back();
    }
  }

  std::span<const Bitset> adj_;
  std::size_t cap_;
  CliqueList out_;
};

bool related(const CliqueList& p, std::size_t i, const CliqueList& q, std::size_t j) {
  const Bitset& cn = p.common[i];
  for (Vertex v : q.clique(j)) {
    if (!cn.test(v)) return false;
  }
  return true;
}

Count factorial(int x) {
  Count r = 1;
  for (int i = 2; i <= x; ++i) r *= i;
  return r;
}

}  // namespace

Count count_triangles_tripartite(const BitMatrix& ab, const BitMatrix& bc, const BitMatrix& ac) {
  check_dims(ab, bc, ac);
  const BitMatrix cb = bc.transposed();
  Wide total = 0;
  for (std::size_t a = 0; a < ab.rows(); ++a) {
    auto row = ab.row(a);
    for (std::size_t c = 0; c < ac.cols(); ++c) {
      if (ac.test(a, c)) total += and_popcount(row, cb.row(c));
    }
  }
  return from_u128(total);
}

std::optional<std::array<std::size_t, 3>> find_triangle_tripartite(const BitMatrix& ab,
                                                                   const BitMatrix& bc,
                                                                   const BitMatrix& ac) {
  check_dims(ab, bc, ac);
  const BitMatrix cb = bc.transposed();
  for (std::size_t a = 0; a < ab.rows(); ++a) {
    auto row = ab.row(a);
    for (std::size_t c = 0; c < ac.cols(); ++c) {
      if (!ac.test(a, c) || and_popcount(row, cb.row(c)) == 0) continue;
      for (std::size_t b = 0; b < ab.cols(); ++b) {
        if (ab.test(a, b) && bc.test(b, c)) return std::array<std::size_t, 3>{a, b, c};
      }
    }
  }
  return std::nullopt;
}

Count count_cliques_in_rows(std::span<const Bitset> adj, int k, const CliqueOptions& options) {
  const std::size_t n = adj.size();
  if (k < 0) return 0;
  if (k == 0) return 1;
  if (static_cast<std::size_t>(k) > n) return 0;
  if (k == 1) return n;
  if (k == 2) {
    std::size_t twice = 0;
    for (const auto& row : adj) twice += row.count();
    return twice / 2;
  }
  const int q = k / 3;
  const int a = q;
  const int b = (k % 3 == 2) ? q + 1 : q;
  const int c = k - a - b;

  const CliqueList as = CliqueCollector(adj, a, options.node_cap).run();
  const CliqueList bs = (b == a) ? as : CliqueCollector(adj, b, options.node_cap).run();
  const CliqueList cs = (c == b) ? bs : CliqueCollector(adj, c, options.node_cap).run();
  if (as.count() == 0 || bs.count() == 0 || cs.count() == 0) return 0;

  BitMatrix cb(cs.count(), bs.count());
  for (std::size_t i = 0; i < cs.count(); ++i) {
    for (std::size_t j = 0; j < bs.count(); ++j) {
      if (related(cs, i, bs, j)) cb.set(i, j);
    }
  }
  Wide total = 0;
  Bitset ab_row(bs.count());
  for (std::size_t i = 0; i < as.count(); ++i) {
    ab_row.clear();
    for (std::size_t j = 0; j < bs.count(); ++j) {
      if (related(as, i, bs, j)) ab_row.set(j);
    }
    if (ab_row.none()) continue;
    for (std::size_t j = 0; j < cs.count(); ++j) {
      if (related(as, i, cs, j)) total += and_popcount(ab_row.words(), cb.row(j));
    }
  }

  // Each k-clique is met once per ordered split into blocks of sizes a, b, c.
  const Count per_clique = factorial(k) / (factorial(a) * factorial(b) * factorial(c));
  const Count raw = from_u128(total);
  if (raw % per_clique != 0) {
    throw InternalError("clique engine: triangle count not divisible by the split multiplicity");
  }
  return raw / per_clique;
}

Count count_k_cliques(const Graph& g, int k, const CliqueOptions& options) {
  if (k >= 0 && k <= 2) {
    if (k == 0) return 1;
    if (k == 1) return g.num_vertices();
    return g.num_edges();
  }
  const std::size_t n = g.num_vertices();
  std::vector<Bitset> rows(n, Bitset(n));
  for (Vertex v = 0; v < n; ++v) {
    for (Vertex u : g.neighbors(v)) rows[v].set(u);
  }
  return count_cliques_in_rows(rows, k, options);
}

Count count_k_is(const Graph& g, int k, const CliqueOptions& options) {
  const std::size_t n = g.num_vertices();
  if (k < 0) return 0;
  if (k == 0) return 1;
  if (k == 1) return n;
  if (k == 2) return binomial(n, 2) - g.num_edges();
  if (static_cast<std::size_t>(k) > n) return 0;
  std::vector<Bitset> rows(n, Bitset(n));
  for (Vertex v = 0; v < n; ++v) {
    for (Vertex u = 0; u < n; ++u) {
      if (u != v) rows[v].set(u);
    }
    for (Vertex u : g.neighbors(v)) rows[v].reset(u);
  }
  return count_cliques_in_rows(rows, k, options);
}

Count count_k_is_containing(const Graph& g, int k, std::span<const Vertex> w,
                            const CliqueOptions& options) {
  if (k < static_cast<int>(w.size())) return 0;
  if (!is_independent(g, w)) return 0;
  const auto closed = closed_neighborhood(g, w);
  std::vector<char> drop(g.num_vertices(), 0);
  for (Vertex v : closed) drop[v] = 1;
  std::vector<Vertex> keep;
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    if (!drop[v]) keep.push_back(v);
  }
  return count_k_is(induced_subgraph(g, keep), k - static_cast<int>(w.size()), options);
}

}  // namespace sparsek
