#include "sparsek/kis_solver.hpp"

#include <algorithm>
#include <unordered_map>

#include "sparsek/bitset.hpp"

namespace sparsek {
namespace {

Hypergraph drop_wide_edges(const Hypergraph& h, int k) {
  if (h.max_arity() <= k) return h;
  std::vector<Edge> kept;
  for (const Edge& e : h.edges()) {
    if (static_cast<int>(e.size()) <= k) kept.push_back(e);
  }
  return Hypergraph(h.num_vertices(), std::move(kept));
}

std::vector<Bitset> adjacency_rows(const Hypergraph& h) {
  std::vector<Bitset> rows(h.num_vertices(), Bitset(h.num_vertices()));
  for (const Edge& e : h.edges()) {
    if (e.size() != 2) continue;
    rows[e[0]].set(e[1]);
    rows[e[1]].set(e[0]);
  }
  return rows;
}

// Calls f on every r-subset of the sorted vertex list xs, as an Edge.
// Stops early when f returns false; returns false in that case.
template <class F>
bool for_each_subset(std::span<const Vertex> xs, int r, F&& f) {
  const int size = static_cast<int>(xs.size());
  if (r > size || r <= 0) return true;
  std::array<int, kMaxArity> idx{};
  for (int i = 0; i < r; ++i) idx[i] = i;
  std::array<Vertex, kMaxArity> buf{};
  while (true) {
    for (int i = 0; i < r; ++i) buf[i] = xs[idx[i]];
    if (!f(Edge(std::span<const Vertex>(buf.data(), static_cast<std::size_t>(r))))) return false;
    int i = r - 1;
    while (i >= 0 && idx[i] == size - r + i) --i;
    if (i < 0) return true;
    ++idx[i];
    for (int j = i + 1; j < r; ++j) idx[j] = idx[j - 1] + 1;
  }
}

// Shared by the public contract() and the fused term evaluation: vertices
// flagged in `excluded` are removed up front.
std::optional<Contraction> contract_edges(std::size_t n, std::span<const Edge> edges,
                                          std::span<const Vertex> w, std::vector<char> excluded) {
  std::vector<char> in_w(n, 0);
  for (Vertex v : w) {
    if (v >= n) throw InvalidArgument("contraction vertex out of range");
    if (in_w[v]) throw InvalidArgument("repeated vertex in contraction set");
    in_w[v] = 1;
    excluded[v] = 1;
  }
  std::vector<Edge> candidates;
  candidates.reserve(edges.size());
  std::array<Vertex, kMaxArity> rest{};
  for (const Edge& e : edges) {
    std::size_t left = 0;
    for (Vertex v : e) {
      if (!in_w[v]) rest[left++] = v;
    }
    if (left == 0) return std::nullopt;
    if (left == e.size()) {
      candidates.push_back(e);
    } else if (left == 1) {
      excluded[rest[0]] = 1;
    } else {
      candidates.emplace_back(std::span<const Vertex>(rest.data(), left));
    }
  }
  Contraction out;
  std::vector<Vertex> relabel(n, 0);
  for (Vertex v = 0; v < n; ++v) {
    if (excluded[v]) continue;
    relabel[v] = static_cast<Vertex>(out.original.size());
    out.original.push_back(v);
  }
  std::vector<Edge> mapped;
  mapped.reserve(candidates.size());
  std::array<Vertex, kMaxArity> buf{};
  for (const Edge& e : candidates) {
    bool alive = true;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (excluded[e[i]]) {
        alive = false;
        break;
      }
      buf[i] = relabel[e[i]];
    }
    if (alive) mapped.emplace_back(std::span<const Vertex>(buf.data(), e.size()));
  }
  out.hypergraph = Hypergraph::with_unique_edges(out.original.size(), mapped);
  return out;
}

// Inclusion-exclusion over matchings of the arity >= 3 edges. Terms are
// evaluated by resolving the matching, contracting on its span and recursing.
class InvalidCounter {
 public:
  InvalidCounter(const Hypergraph& h, int k, const KisOptions& options)
      : k_(k), options_(options), n_(h.num_vertices()), adj_(adjacency_rows(h)), span_(n_),
        incident_(n_) {
    std::array<bool, kMaxArity + 1> seen{};
    for (const Edge& e : h.edges()) {
      if (e.size() == 2) {
        low_.push_back(e);
        continue;
      }
      const auto pos = static_cast<std::uint32_t>(high_.size());
      high_.push_back(e);
      index_.emplace(e, pos);
      for (Vertex v : e) incident_[v].push_back(pos);
      seen[e.size()] = true;
    }
    for (int r = 3; r <= kMaxArity; ++r) {
      if (seen[r]) arities_.push_back(r);
    }
    stamp_.assign(high_.size(), 0);
  }

  Count run() {
    total_ = 0;
    dfs(0);
    return total_;
  }

 private:
  int k_;
  const KisOptions& options_;
  std::size_t n_;
  std::vector<Bitset> adj_;
  std::vector<Edge> low_;
  std::vector<Edge> high_;
  std::unordered_map<Edge, std::uint32_t, EdgeHash> index_;
  std::vector<int> arities_;

  Bitset span_;
  std::vector<Vertex> span_list_;
  std::vector<std::uint32_t> chosen_;
  std::vector<std::vector<std::uint32_t>> incident_;
  std::vector<std::uint32_t> stamp_;
  std::uint32_t generation_ = 0;
  Count total_;

  void dfs(std::size_t from) {
    for (std::size_t p = from; p < high_.size(); ++p) {
      const Edge& e = high_[p];
      if (static_cast<int>(span_list_.size() + e.size()) > k_) continue;
      bool ok = true;
      for (Vertex u : e) {
        if (span_.test(u)) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      for (Vertex u : e) span_.set(u);
      for (Vertex u : e) {
        if (adj_[u].intersects(span_)) {
          ok = false;
          break;
        }
      }
      if (ok) {
        chosen_.push_back(static_cast<std::uint32_t>(p));
        span_list_.insert(span_list_.end(), e.begin(), e.end());
        const Count t = term();
        if (t != 0) {
          if (chosen_.size() % 2 == 1) {
            total_ += t;
          } else {
            total_ -= t;
          }
          if (static_cast<int>(span_list_.size()) + 3 <= k_) dfs(p + 1);
        }
        span_list_.resize(span_list_.size() - e.size());
        chosen_.pop_back();
      }
      for (Vertex u : e) span_.reset(u);
    }
  }

  Count term() {
    std::vector<Vertex> w = span_list_;
    std::sort(w.begin(), w.end());
    if (static_cast<int>(w.size()) == k_) return full_span_valid(w) ? 1 : 0;

    std::vector<char> excluded(n_, 0);
    std::vector<Edge> edges = low_;
    std::array<Vertex, kMaxArity> rest{};
    for (std::uint32_t pe : chosen_) {
      const Edge& e = high_[pe];
      ++generation_;
      for (Vertex u : e) {
        for (std::uint32_t q : incident_[u]) {
          if (q >= pe) break;
          if (stamp_[q] == generation_) continue;
          stamp_[q] = generation_;
          std::size_t left = 0;
          for (Vertex v : high_[q]) {
            if (!e.contains(v)) rest[left++] = v;
          }
          if (left == 0) return 0;
          if (left == 1) {
            excluded[rest[0]] = 1;
          } else {
            edges.emplace_back(std::span<const Vertex>(rest.data(), left));
          }
        }
      }
    }
    for (Vertex v : w) {
      if (excluded[v]) return 0;
    }
    auto c = contract_edges(n_, edges, w, std::move(excluded));
    if (!c) return 0;
    return count_k_is_hypergraph(c->hypergraph, k_ - static_cast<int>(w.size()), options_);
  }

  // With |V(S)| = k the only candidate set is V(S) itself. It counts when no
  // other edge inside it meets, and precedes, an edge of S.
  bool full_span_valid(std::span<const Vertex> x) {
    auto offending = [&](std::uint32_t q) {
      if (std::find(chosen_.begin(), chosen_.end(), q) != chosen_.end()) return false;
      for (std::uint32_t pe : chosen_) {
        if (q < pe && high_[q].intersects(high_[pe])) return true;
      }
      return false;
    };
    std::uint64_t subsets = 0;
    for (int r : arities_) subsets += binomial_u64(x.size(), static_cast<std::uint64_t>(r));
    std::uint64_t incidences = 0;
    for (Vertex v : x) incidences += incident_[v].size();
    if (subsets <= incidences) {
      for (int r : arities_) {
        const bool clean = for_each_subset(x, r, [&](const Edge& cand) {
          auto it = index_.find(cand);
          return it == index_.end() || !offending(it->second);
        });
        if (!clean) return false;
      }
      return true;
    }
    for (Vertex v : x) {
      for (std::uint32_t q : incident_[v]) {
        const Edge& f = high_[q];
        if (f[0] != v) continue;  // visit each edge once, from its smallest vertex
        bool inside = true;
        for (Vertex u : f) {
          if (!span_.test(u)) {
            inside = false;
            break;
          }
        }
        if (inside && offending(q)) return false;
      }
    }
    return true;
  }
};

Count count_dense_part(const Hypergraph& sorted, const std::vector<Bitset>& adj,
                       const ArityPartition& part, int k) {
  const std::size_t n = sorted.num_vertices();
  std::unordered_map<Edge, std::uint32_t, EdgeHash> index;
  std::array<bool, kMaxArity + 1> present{};
  for (std::size_t i = 0; i < sorted.num_edges(); ++i) {
    const Edge& e = sorted.edge(i);
    if (e.size() < 3) continue;
    index.emplace(e, static_cast<std::uint32_t>(i));
    present[e.size()] = true;
  }

  Count total = 0;
  Bitset members(n);
  std::vector<Vertex> chosen;
  for (std::size_t p = 0; p < sorted.num_edges(); ++p) {
    const Edge& e = sorted.edge(p);
    if (e.size() < 3 || !part.dense[e.size()]) continue;
    members.clear();
    for (Vertex u : e) members.set(u);
    bool independent = true;
    for (Vertex u : e) {
      if (adj[u].intersects(members)) independent = false;
    }
    if (!independent) continue;
    std::vector<Vertex> candidates;
    for (Vertex v = 0; v < n; ++v) {
      if (!members.test(v) && !adj[v].intersects(members)) candidates.push_back(v);
    }
    const int need = k - static_cast<int>(e.size());
    chosen.assign(e.begin(), e.end());

    // e must be the first edge of the arity-sorted order inside X, and no
    // sparse-class edge may lie inside X.
    auto accept = [&]() {
      std::vector<Vertex> x = chosen;
      std::sort(x.begin(), x.end());
      for (int r = 3; r <= kMaxArity; ++r) {
        if (!present[r]) continue;
        const bool clean = for_each_subset(x, r, [&](const Edge& cand) {
          auto it = index.find(cand);
          if (it == index.end() || it->second == p) return true;
          return part.dense[r] && it->second > p;
        });
        if (!clean) return false;
      }
      return true;
    };

    auto extend = [&](auto&& self, std::size_t from, int left) -> void {
      if (left == 0) {
        if (accept()) total += 1;
        return;
      }
      for (std::size_t i = from; i + static_cast<std::size_t>(left) <= candidates.size(); ++i) {
        const Vertex v = candidates[i];
        if (adj[v].intersects(members)) continue;
        members.set(v);
        chosen.push_back(v);
        self(self, i + 1, left - 1);
        chosen.pop_back();
        members.reset(v);
      }
    };
    extend(extend, 0, need);
  }
  return total;
}

void check_matching(const Hypergraph& h, std::span<const std::size_t> matching) {
  std::vector<char> used(h.num_vertices(), 0);
  for (std::size_t i = 0; i < matching.size(); ++i) {
    if (matching[i] >= h.num_edges()) throw InvalidArgument("matching edge index out of range");
    if (i > 0 && matching[i] <= matching[i - 1]) throw InvalidArgument("matching indices must increase");
    const Edge& e = h.edge(matching[i]);
    if (e.size() < 3) throw InvalidArgument("matching edges must have arity >= 3");
    for (Vertex v : e) {
      if (used[v]) throw InvalidArgument("matching edges must be disjoint");
      used[v] = 1;
    }
  }
}

}  // namespace

Resolution resolve_intersections(const Hypergraph& h, std::span<const std::size_t> matching) {
  check_matching(h, matching);
  const std::size_t n = h.num_vertices();
  std::vector<char> replaced(h.num_edges(), 0);
  std::vector<char> in_matching(h.num_edges(), 0);
  for (std::size_t i : matching) in_matching[i] = 1;
  std::vector<char> deleted(n, 0);
  std::vector<Edge> created;
  for (std::size_t pe : matching) {
    const Edge& e = h.edge(pe);
    for (std::size_t q = 0; q < pe; ++q) {
      const Edge& f = h.edge(q);
      if (f.size() < 3 || in_matching[q] || !f.intersects(e)) continue;
      std::vector<Vertex> rest;
      for (Vertex v : f) {
        if (!e.contains(v)) rest.push_back(v);
      }
      if (rest.empty()) {
        throw InvalidArgument("an edge preceding a matching edge lies inside it");
      }
      if (rest.size() == 1) {
        deleted[rest[0]] = 1;
      } else {
        replaced[q] = 1;
        created.emplace_back(rest);
      }
    }
  }

  Resolution r;
  std::vector<Vertex> relabel(n, 0);
  for (Vertex v = 0; v < n; ++v) {
    if (deleted[v]) {
      r.deleted.push_back(v);
      continue;
    }
    relabel[v] = static_cast<Vertex>(r.original.size());
    r.original.push_back(v);
  }
  std::vector<Edge> edges;
  std::unordered_map<Edge, std::size_t, EdgeHash> position;
  auto add = [&](const Edge& e, bool introduced) {
    std::array<Vertex, kMaxArity> buf{};
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (deleted[e[i]]) return;
      buf[i] = relabel[e[i]];
    }
    Edge mapped(std::span<const Vertex>(buf.data(), e.size()));
    auto [it, fresh] = position.emplace(mapped, edges.size());
    if (fresh) {
      edges.push_back(mapped);
      r.introduced.push_back(introduced);
    } else if (introduced) {
      r.introduced[it->second] = true;
    }
  };
  for (std::size_t i = 0; i < h.num_edges(); ++i) {
    if (!replaced[i]) add(h.edge(i), false);
  }
  for (const Edge& e : created) add(e, true);
  r.hypergraph = Hypergraph(r.original.size(), std::move(edges));
  return r;
}

Hypergraph strip_foreign_high_arity(const Resolution& r) {
  std::vector<Edge> kept;
  for (std::size_t i = 0; i < r.hypergraph.num_edges(); ++i) {
    const Edge& e = r.hypergraph.edge(i);
    if (e.size() == 2 || r.introduced[i]) kept.push_back(e);
  }
  return Hypergraph(r.hypergraph.num_vertices(), std::move(kept));
}

std::optional<Contraction> contract(const Hypergraph& h, std::span<const Vertex> w) {
  return contract_edges(h.num_vertices(), h.edges(), w, std::vector<char>(h.num_vertices(), 0));
}

Count restricted_term(const Hypergraph& h, std::span<const std::size_t> matching, int k,
                      const KisOptions& options) {
  check_matching(h, matching);
  std::vector<Vertex> w;
  for (std::size_t i : matching) w.insert(w.end(), h.edge(i).begin(), h.edge(i).end());
  std::sort(w.begin(), w.end());
  if (static_cast<int>(w.size()) > k) return 0;
  if (!is_independent(underlying_graph(h), w)) return 0;
  // A preceding edge inside a matching edge rules out every candidate set.
  for (std::size_t pe : matching) {
    for (std::size_t q = 0; q < pe; ++q) {
      const Edge& f = h.edge(q);
      if (f.size() >= 3 && std::all_of(f.begin(), f.end(), [&](Vertex v) { return h.edge(pe).contains(v); })) {
        return 0;
      }
    }
  }
  const Resolution r = resolve_intersections(h, matching);
  for (Vertex v : r.deleted) {
    if (std::binary_search(w.begin(), w.end(), v)) return 0;
  }
  std::vector<Vertex> mapped;
  for (Vertex v : w) {
    auto it = std::lower_bound(r.original.begin(), r.original.end(), v);
    mapped.push_back(static_cast<Vertex>(it - r.original.begin()));
  }
  auto c = contract(strip_foreign_high_arity(r), mapped);
  if (!c) return 0;
  return count_k_is_hypergraph(c->hypergraph, k - static_cast<int>(w.size()), options);
}

Count count_invalid(const Hypergraph& h, int k, const KisOptions& options) {
  if (k < 3 || static_cast<std::size_t>(k) > h.num_vertices()) return 0;
  const Hypergraph hk = drop_wide_edges(h, k);
  if (hk.max_arity() < 3) return 0;
  return InvalidCounter(hk, k, options).run();
}

Count count_k_is_hypergraph(const Hypergraph& h, int k, const KisOptions& options) {
  if (k < 0) return 0;
  if (k == 0) return 1;
  if (static_cast<std::size_t>(k) > h.num_vertices()) return 0;
  const Hypergraph hk = drop_wide_edges(h, k);
  Count total = count_k_is(underlying_graph(hk), k, options.clique);
  if (hk.max_arity() < 3) return total;
  total -= InvalidCounter(hk, k, options).run();
  if (total < 0) throw InternalError("inclusion-exclusion produced a negative count");
  return total;
}

ArityPartition mixed_arity_partition(const Hypergraph& h, int k, const KisOptions& options) {
  ArityPartition part;
  for (int r : options.force_dense) {
    if (r < 3 || r > kMaxArity) throw InvalidArgument("forced dense arity must be in [3, 6]");
    part.dense[r] = true;
  }
  const auto profile = h.arity_profile();
  const Count n = h.num_vertices();
  for (int r = 3; r <= std::min(k, kMaxArity); ++r) {
    const Count m = profile[r];
    if (m == 0 || part.dense[r]) continue;
    const Count lhs = boost::multiprecision::pow(m, static_cast<unsigned>(k - r + 3));
    const Count rhs = boost::multiprecision::pow(m, 3U) * boost::multiprecision::pow(n, static_cast<unsigned>(3 * (k - r)));
    part.dense[r] = lhs > rhs;
  }
  return part;
}

Count count_k_is_mixed(const Hypergraph& h, int k, const KisOptions& options) {
  if (k < 0) return 0;
  if (k == 0) return 1;
  if (static_cast<std::size_t>(k) > h.num_vertices()) return 0;
  const Hypergraph sorted = sort_by_arity(drop_wide_edges(h, k));
  const ArityPartition part = mixed_arity_partition(sorted, k, options);

  std::vector<Edge> sparse_edges;
  for (const Edge& e : sorted.edges()) {
    if (e.size() == 2 || !part.dense[e.size()]) sparse_edges.push_back(e);
  }
  const Hypergraph sparse(sorted.num_vertices(), std::move(sparse_edges));

  Count total = count_k_is(underlying_graph(sorted), k, options.clique);
  if (sparse.max_arity() >= 3) total -= InvalidCounter(sparse, k, options).run();
  total -= count_dense_part(sorted, adjacency_rows(sorted), part, k);
  if (total < 0) throw InternalError("mixed counting produced a negative count");
  return total;
}

KisDecision decide_k_is(const Hypergraph& h, int k, bool want_witness, const KisOptions& options) {
  KisDecision out;
  out.count = count_k_is_hypergraph(h, k, options);
  out.found = out.count > 0;
  if (!out.found || !want_witness) return out;

  Hypergraph current = h;
  std::vector<Vertex> original(h.num_vertices());
  for (Vertex v = 0; v < original.size(); ++v) original[v] = v;
  std::vector<Vertex> witness;
  int need = k;
  while (need > 0) {
    if (current.num_vertices() == 0) throw InternalError("self-reduction ran out of vertices");
    std::vector<Vertex> rest(current.num_vertices() - 1);
    for (Vertex v = 0; v < rest.size(); ++v) rest[v] = v + 1;
    Induced without = induced(current, rest);
    if (count_k_is_hypergraph(without.hypergraph, need, options) > 0) {
      for (Vertex& v : without.original) v = original[v];
      original = std::move(without.original);
      current = std::move(without.hypergraph);
      continue;
    }
    const Vertex first = 0;
    auto c = contract(current, std::span<const Vertex>(&first, 1));
    if (!c) throw InternalError("self-reduction lost the solution");
    witness.push_back(original[0]);
    for (Vertex& v : c->original) v = original[v];
    original = std::move(c->original);
    current = std::move(c->hypergraph);
    --need;
  }
  std::sort(witness.begin(), witness.end());
  if (!is_independent(h, witness)) throw InternalError("self-reduction produced a dependent set");
  out.witness = std::move(witness);
  return out;
}

}  // namespace sparsek
