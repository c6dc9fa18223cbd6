#include "sparsek/nand_impl.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <unordered_set>

#include "sparsek/bitset.hpp"
#include "sparsek/clique_engine.hpp"
#include "sparsek/turan_greedy.hpp"

namespace sparsek {

bool satisfies(const NandImplInstance& inst, std::span<const Var> true_vars) {
  std::vector<char> value(inst.n, 0);
  for (Var v : true_vars) {
    if (v >= inst.n || value[v]) return false;
    value[v] = 1;
  }
  for (auto [a, b] : inst.nand) {
    if (value[a] && value[b]) return false;
  }
  for (auto [x, y] : inst.impl) {
    if (value[x] && !value[y]) return false;
  }
  return true;
}

namespace {

struct Lists {
  std::vector<std::vector<Var>> out, in, nand;

  explicit Lists(const NandImplInstance& inst) : out(inst.n), in(inst.n), nand(inst.n) {
    for (auto [x, y] : inst.impl) {
      if (x >= inst.n || y >= inst.n || x == y) throw InvalidArgument("bad implication arc");
      out[x].push_back(y);
      in[y].push_back(x);
    }
    for (auto [a, b] : inst.nand) {
      if (a >= inst.n || b >= inst.n || a == b) throw InvalidArgument("bad NAND pair");
      nand[a].push_back(b);
      nand[b].push_back(a);
    }
  }
};

std::vector<Var> closure(const std::vector<std::vector<Var>>& adj, std::span<const Var> seeds, std::vector<char>& mark) {
  std::vector<Var> out;
  for (Var s : seeds) {
    if (!mark[s]) {
      mark[s] = 1;
      out.push_back(s);
    }
  }
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (Var w : adj[out[i]]) {
      if (!mark[w]) {
        mark[w] = 1;
        out.push_back(w);
      }
    }
  }
  return out;
}

std::vector<std::vector<Var>> all_descendants(const Lists& lists) {
  const std::size_t n = lists.out.size();
  std::vector<std::vector<Var>> d(n);
  std::vector<char> mark(n, 0);
  for (Var v = 0; v < n; ++v) {
    d[v] = closure(lists.out, std::span<const Var>(&v, 1), mark);
    for (Var u : d[v]) mark[u] = 0;
    std::sort(d[v].begin(), d[v].end());
  }
  return d;
}

// Sets the closure of `true_seeds` true and everything implying a false
// variable false, then removes the decided variables.
std::optional<NandImplBranch> fix_sets(const NandImplInstance& inst, int k, std::span<const Var> true_seeds,
                                       std::span<const Var> false_seeds) {
  const Lists lists(inst);
  std::vector<char> is_true(inst.n, 0);
  std::vector<Var> t = closure(lists.out, true_seeds, is_true);
  if (static_cast<int>(t.size()) > k) return std::nullopt;
  std::vector<Var> false_roots(false_seeds.begin(), false_seeds.end());
  for (Var v : t) false_roots.insert(false_roots.end(), lists.nand[v].begin(), lists.nand[v].end());
  std::vector<char> is_false(inst.n, 0);
  const std::vector<Var> f = closure(lists.in, false_roots, is_false);
  for (Var v : f) {
    if (is_true[v]) return std::nullopt;
  }
  NandImplBranch b;
  b.k = k - static_cast<int>(t.size());
  std::sort(t.begin(), t.end());
  b.forced = std::move(t);
  std::vector<Var> relabel(inst.n, 0);
  for (Var v = 0; v < inst.n; ++v) {
    if (is_true[v] || is_false[v]) continue;
    relabel[v] = static_cast<Var>(b.origin.size());
    b.origin.push_back(v);
  }
  auto alive = [&](Var v) { return !is_true[v] && !is_false[v]; };
  b.instance.n = b.origin.size();
  for (auto [a, c] : inst.nand) {
    if (alive(a) && alive(c)) b.instance.nand.emplace_back(relabel[a], relabel[c]);
  }
  for (auto [x, y] : inst.impl) {
    if (alive(x) && alive(y)) b.instance.impl.emplace_back(relabel[x], relabel[y]);
  }
  return b;
}

NandImplBranch chain(const NandImplBranch& outer, NandImplBranch inner) {
  for (Var& v : inner.origin) v = outer.origin[v];
  for (Var& v : inner.forced) v = outer.origin[v];
  inner.forced.insert(inner.forced.end(), outer.forced.begin(), outer.forced.end());
  std::sort(inner.forced.begin(), inner.forced.end());
  return inner;
}

std::vector<Var> lift(const NandImplBranch& b, std::span<const Var> sol) {
  std::vector<Var> out = b.forced;
  for (Var v : sol) out.push_back(b.origin[v]);
  std::sort(out.begin(), out.end());
  return out;
}

// Variables with more than k descendants or a NAND among their descendants
// are false, and so is everything implying them.
std::optional<NandImplBranch> prune(const NandImplInstance& inst, int k) {
  const Lists lists(inst);
  const auto d = all_descendants(lists);
  std::vector<Var> drop;
  std::vector<char> in_d(inst.n, 0);
  for (Var v = 0; v < inst.n; ++v) {
    bool bad = static_cast<int>(d[v].size()) > k;
    for (Var u : d[v]) in_d[u] = 1;
    for (std::size_t i = 0; i < d[v].size() && !bad; ++i) {
      for (Var w : lists.nand[d[v][i]]) {
        if (in_d[w]) bad = true;
      }
    }
    for (Var u : d[v]) in_d[u] = 0;
    if (bad) drop.push_back(v);
  }
  return fix_sets(inst, k, {}, drop);
}

// One node of a triangle instance: a vertex set and its NAND neighbourhood.
struct PartNode {
  std::vector<Var> vars;
  Bitset set;
  Bitset blocked;
};

class NodeBuilder {
 public:
  NodeBuilder(std::size_t n, const std::vector<Bitset>& nand_rows, std::size_t cap)
      : n_(n), rows_(nand_rows), cap_(cap) {}

  void add(std::vector<Var> vars) {
    std::sort(vars.begin(), vars.end());
    if (!seen_.insert(vars).second) return;
    if (nodes_.size() >= cap_) throw ResourceLimit("triangle instance exceeded its part-node cap");
    PartNode node{std::move(vars), Bitset(n_), Bitset(n_)};
    for (Var v : node.vars) {
      node.set.set(v);
      node.blocked |= rows_[v];
    }
    nodes_.push_back(std::move(node));
  }
  std::vector<PartNode> take() { return std::move(nodes_); }

 private:
  std::size_t n_;
  const std::vector<Bitset>& rows_;
  std::size_t cap_;
  std::vector<PartNode> nodes_;
  std::set<std::vector<Var>> seen_;
};

// NAND-independent t-subsets of `pool` avoiding `blocked`, each extending `prefix`.
template <class F>
void independent_subsets(std::span<const Var> pool, int t, const std::vector<Bitset>& rows, Bitset blocked,
                         std::vector<Var>& prefix, F&& emit) {
  if (t == 0) {
    emit(prefix, blocked);
    return;
  }
  for (std::size_t i = 0; i + static_cast<std::size_t>(t) <= pool.size(); ++i) {
    const Var v = pool[i];
    if (blocked.test(v)) continue;
    Bitset next = blocked;
    next |= rows[v];
    next.set(v);
    prefix.push_back(v);
    independent_subsets(pool.subspan(i + 1), t - 1, rows, std::move(next), prefix, emit);
    prefix.pop_back();
  }
}

bool related(const PartNode& a, const PartNode& b) {
  return !a.set.intersects(b.set) && !a.blocked.intersects(b.set);
}

BitMatrix relation(const std::vector<PartNode>& rows, const std::vector<PartNode>& cols) {
  BitMatrix m(rows.size(), cols.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < cols.size(); ++j) {
      if (related(rows[i], cols[j])) m.set(i, j);
    }
  }
  return m;
}

std::array<int, 3> near_equal_split(int total) {
  std::array<int, 3> parts{total / 3, total / 3, total / 3};
  for (int i = 0; i < total % 3; ++i) ++parts[i];
  return parts;
}

// Shared driver behind solve_restricted and the candidate enumeration.
class RestrictedSolver {
 public:
  // visit returns true to stop.
  using Visit = std::function<bool(std::span<const Var>)>;

  RestrictedSolver(const NandImplInstance& inst, int k, const NandImplOptions& options, bool enumerate_all)
      : inst_(inst), k_(k), options_(options), enumerate_all_(enumerate_all),
        groups_(build_groups(inst)), rows_(inst.n, Bitset(inst.n)) {
    for (auto [a, b] : inst.nand) {
      rows_[a].set(b);
      rows_[b].set(a);
    }
  }

  void run(const Visit& visit) {
    visit_ = &visit;
    if (k_ < 0 || static_cast<std::size_t>(k_) > inst_.n) return;
    if (k_ == 0) {
      visit({});
      return;
    }
    if (!enumerate_all_ && try_escape()) return;
    if (small_cases()) return;
    large_cases();
  }

 private:
  const NandImplInstance& inst_;
  int k_;
  const NandImplOptions& options_;
  bool enumerate_all_;
  GroupPartition groups_;
  std::vector<Bitset> rows_;
  const Visit* visit_ = nullptr;

  // Greedy attempt inside one group: a sink plus k-1 of its ancestors, or k
  // isolated variables.
  bool try_escape() {
    for (const VariableGroup& g : groups_.groups) {
      std::vector<Var> keep;
      for (Var v : g.members) {
        if (g.sink && (v == *g.sink || rows_[*g.sink].test(v))) continue;
        keep.push_back(v);
      }
      const int need = k_ - (g.sink ? 1 : 0);
      if (static_cast<int>(keep.size()) < need) continue;
      std::vector<std::pair<Vertex, Vertex>> pairs;
      std::vector<Vertex> local(inst_.n, 0);
      for (std::size_t i = 0; i < keep.size(); ++i) local[keep[i]] = static_cast<Vertex>(i);
      std::vector<char> inside(inst_.n, 0);
      for (Var v : keep) inside[v] = 1;
      for (auto [a, b] : inst_.nand) {
        if (inside[a] && inside[b]) pairs.emplace_back(local[a], local[b]);
      }
      auto found = find_k_is_sparse(Graph(keep.size(), pairs), need);
      if (!found) continue;
      std::vector<Var> sol;
      for (Vertex v : *found) sol.push_back(keep[v]);
      if (g.sink) sol.push_back(*g.sink);
      std::sort(sol.begin(), sol.end());
      if (satisfies(inst_, sol) && (*visit_)(sol)) return true;
    }
    return false;
  }

  bool triangle(const std::vector<Var>& forced, const std::array<std::vector<PartNode>, 3>& parts) {
    const BitMatrix ab = relation(parts[0], parts[1]);
    const BitMatrix bc = relation(parts[1], parts[2]);
    const BitMatrix ac = relation(parts[0], parts[2]);
    auto emit = [&](std::size_t a, std::size_t b, std::size_t c) {
      std::vector<Var> sol = forced;
      for (const PartNode* p : {&parts[0][a], &parts[1][b], &parts[2][c]}) {
        sol.insert(sol.end(), p->vars.begin(), p->vars.end());
      }
      std::sort(sol.begin(), sol.end());
      if (!satisfies(inst_, sol) || static_cast<int>(sol.size()) != k_) {
        throw InternalError("triangle instance produced an invalid assignment");
      }
      return (*visit_)(sol);
    };
    if (!enumerate_all_) {
      auto t = find_triangle_tripartite(ab, bc, ac);
      return t && emit((*t)[0], (*t)[1], (*t)[2]);
    }
    for (std::size_t a = 0; a < parts[0].size(); ++a) {
      for (std::size_t b = 0; b < parts[1].size(); ++b) {
        if (!ab.test(a, b)) continue;
        for (std::size_t c = 0; c < parts[2].size(); ++c) {
          if (bc.test(b, c) && ac.test(a, c) && emit(a, b, c)) return true;
        }
      }
    }
    return false;
  }

  // Sinks of the chosen groups are forced; the pool is their other members
  // compatible with the forced sinks. nullopt when the sinks clash.
  std::optional<std::pair<std::vector<Var>, std::vector<Var>>> forced_and_pool(std::span<const std::size_t> chosen) {
    std::vector<Var> forced;
    for (std::size_t gi : chosen) {
      if (groups_.groups[gi].sink) forced.push_back(*groups_.groups[gi].sink);
    }
    Bitset blocked(inst_.n);
    for (Var s : forced) {
      if (blocked.test(s)) return std::nullopt;
      blocked |= rows_[s];
    }
    std::vector<Var> pool;
    for (std::size_t gi : chosen) {
      for (Var v : groups_.groups[gi].members) {
        if (groups_.groups[gi].sink && v == *groups_.groups[gi].sink) continue;
        if (!blocked.test(v)) pool.push_back(v);
      }
    }
    std::sort(forced.begin(), forced.end());
    std::sort(pool.begin(), pool.end());
    return std::pair{forced, pool};
  }

  Bitset blocked_by(std::span<const Var> forced) const {
    Bitset blocked(inst_.n);
    for (Var s : forced) {
      blocked |= rows_[s];
      blocked.set(s);
    }
    return blocked;
  }

  // Solutions meeting at most two groups.
  bool small_cases() {
    const std::size_t q = groups_.groups.size();
    std::vector<std::vector<std::size_t>> choices;
    for (std::size_t a = 0; a < q; ++a) {
      choices.push_back({a});
      for (std::size_t b = a + 1; b < q; ++b) choices.push_back({a, b});
    }
    for (const auto& chosen : choices) {
      auto fp = forced_and_pool(chosen);
      if (!fp) continue;
      const auto& [forced, pool] = *fp;
      const int need = k_ - static_cast<int>(forced.size());
      if (need < 0 || need > static_cast<int>(pool.size())) continue;
      const auto sizes = near_equal_split(need);
      std::array<std::vector<PartNode>, 3> parts;
      for (int p = 0; p < 3; ++p) {
        NodeBuilder builder(inst_.n, rows_, options_.node_cap);
        std::vector<Var> prefix;
        independent_subsets(pool, sizes[p], rows_, blocked_by(forced), prefix,
                            [&](const std::vector<Var>& vars, const Bitset&) { builder.add(vars); });
        parts[p] = builder.take();
      }
      if (triangle(forced, parts)) return true;
    }
    return false;
  }

  // Solutions meeting at least three groups, with sizes k_1 <= ... <= k_l.
  void large_cases() {
    const std::size_t q = groups_.groups.size();
    std::vector<int> parts;
    auto compositions = [&](auto&& self, int left, int slots, int lo) -> bool {
      if (slots == 0) return left == 0 && with_parts(parts);
      for (int v = lo; v * slots <= left; ++v) {
        parts.push_back(v);
        if (self(self, left - v, slots - 1, v)) return true;
        parts.pop_back();
      }
      return false;
    };
    for (std::size_t l = 3; l <= std::min<std::size_t>(q, static_cast<std::size_t>(k_)); ++l) {
      if (compositions(compositions, k_, static_cast<int>(l), 1)) return;
    }
  }

  bool with_parts(const std::vector<int>& parts) {
    const std::size_t l = parts.size();
    const auto bins = balance_partition(parts);
    std::array<int, 3> load{};
    for (int p = 0; p < 3; ++p) {
      for (std::size_t i : bins[p]) load[p] += parts[i];
    }
    const std::size_t q = groups_.groups.size();
    for (std::size_t g = 0; g < q; ++g) {
      for (std::size_t h = g + 1; h < q; ++h) {
        const std::array<std::size_t, 2> pair{g, h};
        auto fp = forced_and_pool(pair);
        if (!fp) continue;
        const auto& [forced, pool] = *fp;
        const int spare = parts[l - 2] + parts[l - 1] - static_cast<int>(forced.size());
        if (spare < 0 || spare > static_cast<int>(pool.size())) continue;
        // Water-fill the spare vertices into the lightest bins.
        std::array<int, 3> extra{};
        for (int s = 0; s < spare; ++s) {
          int best = 0;
          for (int p = 1; p < 3; ++p) {
            if (load[p] + extra[p] < load[best] + extra[best]) best = p;
          }
          ++extra[best];
        }
        std::array<std::vector<PartNode>, 3> nodes;
        for (int p = 0; p < 3; ++p) nodes[p] = bin_nodes(parts, bins[p], pair, forced, pool, extra[p]);
        if (triangle(forced, nodes)) return true;
      }
    }
    return false;
  }

  std::vector<PartNode> bin_nodes(const std::vector<int>& parts, const std::vector<std::size_t>& bin,
                                  const std::array<std::size_t, 2>& excluded, const std::vector<Var>& forced,
                                  const std::vector<Var>& pool, int extra) {
    NodeBuilder builder(inst_.n, rows_, options_.node_cap);
    std::vector<char> used(groups_.groups.size(), 0);
    used[excluded[0]] = used[excluded[1]] = 1;
    std::vector<Var> prefix;
    auto step = [&](auto&& self, std::size_t idx, const Bitset& blocked) -> void {
      if (idx == bin.size()) {
        independent_subsets(pool, extra, rows_, blocked, prefix,
                            [&](const std::vector<Var>& vars, const Bitset&) { builder.add(vars); });
        return;
      }
      const int size = parts[bin[idx]];
      for (std::size_t gi = 0; gi < groups_.groups.size(); ++gi) {
        const VariableGroup& g = groups_.groups[gi];
        if (used[gi] || static_cast<int>(g.members.size()) < size) continue;
        used[gi] = 1;
        if (g.sink) {
          const Var s = *g.sink;
          if (!blocked.test(s)) {
            Bitset next = blocked;
            next |= rows_[s];
            next.set(s);
            prefix.push_back(s);
            std::vector<Var> ancestors;
            for (Var v : g.members) {
              if (v != s) ancestors.push_back(v);
            }
            independent_subsets(ancestors, size - 1, rows_, std::move(next), prefix,
                                [&](const std::vector<Var>&, const Bitset& b) { self(self, idx + 1, b); });
            prefix.pop_back();
          }
        } else {
          independent_subsets(g.members, size, rows_, blocked, prefix,
                              [&](const std::vector<Var>&, const Bitset& b) { self(self, idx + 1, b); });
        }
        used[gi] = 0;
      }
    };
    step(step, 0, blocked_by(forced));
    return builder.take();
  }
};

}  // namespace

std::vector<NandImplBranch> restrict_instance(const NandImplInstance& inst, int k) {
  std::vector<NandImplBranch> out;
  if (k < 0) return out;
  auto base = prune(inst, k);
  if (!base) return out;
  const NandImplInstance& p = base->instance;
  const Lists lists(p);
  const auto d = all_descendants(lists);
  std::vector<Var> heavy;
  std::vector<char> is_heavy(p.n, 0);
  for (Var v = 0; v < p.n; ++v) {
    if (d[v].size() >= 3) {
      heavy.push_back(v);
      is_heavy[v] = 1;
    }
  }

  // Each branch is the closure C of a set of heavy variables; the heavy
  // variables outside C are false.
  std::set<std::vector<Var>> seen;
  auto emit = [&](const std::vector<Var>& c) {
    std::vector<Var> off;
    for (Var h : heavy) {
      if (!std::binary_search(c.begin(), c.end(), h)) off.push_back(h);
    }
    if (auto b = fix_sets(p, base->k, c, off)) out.push_back(chain(*base, std::move(*b)));
  };
  auto dfs = [&](auto&& self, const std::vector<Var>& c) -> void {
    emit(c);
    for (Var h : heavy) {
      if (std::binary_search(c.begin(), c.end(), h)) continue;
      std::vector<Var> next;
      std::set_union(c.begin(), c.end(), d[h].begin(), d[h].end(), std::back_inserter(next));
      if (static_cast<int>(next.size()) > base->k || !seen.insert(next).second) continue;
      bool nand_free = true;
      for (Var v : next) {
        for (Var w : lists.nand[v]) {
          if (std::binary_search(next.begin(), next.end(), w)) nand_free = false;
        }
      }
      if (nand_free) self(self, next);
    }
  };
  dfs(dfs, {});
  return out;
}

std::vector<NandImplBranch> remove_two_cycles(const NandImplInstance& inst, int k) {
  std::vector<NandImplBranch> out;
  if (k < 0) return out;
  std::set<std::pair<Var, Var>> arcs(inst.impl.begin(), inst.impl.end());
  std::vector<std::pair<Var, Var>> cycles;
  for (auto [x, y] : inst.impl) {
    if (x < y && arcs.count({y, x})) cycles.emplace_back(x, y);
  }
  std::sort(cycles.begin(), cycles.end());
  cycles.erase(std::unique(cycles.begin(), cycles.end()), cycles.end());
  std::vector<Var> all;
  for (auto [x, y] : cycles) {
    all.push_back(x);
    all.push_back(y);
  }
  std::vector<std::size_t> picked;
  auto dfs = [&](auto&& self, std::size_t from) -> void {
    std::vector<Var> on;
    for (std::size_t i : picked) {
      on.push_back(cycles[i].first);
      on.push_back(cycles[i].second);
    }
    std::sort(on.begin(), on.end());
    std::vector<Var> off;
    for (Var v : all) {
      if (!std::binary_search(on.begin(), on.end(), v)) off.push_back(v);
    }
    if (auto b = fix_sets(inst, k, on, off)) out.push_back(std::move(*b));
    if (2 * (picked.size() + 1) > static_cast<std::size_t>(k)) return;
    for (std::size_t i = from; i < cycles.size(); ++i) {
      picked.push_back(i);
      self(self, i + 1);
      picked.pop_back();
    }
  };
  dfs(dfs, 0);
  return out;
}

GroupPartition build_groups(const NandImplInstance& inst) {
  const Lists lists(inst);
  const auto d = all_descendants(lists);
  std::vector<std::size_t> ancestors(inst.n, 1);
  for (Var v = 0; v < inst.n; ++v) {
    if (d[v].size() > 2) throw InvalidArgument("build_groups needs at most two descendants per variable");
    for (Var u : d[v]) {
      if (u != v) ++ancestors[u];
    }
  }
  GroupPartition g;
  std::vector<std::size_t> group_of(inst.n, 0);
  for (Var v = 0; v < inst.n; ++v) {
    if (ancestors[v] >= 2) {
      if (d[v].size() != 1) throw InvalidArgument("build_groups needs an instance without 2-cycles");
      g.right.push_back(v);
      group_of[v] = g.groups.size();
      g.groups.push_back({v, {v}});
    } else if (d[v].size() == 2) {
      g.left.push_back(v);
    } else {
      g.zero.push_back(v);
    }
  }
  for (Var v : g.left) {
    const Var sink = d[v][0] == v ? d[v][1] : d[v][0];
    g.groups[group_of[sink]].members.push_back(v);
  }
  for (auto& grp : g.groups) std::sort(grp.members.begin(), grp.members.end());
  if (!g.zero.empty()) g.groups.push_back({std::nullopt, g.zero});
  return g;
}

std::array<std::vector<std::size_t>, 3> balance_partition(std::span<const int> parts) {
  std::array<std::vector<std::size_t>, 3> bins;
  std::array<long, 3> load{};
  for (std::size_t i = 0; i + 2 < parts.size(); ++i) {
    int best = 0;
    for (int p = 1; p < 3; ++p) {
      if (load[p] < load[best]) best = p;
    }
    bins[best].push_back(i);
    load[best] += parts[i];
  }
  return bins;
}

std::optional<std::vector<Var>> solve_restricted(const NandImplInstance& inst, int k, const NandImplOptions& options) {
  std::optional<std::vector<Var>> found;
  RestrictedSolver solver(inst, k, options, false);
  const RestrictedSolver::Visit visit = [&](std::span<const Var> sol) {
    found.emplace(sol.begin(), sol.end());
    return true;
  };
  solver.run(visit);
  return found;
}

void for_each_restricted_candidate(const NandImplInstance& inst, int k,
                                   const std::function<void(std::span<const Var>)>& visit,
                                   const NandImplOptions& options) {
  RestrictedSolver solver(inst, k, options, true);
  const RestrictedSolver::Visit wrapped = [&](std::span<const Var> sol) {
    visit(sol);
    return false;
  };
  solver.run(wrapped);
}

std::optional<std::vector<Var>> solve_nand_impl(const NandImplInstance& inst, int k, const NandImplOptions& options) {
  if (k < 0 || static_cast<std::size_t>(k) > inst.n) return std::nullopt;
  for (const NandImplBranch& r : restrict_instance(inst, k)) {
    for (const NandImplBranch& c : remove_two_cycles(r.instance, r.k)) {
      auto sol = solve_restricted(c.instance, c.k, options);
      if (!sol) continue;
      std::vector<Var> full = lift(r, lift(c, *sol));
      if (!satisfies(inst, full) || static_cast<int>(full.size()) != k) {
        throw InternalError("NAND/IMPL pipeline produced an invalid assignment");
      }
      return full;
    }
  }
  return std::nullopt;
}

}  // namespace sparsek
