#include "sparsek/csp_core.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "sparsek/turan_greedy.hpp"

namespace sparsek {

std::string to_string(const Regime& r) {
  switch (r.kind) {
    case RegimeKind::Linear:
      return "Linear";
    case RegimeKind::Subexponential:
      return "Subexponential";
    case RegimeKind::Kis:
      return "KIS";
    case RegimeKind::Clique:
      return "Clique(" + std::to_string(r.offset) + ")";
  }
  return "?";
}

Regime classify_binary_family(std::span<const ConstraintFunction> family) {
  bool nand = false;
  bool impl = false;
  int offset = 3;
  bool others = false;
  for (const ConstraintFunction& f : family) {
    if (f.arity() > 2) throw InvalidArgument("classification needs functions of arity <= 2");
    if (f.constant_true()) continue;
    const BinaryShape shape = recognize_binary(f).shape;
    if (shape == BinaryShape::Nand) {
      nand = true;
      continue;
    }
    if (shape == BinaryShape::Impl) impl = true;
    others = true;
    offset = std::min(offset, s_min(f));
  }
  if (nand) {
    if (!others) return {RegimeKind::Kis, 0};
    return {RegimeKind::Clique, std::min(offset, 2)};
  }
  if (impl) return {RegimeKind::Subexponential, 0};
  return {RegimeKind::Linear, 0};
}

Regime classify_instance(const CspInstance& inst) {
  std::vector<ConstraintFunction> family;
  for (std::uint32_t f : inst.used_functions()) family.push_back(inst.function(f));
  return classify_binary_family(family);
}

namespace {

std::vector<std::vector<Var>> out_lists(std::size_t n, std::span<const std::pair<Var, Var>> arcs) {
  std::vector<std::vector<Var>> adj(n);
  for (auto [x, y] : arcs) {
    if (x >= n || y >= n) throw InvalidArgument("implication arc out of range");
    adj[x].push_back(y);
  }
  return adj;
}

// Reachable set from v (including v), stopping once it exceeds `cap`.
std::vector<Var> reach(const std::vector<std::vector<Var>>& adj, Var v, std::size_t cap,
                       std::vector<std::uint32_t>& stamp, std::uint32_t& generation) {
  ++generation;
  std::vector<Var> out{v};
  stamp[v] = generation;
  for (std::size_t i = 0; i < out.size() && out.size() <= cap; ++i) {
    for (Var w : adj[out[i]]) {
      if (stamp[w] == generation) continue;
      stamp[w] = generation;
      out.push_back(w);
    }
  }
  return out;
}

// Mutable copy of an instance supporting "fix a variable and propagate".
class Workspace {
 public:
  Workspace(const CspInstance& inst, int k)
      : n_(inst.num_variables()), k_(k), value_(n_, -1), incident_(n_) {
    if (k < 0) ok_ = false;
    for (const Constraint& c : inst.constraints()) {
      const auto idx = static_cast<std::uint32_t>(live_.size());
      live_.push_back({inst.function_of(c), c.vars, true});
      for (Var v : c.vars) incident_[v].push_back(idx);
    }
    for (std::size_t i = 0; i < live_.size() && ok_; ++i) enqueue_forced(i);
    drain();
  }

  bool ok() const { return ok_; }

  bool fix(Var v, bool value) {
    if (!ok_) return false;
    queue_.emplace_back(v, value);
    drain();
    return ok_;
  }

  std::optional<std::size_t> first_zero_invalid() const {
    for (std::size_t i = 0; i < live_.size(); ++i) {
      if (live_[i].alive && !live_[i].function.zero_valid()) return i;
    }
    return std::nullopt;
  }

  std::vector<Var> vars_of(std::size_t c) const { return live_[c].vars; }

  Reduced extract() const {
    Reduced r;
    r.k = k_ - trues_;
    std::vector<Var> relabel(n_, 0);
    for (Var v = 0; v < n_; ++v) {
      if (value_[v] < 0) {
        relabel[v] = static_cast<Var>(r.origin.size());
        r.origin.push_back(v);
      } else if (value_[v] == 1) {
        r.forced_true.push_back(v);
      }
    }
    r.instance = CspInstance(r.origin.size());
    for (const auto& c : live_) {
      if (!c.alive) continue;
      std::vector<Var> vars;
      vars.reserve(c.vars.size());
      for (Var v : c.vars) vars.push_back(relabel[v]);
      r.instance.add_constraint(c.function, std::move(vars));
    }
    return r;
  }

 private:
  struct Live {
    ConstraintFunction function;
    std::vector<Var> vars;
    bool alive;
  };

  std::size_t n_;
  int k_;
  int trues_ = 0;
  bool ok_ = true;
  std::vector<int> value_;
  std::vector<Live> live_;
  std::vector<std::vector<std::uint32_t>> incident_;
  std::vector<std::pair<Var, bool>> queue_;

  void enqueue_forced(std::size_t ci) {
    const Live& c = live_[ci];
    if (c.function.constant_false()) {
      ok_ = false;
      return;
    }
    const std::uint32_t zeros = forced_false_positions(c.function);
    const std::uint32_t ones = forced_true_positions(c.function);
    for (std::size_t p = 0; p < c.vars.size(); ++p) {
      if ((zeros >> p) & 1U) queue_.emplace_back(c.vars[p], false);
      if ((ones >> p) & 1U) queue_.emplace_back(c.vars[p], true);
    }
  }

  void drain() {
    while (ok_ && !queue_.empty()) {
      auto [v, value] = queue_.back();
      queue_.pop_back();
      assign(v, value);
    }
    queue_.clear();
  }

  void assign(Var v, bool value) {
    if (value_[v] >= 0) {
      if (value_[v] != static_cast<int>(value)) ok_ = false;
      return;
    }
    value_[v] = value ? 1 : 0;
    if (value && ++trues_ > k_) {
      ok_ = false;
      return;
    }
    for (std::uint32_t ci : incident_[v]) {
      Live& c = live_[ci];
      if (!c.alive) continue;
      const auto pos = std::find(c.vars.begin(), c.vars.end(), v) - c.vars.begin();
      Specialized s = specialize(c.function, static_cast<int>(pos), value);
      if (s.droppable) {
        c.alive = false;
        continue;
      }
      c.function = std::move(s.function);
      c.vars.erase(c.vars.begin() + pos);
      enqueue_forced(ci);
      if (!ok_) return;
    }
  }
};

void branch(const Workspace& w, std::vector<Reduced>& out) {
  if (!w.ok()) return;
  const auto c = w.first_zero_invalid();
  if (!c) {
    out.push_back(w.extract());
    return;
  }
  // Branch i sets the first i variables of the violated constraint false and
  // variable i true, so the branches are disjoint.
  const std::vector<Var> vars = w.vars_of(*c);
  for (std::size_t i = 0; i < vars.size(); ++i) {
    Workspace b = w;
    bool ok = true;
    for (std::size_t j = 0; j < i && ok; ++j) ok = b.fix(vars[j], false);
    if (ok) ok = b.fix(vars[i], true);
    if (ok) branch(b, out);
  }
}

std::vector<std::vector<Var>> nand_lists(const CspInstance& inst) {
  std::vector<std::vector<Var>> adj(inst.num_variables());
  for (const Constraint& c : inst.constraints()) {
    const auto& f = inst.function_of(c);
    if (f.arity() != 2 || recognize_binary(f).shape != BinaryShape::Nand) continue;
    adj[c.vars[0]].push_back(c.vars[1]);
    adj[c.vars[1]].push_back(c.vars[0]);
  }
  return adj;
}

bool is_nand_of_arity(const ConstraintFunction& f) {
  return f.arity() >= 2 && f.same_function(functions::nand(f.arity()));
}

std::vector<Var> isolated_variables(const CspInstance& inst) {
  std::vector<char> used(inst.num_variables(), 0);
  for (const Constraint& c : inst.constraints()) {
    for (Var v : c.vars) used[v] = 1;
  }
  std::vector<Var> out;
  for (Var v = 0; v < inst.num_variables(); ++v) {
    if (!used[v]) out.push_back(v);
  }
  return out;
}

// Implication-closed sets of size exactly k, built as unions of closures.
std::optional<std::vector<Var>> closure_search(const CspInstance& inst, int k, std::size_t cap) {
  auto pruned = impl_prune(inst, k);
  if (!pruned) return std::nullopt;
  const CspInstance& p = pruned->instance;
  const auto kp = static_cast<std::size_t>(pruned->k);
  const std::size_t n = p.num_variables();
  const auto adj = out_lists(n, implication_arcs(p));
  std::vector<std::uint32_t> stamp(n, 0);
  std::uint32_t generation = 0;
  std::vector<std::vector<Var>> closure(n);
  for (Var v = 0; v < n; ++v) {
    closure[v] = reach(adj, v, n, stamp, generation);
    std::sort(closure[v].begin(), closure[v].end());
  }
  const std::vector<Var> free = isolated_variables(p);
  std::vector<char> is_free(n, 0);
  for (Var v : free) is_free[v] = 1;

  std::set<std::vector<Var>> seen;
  std::optional<std::vector<Var>> found;
  auto complete = [&](const std::vector<Var>& set) {
    std::vector<Var> sol = set;
    for (std::size_t i = 0; sol.size() < kp; ++i) sol.push_back(free[i]);
    std::sort(sol.begin(), sol.end());
    found = pruned->lift(sol);
  };
  auto dfs = [&](auto&& self, const std::vector<Var>& set) -> bool {
    if (set.size() + free.size() >= kp) {
      complete(set);
      return true;
    }
    for (Var v = 0; v < n; ++v) {
      if (is_free[v] || std::binary_search(set.begin(), set.end(), v)) continue;
      std::vector<Var> next;
      std::set_union(set.begin(), set.end(), closure[v].begin(), closure[v].end(), std::back_inserter(next));
      if (next.size() > kp || !seen.insert(next).second) continue;
      if (seen.size() > cap) throw ResourceLimit("closure search exceeded its state cap");
      if (self(self, next)) return true;
    }
    return false;
  };
  dfs(dfs, {});
  return found;
}

std::optional<std::vector<Var>> backtrack_search(const CspInstance& inst, int k, std::size_t cap) {
  const std::size_t n = inst.num_variables();
  std::vector<std::vector<std::uint32_t>> closing(n);  // constraints whose last variable is v
  for (std::size_t i = 0; i < inst.num_constraints(); ++i) {
    const auto& vars = inst.constraints()[i].vars;
    closing[*std::max_element(vars.begin(), vars.end())].push_back(static_cast<std::uint32_t>(i));
  }
  std::vector<char> value(n, 0);
  auto holds = [&](std::uint32_t ci) {
    const Constraint& c = inst.constraints()[ci];
    std::uint64_t row = 0;
    for (std::size_t p = 0; p < c.vars.size(); ++p) {
      if (value[c.vars[p]]) row |= std::uint64_t{1} << p;
    }
    return inst.function_of(c).at(row);
  };
  auto decided_ok = [&](Var lo, Var hi) {
    for (Var v = lo; v < hi; ++v) {
      for (std::uint32_t ci : closing[v]) {
        if (!holds(ci)) return false;
      }
    }
    return true;
  };
  std::size_t nodes = 0;
  std::vector<Var> chosen;
  auto dfs = [&](auto&& self, Var from, int left) -> bool {
    if (++nodes > cap) throw ResourceLimit("backtracking search exceeded its node cap");
    if (left == 0) return decided_ok(from, static_cast<Var>(n));
    for (Var v = from; v + static_cast<Var>(left) <= n; ++v) {
      if (v > from && !decided_ok(v - 1, v)) return false;
      value[v] = 1;
      chosen.push_back(v);
      if (decided_ok(v, v + 1) && self(self, v + 1, left - 1)) return true;
      chosen.pop_back();
      value[v] = 0;
    }
    return false;
  };
  if (dfs(dfs, 0, k)) return chosen;
  return std::nullopt;
}

struct LeafResult {
  std::optional<std::vector<Var>> solution;
  std::string route;
};

LeafResult solve_leaf(const CspInstance& inst, int k, const CspSolveOptions& options) {
  const std::size_t n = inst.num_variables();
  if (k == 0) return {std::vector<Var>{}, "trivial"};
  if (static_cast<std::size_t>(k) > n) return {std::nullopt, "trivial"};
  if (inst.num_constraints() == 0) {
    std::vector<Var> sol(static_cast<std::size_t>(k));
    std::iota(sol.begin(), sol.end(), Var{0});
    return {sol, "free"};
  }

  if (inst.max_arity() <= 2) {
    bool nand = false;
    bool impl = false;
    bool eq = false;
    for (std::uint32_t f : inst.used_functions()) {
      switch (recognize_binary(inst.function(f)).shape) {
        case BinaryShape::Nand:
          nand = true;
          break;
        case BinaryShape::Impl:
          impl = true;
          break;
        case BinaryShape::Eq:
          eq = true;
          break;
        default:
          throw InternalError("unexpected constraint left after preprocessing");
      }
    }
    if (!nand && !impl) return {eq_components_subset_sum(inst, k), "subset-sum"};
    if (!nand) return {closure_search(inst, k, options.search_cap), "closure-search"};
    if (!impl && !eq) {
      std::vector<std::pair<Vertex, Vertex>> pairs;
      std::vector<Edge> edges;
      for (const Constraint& c : inst.constraints()) {
        pairs.emplace_back(c.vars[0], c.vars[1]);
        edges.push_back(Edge{c.vars[0], c.vars[1]});
      }
      const Graph g(n, pairs);
      if (turan_premise(n, g.num_edges(), k)) return {find_k_is_sparse(g, k), "turan"};
      const KisDecision d = decide_k_is(Hypergraph::with_unique_edges(n, edges), k, true, options.kis);
      return {d.witness, "kis"};
    }
    NandImplInstance ni{n, {}, {}};
    for (const Constraint& c : inst.constraints()) {
      const BinaryShapeInfo info = recognize_binary(inst.function_of(c));
      if (info.shape == BinaryShape::Nand) {
        ni.nand.emplace_back(c.vars[0], c.vars[1]);
      } else if (info.shape == BinaryShape::Impl) {
        ni.impl.emplace_back(c.vars[info.position], c.vars[1 - info.position]);
      } else {
        ni.impl.emplace_back(c.vars[0], c.vars[1]);
        ni.impl.emplace_back(c.vars[1], c.vars[0]);
      }
    }
    return {solve_nand_impl(ni, k, options.nand_impl), "nand-impl"};
  }

  bool all_nand = true;
  for (std::uint32_t f : inst.used_functions()) all_nand = all_nand && is_nand_of_arity(inst.function(f));
  if (all_nand) {
    std::vector<Edge> edges;
    for (const Constraint& c : inst.constraints()) edges.emplace_back(std::span<const Var>(c.vars));
    const KisDecision d = decide_k_is(Hypergraph::with_unique_edges(n, edges), k, true, options.kis);
    return {d.witness, "hypergraph-kis"};
  }
  if (auto sol = sparse_csp_solve(inst, k)) return {sol, "sparse-greedy"};
  return {backtrack_search(inst, k, options.search_cap), "backtrack"};
}

}  // namespace

std::vector<Var> Reduced::lift(std::span<const Var> solution) const {
  std::vector<Var> out = forced_true;
  for (Var v : solution) out.push_back(origin.at(v));
  std::sort(out.begin(), out.end());
  return out;
}

Reduced identity_reduction(const CspInstance& inst, int k) {
  Reduced r;
  r.instance = inst;
  r.origin.resize(inst.num_variables());
  std::iota(r.origin.begin(), r.origin.end(), Var{0});
  r.k = k;
  return r;
}

Reduced compose(const Reduced& outer, const Reduced& inner) {
  Reduced r;
  r.instance = inner.instance;
  r.k = inner.k;
  for (Var v : inner.origin) r.origin.push_back(outer.origin.at(v));
  r.forced_true = outer.forced_true;
  for (Var v : inner.forced_true) r.forced_true.push_back(outer.origin.at(v));
  std::sort(r.forced_true.begin(), r.forced_true.end());
  return r;
}

ImplStructure compute_impl_structure(std::size_t n, std::span<const std::pair<Var, Var>> arcs) {
  const auto adj = out_lists(n, arcs);
  ImplStructure s;
  s.descendants.resize(n);
  s.ancestors.resize(n);
  std::vector<std::uint32_t> stamp(n, 0);
  std::uint32_t generation = 0;
  for (Var v = 0; v < n; ++v) {
    s.descendants[v] = reach(adj, v, n, stamp, generation);
    std::sort(s.descendants[v].begin(), s.descendants[v].end());
    for (Var u : s.descendants[v]) s.ancestors[u].push_back(v);
  }
  return s;
}

std::vector<std::pair<Var, Var>> implication_arcs(const CspInstance& inst) {
  std::vector<std::pair<Var, Var>> arcs;
  for (const Constraint& c : inst.constraints()) {
    const auto& f = inst.function_of(c);
    if (f.arity() != 2) continue;
    const BinaryShapeInfo info = recognize_binary(f);
    if (info.shape == BinaryShape::Impl) {
      arcs.emplace_back(c.vars[info.position], c.vars[1 - info.position]);
    } else if (info.shape == BinaryShape::Eq) {
      arcs.emplace_back(c.vars[0], c.vars[1]);
      arcs.emplace_back(c.vars[1], c.vars[0]);
    }
  }
  return arcs;
}

std::optional<Reduced> preprocess_easy(const CspInstance& inst, int k) {
  Workspace w(inst, k);
  if (!w.ok()) return std::nullopt;
  return w.extract();
}

std::vector<Reduced> branch_and_bound(const CspInstance& inst, int k) {
  std::vector<Reduced> out;
  branch(Workspace(inst, k), out);
  return out;
}

std::optional<std::vector<Var>> eq_components_subset_sum(const CspInstance& inst, int k) {
  const std::size_t n = inst.num_variables();
  std::vector<Var> parent(n);
  std::iota(parent.begin(), parent.end(), Var{0});
  auto find = [&](Var v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (const Constraint& c : inst.constraints()) {
    const auto& f = inst.function_of(c);
    if (f.arity() != 2 || recognize_binary(f).shape != BinaryShape::Eq) {
      throw InvalidArgument("subset-sum route needs EQ constraints only");
    }
    parent[find(c.vars[0])] = find(c.vars[1]);
  }
  if (k < 0) return std::nullopt;
  std::vector<std::vector<Var>> members(n);
  for (Var v = 0; v < n; ++v) members[find(v)].push_back(v);

  // Components heavier than k never fit, and more than k / w copies of
  // weight w are never needed.
  const auto target = static_cast<std::size_t>(k);
  std::vector<std::size_t> taken(target + 1, 0);
  std::vector<Var> items;
  for (Var r = 0; r < n; ++r) {
    const std::size_t w = members[r].size();
    if (w == 0 || w > target || taken[w] >= target / w) continue;
    ++taken[w];
    items.push_back(r);
  }
  constexpr std::size_t kUnreached = static_cast<std::size_t>(-1);
  std::vector<std::size_t> via(target + 1, kUnreached);
  via[0] = items.size();
  for (std::size_t i = 0; i < items.size(); ++i) {
    const std::size_t w = members[items[i]].size();
    for (std::size_t s = target; s >= w; --s) {
      if (via[s] == kUnreached && via[s - w] != kUnreached) via[s] = i;
      if (s == w) break;
    }
  }
  if (via[target] == kUnreached) return std::nullopt;
  std::vector<Var> sol;
  for (std::size_t s = target; s > 0;) {
    const auto& group = members[items[via[s]]];
    sol.insert(sol.end(), group.begin(), group.end());
    s -= group.size();
  }
  std::sort(sol.begin(), sol.end());
  return sol;
}

std::optional<Reduced> impl_prune(const CspInstance& inst, int k) {
  Workspace w(inst, k);
  if (!w.ok()) return std::nullopt;
  const std::size_t n = inst.num_variables();
  const auto adj = out_lists(n, implication_arcs(inst));
  const auto nand = nand_lists(inst);
  std::vector<std::uint32_t> stamp(n, 0);
  std::uint32_t generation = 0;
  const auto limit = static_cast<std::size_t>(std::max(k, 0));
  for (Var v = 0; v < n; ++v) {
    const std::vector<Var> d = reach(adj, v, limit, stamp, generation);
    bool drop = d.size() > limit;
    for (std::size_t i = 0; i < d.size() && !drop; ++i) {
      for (Var u : nand[d[i]]) {
        if (stamp[u] == generation) {
          drop = true;
          break;
        }
      }
    }
    // Fixing v false propagates to everything that implies v.
    if (drop && !w.fix(v, false)) return std::nullopt;
  }
  return w.extract();
}

CspSolution solve_csp(const CspInstance& inst, int k, const CspSolveOptions& options) {
  CspSolution out;
  const std::size_t n = inst.num_variables();
  if (inst.max_arity() <= 2) out.regime = classify_instance(inst);
  if (k < 0 || static_cast<std::size_t>(k) > n) {
    out.route = "trivial";
    return out;
  }
  auto accept = [&](std::vector<Var> sol, std::string route) {
    std::sort(sol.begin(), sol.end());
    if (sol.size() != static_cast<std::size_t>(k) || std::adjacent_find(sol.begin(), sol.end()) != sol.end() ||
        !inst.satisfied_by(sol)) {
      throw InternalError("solver route '" + route + "' produced an invalid assignment");
    }
    out.satisfiable = true;
    out.assignment = std::move(sol);
    out.route = std::move(route);
    return out;
  };

  const std::vector<Reduced> leaves = branch_and_bound(inst, k);
  if (leaves.empty()) {
    out.route = "branch-and-bound";
    return out;
  }
  const Count budget = Count(inst.num_constraints()) * 2 * k * Count(inst.used_functions().size());
  if (budget < Count(n)) {
    for (const Reduced& leaf : leaves) {
      const std::vector<Var> free = isolated_variables(leaf.instance);
      if (free.size() >= static_cast<std::size_t>(leaf.k)) {
        return accept(leaf.lift(std::span(free).first(static_cast<std::size_t>(leaf.k))), "isolated");
      }
    }
  }
  for (const Reduced& leaf : leaves) {
    LeafResult r = solve_leaf(leaf.instance, leaf.k, options);
    if (out.route.empty()) out.route = r.route;
    if (r.solution) return accept(leaf.lift(*r.solution), r.route);
  }
  return out;
}

}  // namespace sparsek
