#include "sparsek/turan_greedy.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <span>

namespace sparsek {

bool turan_premise(std::size_t n, std::size_t m, int k) {
  if (k <= 0) return true;
  const Count kk = k;
  return Count(n) >= 4 * kk * kk && 2 * kk * kk * Count(m) <= Count(n) * Count(n);
}

std::optional<std::vector<Vertex>> find_k_is_sparse(const Graph& g, int k, std::vector<GreedyRound>* trace) {
  if (k < 0) return std::nullopt;
  const std::size_t n = g.num_vertices();
  std::vector<char> alive(n, 1);
  std::vector<std::size_t> degree(n);
  for (Vertex v = 0; v < n; ++v) degree[v] = g.degree(v);
  std::size_t vertices = n;
  std::size_t edges = g.num_edges();

  auto remove = [&](Vertex u) {
    alive[u] = 0;
    --vertices;
    for (Vertex w : g.neighbors(u)) {
      if (!alive[w]) continue;
      --degree[w];
      --edges;
    }
  };

  std::vector<Vertex> picked;
  for (int round = 0; round < k; ++round) {
    if (trace) trace->push_back({vertices, edges});
    if (vertices == 0) return std::nullopt;
    Vertex best = 0;
    bool found = false;
    for (Vertex v = 0; v < n; ++v) {
      if (alive[v] && (!found || degree[v] < degree[best])) {
        best = v;
        found = true;
      }
    }
    picked.push_back(best);
    remove(best);
    for (Vertex w : g.neighbors(best)) {
      if (alive[w]) remove(w);
    }
  }
  std::sort(picked.begin(), picked.end());
  if (!is_independent(g, picked)) throw InternalError("greedy produced a dependent set");
  return picked;
}

namespace {

struct LiveConstraint {
  std::uint32_t function;
  std::uint8_t arity;
  bool alive = true;
  std::array<Var, kMaxArity> vars;
};

}  // namespace

bool sparse_csp_premise(const CspInstance& inst, int k) {
  const auto counts = inst.function_counts();
  const auto used = inst.used_functions();
  const Count n = inst.num_variables();
  for (std::uint32_t f : used) {
    const int u = u_min(inst.function(f));
    if (Count(counts[f]) * 2 * k * Count(used.size()) > boost::multiprecision::pow(n, static_cast<unsigned>(u))) {
      return false;
    }
  }
  return true;
}

std::optional<std::vector<Var>> sparse_csp_solve(const CspInstance& inst, int k) {
  for (std::uint32_t f : inst.used_functions()) {
    if (!inst.function(f).zero_valid()) throw InvalidArgument("sparse CSP solver needs 0-valid functions");
  }
  const std::size_t n = inst.num_variables();
  if (k < 0 || static_cast<std::size_t>(k) > n) return std::nullopt;
  if (!sparse_csp_premise(inst, k)) return std::nullopt;

  // Specialized functions are interned by table so the family stays small.
  std::vector<ConstraintFunction> table(inst.functions().begin(), inst.functions().end());
  std::map<std::pair<int, std::uint64_t>, std::uint32_t> by_key;
  for (std::uint32_t i = 0; i < table.size(); ++i) by_key.emplace(std::pair{table[i].arity(), table[i].table()}, i);
  auto intern = [&](const ConstraintFunction& f) {
    auto [it, fresh] = by_key.emplace(std::pair{f.arity(), f.table()}, static_cast<std::uint32_t>(table.size()));
    if (fresh) table.push_back(f);
    return it->second;
  };

  const auto constraints = inst.constraints();
  std::vector<LiveConstraint> live(constraints.size());
  std::vector<std::uint32_t> offset(n + 1, 0);
  for (std::size_t i = 0; i < constraints.size(); ++i) {
    const Constraint& c = constraints[i];
    live[i].function = c.function;
    live[i].arity = static_cast<std::uint8_t>(c.vars.size());
    std::copy(c.vars.begin(), c.vars.end(), live[i].vars.begin());
    for (Var v : c.vars) ++offset[v + 1];
  }
  for (std::size_t v = 0; v < n; ++v) offset[v + 1] += offset[v];
  std::vector<std::uint32_t> incident(offset[n]);
  {
    std::vector<std::uint32_t> fill(offset.begin(), offset.end() - 1);
    for (std::size_t i = 0; i < constraints.size(); ++i) {
      for (Var v : constraints[i].vars) incident[fill[v]++] = static_cast<std::uint32_t>(i);
    }
  }
  auto incident_to = [&](Var v) {
    return std::span<const std::uint32_t>(incident.data() + offset[v], offset[v + 1] - offset[v]);
  };

  std::vector<char> alive(n, 1);
  std::size_t remaining = n;
  std::vector<Var> chosen;
  std::vector<int> umin_cache;
  std::vector<std::size_t> count;
  std::vector<std::uint32_t> local;
  std::vector<std::uint32_t> touched;
  __extension__ typedef unsigned __int128 Wide;

  for (int round = 0; round < k; ++round) {
    umin_cache.resize(table.size());
    for (std::size_t i = 0; i < table.size(); ++i) umin_cache[i] = u_min(table[i]);
    count.assign(table.size(), 0);
    for (const auto& c : live) {
      if (c.alive) ++count[c.function];
    }
    std::size_t family = 0;
    for (auto m : count) family += m > 0 ? 1 : 0;
    local.assign(table.size(), 0);

    // A variable qualifies when, for each function f around it, it lies in at
    // most |F| m_f / n' of the f-constraints and u_min(f) >= 2.
    std::optional<Var> pick;
    for (Var v = 0; v < n && !pick; ++v) {
      if (!alive[v]) continue;
      touched.clear();
      for (std::uint32_t ci : incident_to(v)) {
        if (!live[ci].alive) continue;
        const auto f = live[ci].function;
        if (local[f]++ == 0) touched.push_back(f);
      }
      bool ok = true;
      for (auto f : touched) {
        if (umin_cache[f] <= 1 || Wide(local[f]) * remaining > Wide(family) * count[f]) ok = false;
        local[f] = 0;
      }
      if (ok) pick = v;
    }
    if (!pick) return std::nullopt;

    const Var v = *pick;
    for (std::uint32_t ci : incident_to(v)) {
      LiveConstraint& c = live[ci];
      if (!c.alive) continue;
      const auto pos = static_cast<int>(std::find(c.vars.begin(), c.vars.begin() + c.arity, v) - c.vars.begin());
      const Specialized s = specialize(table[c.function], pos, true);
      if (s.droppable) {
        c.alive = false;
        continue;
      }
      if (!s.function.zero_valid()) return std::nullopt;
      c.function = intern(s.function);
      std::copy(c.vars.begin() + pos + 1, c.vars.begin() + c.arity, c.vars.begin() + pos);
      --c.arity;
    }
    alive[v] = 0;
    --remaining;
    chosen.push_back(v);
  }
  std::sort(chosen.begin(), chosen.end());
  if (!inst.satisfied_by(chosen)) throw InternalError("sparse CSP solver produced an invalid assignment");
  return chosen;
}

}  // namespace sparsek
