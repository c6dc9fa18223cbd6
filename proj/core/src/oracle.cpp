#include "sparsek/oracle.hpp"

#include <algorithm>
#include <functional>

namespace sparsek::oracle {

namespace {

using Mask = std::vector<std::uint64_t>;

Mask mask_of(std::size_t n, std::span<const Vertex> vs) {
  Mask m((n + 63) / 64 + 1, 0);
  for (Vertex v : vs) m[v >> 6] |= std::uint64_t{1} << (v & 63);
  return m;
}

bool subset_of(const Mask& a, const Mask& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] & ~b[i]) return false;
  }
  return true;
}

bool meets(const Mask& a, const Mask& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] & b[i]) return true;
  }
  return false;
}

void guard(std::size_t n, int k, std::uint64_t cap) {
  if (k < 0) return;
  if (binomial(n, static_cast<std::uint64_t>(k)) > Count(cap)) {
    throw ResourceLimit("oracle: C(" + std::to_string(n) + "," + std::to_string(k) + ") exceeds the cap");
  }
}

// Calls visit(indices, mask) on every k-subset of 0..n-1 in lexicographic
// order; stops when visit returns false.
void for_each_subset(std::size_t n, int k, const std::function<bool(const std::vector<Vertex>&, const Mask&)>& visit) {
  if (k < 0 || static_cast<std::size_t>(k) > n) return;
  std::vector<Vertex> idx(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) idx[i] = static_cast<Vertex>(i);
  Mask m((n + 63) / 64 + 1, 0);
  while (true) {
    std::fill(m.begin(), m.end(), 0);
    for (Vertex v : idx) m[v >> 6] |= std::uint64_t{1} << (v & 63);
    if (!visit(idx, m)) return;
    int i = k - 1;
    while (i >= 0 && idx[i] == n - static_cast<std::size_t>(k - i)) --i;
    if (i < 0) return;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

struct EdgeMasks {
  std::vector<Mask> pairs;
  std::vector<Mask> high;
  std::vector<std::size_t> high_index;
};

EdgeMasks split_edges(const Hypergraph& h) {
  EdgeMasks out;
  for (std::size_t i = 0; i < h.num_edges(); ++i) {
    const Edge& e = h.edge(i);
    Mask m = mask_of(h.num_vertices(), std::span<const Vertex>(e.begin(), e.size()));
    if (e.size() == 2) {
      out.pairs.push_back(std::move(m));
    } else {
      out.high.push_back(std::move(m));
      out.high_index.push_back(i);
    }
  }
  return out;
}

bool none_inside(const std::vector<Mask>& edges, const Mask& x) {
  for (const auto& e : edges) {
    if (subset_of(e, x)) return false;
  }
  return true;
}

}  // namespace

Count brute_count_k_is(const Hypergraph& h, int k, std::uint64_t cap) {
  guard(h.num_vertices(), k, cap);
  if (k == 0) return 1;
  const EdgeMasks em = split_edges(h);
  std::uint64_t count = 0;
  for_each_subset(h.num_vertices(), k, [&](const std::vector<Vertex>&, const Mask& x) {
    if (none_inside(em.pairs, x) && none_inside(em.high, x)) ++count;
    return true;
  });
  return count;
}

std::optional<std::vector<Vertex>> brute_find_k_is(const Hypergraph& h, int k, std::uint64_t cap) {
  guard(h.num_vertices(), k, cap);
  if (k == 0) return std::vector<Vertex>{};
  const EdgeMasks em = split_edges(h);
  std::optional<std::vector<Vertex>> found;
  for_each_subset(h.num_vertices(), k, [&](const std::vector<Vertex>& idx, const Mask& x) {
    if (none_inside(em.pairs, x) && none_inside(em.high, x)) {
      found = idx;
      return false;
    }
    return true;
  });
  return found;
}

Count brute_count_invalid(const Hypergraph& h, int k, std::uint64_t cap) {
  guard(h.num_vertices(), k, cap);
  const EdgeMasks em = split_edges(h);
  std::uint64_t count = 0;
  for_each_subset(h.num_vertices(), k, [&](const std::vector<Vertex>&, const Mask& x) {
    if (none_inside(em.pairs, x) && !none_inside(em.high, x)) ++count;
    return true;
  });
  return count;
}

Count brute_restricted_term(const Hypergraph& h, std::span<const std::size_t> matching, int k,
                            std::uint64_t cap) {
  guard(h.num_vertices(), k, cap);
  const EdgeMasks em = split_edges(h);
  std::vector<Mask> s_masks;
  for (std::size_t i : matching) {
    const Edge& e = h.edge(i);
    s_masks.push_back(mask_of(h.num_vertices(), std::span<const Vertex>(e.begin(), e.size())));
  }
  std::uint64_t count = 0;
  for_each_subset(h.num_vertices(), k, [&](const std::vector<Vertex>&, const Mask& x) {
    if (!none_inside(em.pairs, x)) return true;
    for (const auto& s : s_masks) {
      if (!subset_of(s, x)) return true;
    }
    for (std::size_t si = 0; si < matching.size(); ++si) {
      for (std::size_t hi = 0; hi < em.high.size(); ++hi) {
        if (em.high_index[hi] < matching[si] && meets(em.high[hi], s_masks[si]) &&
            subset_of(em.high[hi], x)) {
          return true;
        }
      }
    }
    ++count;
    return true;
  });
  return count;
}

Count brute_count_k_cliques(const Graph& g, int k, std::uint64_t cap) {
  guard(g.num_vertices(), k, cap);
  if (k == 0) return 1;
  std::uint64_t count = 0;
  for_each_subset(g.num_vertices(), k, [&](const std::vector<Vertex>& idx, const Mask&) {
    for (std::size_t i = 0; i < idx.size(); ++i) {
      for (std::size_t j = i + 1; j < idx.size(); ++j) {
        const auto nb = g.neighbors(idx[i]);
        if (!std::binary_search(nb.begin(), nb.end(), idx[j])) return true;
      }
    }
    ++count;
    return true;
  });
  return count;
}

Count brute_count_k_is(const Graph& g, int k, std::uint64_t cap) {
  guard(g.num_vertices(), k, cap);
  if (k == 0) return 1;
  std::uint64_t count = 0;
  for_each_subset(g.num_vertices(), k, [&](const std::vector<Vertex>& idx, const Mask&) {
    for (std::size_t i = 0; i < idx.size(); ++i) {
      for (std::size_t j = i + 1; j < idx.size(); ++j) {
        const auto nb = g.neighbors(idx[i]);
        if (std::binary_search(nb.begin(), nb.end(), idx[j])) return true;
      }
    }
    ++count;
    return true;
  });
  return count;
}

namespace {

bool csp_holds(const CspInstance& inst, const Mask& x) {
  for (const auto& c : inst.constraints()) {
    std::uint64_t row = 0;
    for (std::size_t p = 0; p < c.vars.size(); ++p) {
      const Var v = c.vars[p];
      if ((x[v >> 6] >> (v & 63)) & 1U) row |= std::uint64_t{1} << p;
    }
    if (!((inst.function_of(c).table() >> row) & 1U)) return false;
  }
  return true;
}

}  // namespace

std::optional<std::vector<Var>> brute_solve_csp(const CspInstance& inst, int k, std::uint64_t cap) {
  guard(inst.num_variables(), k, cap);
  std::optional<std::vector<Var>> found;
  if (k == 0) {
    Mask none((inst.num_variables() + 63) / 64 + 1, 0);
    if (csp_holds(inst, none)) found = std::vector<Var>{};
    return found;
  }
  for_each_subset(inst.num_variables(), k, [&](const std::vector<Vertex>& idx, const Mask& x) {
    if (csp_holds(inst, x)) {
      found = idx;
      return false;
    }
    return true;
  });
  return found;
}

std::vector<std::vector<Var>> brute_all_solutions(const CspInstance& inst, int k, std::uint64_t cap) {
  guard(inst.num_variables(), k, cap);
  std::vector<std::vector<Var>> out;
  if (k == 0) {
    Mask none((inst.num_variables() + 63) / 64 + 1, 0);
    if (csp_holds(inst, none)) out.push_back({});
    return out;
  }
  for_each_subset(inst.num_variables(), k, [&](const std::vector<Vertex>& idx, const Mask& x) {
    if (csp_holds(inst, x)) out.push_back(idx);
    return true;
  });
  return out;
}

bool brute_has_colorful_is(const Hypergraph& h, std::span<const std::vector<Vertex>> parts, std::uint64_t cap) {
  Count total = 1;
  for (const auto& p : parts) total *= p.size();
  if (total > Count(cap)) throw ResourceLimit("oracle: too many colorful tuples");
  const EdgeMasks em = split_edges(h);
  std::vector<std::size_t> pick(parts.size(), 0);
  for (const auto& p : parts) {
    if (p.empty()) return false;
  }
  while (true) {
    std::vector<Vertex> chosen;
    for (std::size_t i = 0; i < parts.size(); ++i) chosen.push_back(parts[i][pick[i]]);
    const Mask x = mask_of(h.num_vertices(), chosen);
    if (none_inside(em.pairs, x) && none_inside(em.high, x)) return true;
    std::size_t i = 0;
    while (i < parts.size() && ++pick[i] == parts[i].size()) {
      pick[i] = 0;
      ++i;
    }
    if (i == parts.size()) return false;
  }
}

}  // namespace sparsek::oracle
