#include "sparsek/reductions.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>

namespace sparsek {
namespace {

std::size_t ceil_pow(double base, double exponent) {
  if (base <= 1.0) return 1;
  // Nudge down before rounding up so exact powers do not gain one.
  return static_cast<std::size_t>(std::ceil(std::pow(base, exponent) - 1e-9));
}

template <class F>
void for_each_combination(std::size_t n, std::size_t r, F&& f) {
  if (r > n) return;
  std::vector<std::size_t> idx(r);
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  while (true) {
    f(std::span<const std::size_t>(idx));
    std::size_t i = r;
    while (i > 0 && idx[i - 1] == n - r + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < r; ++j) idx[j] = idx[j - 1] + 1;
  }
}

bool is_nand_instance(const CspInstance& inst, int arity) {
  const ConstraintFunction nand = functions::nand(arity);
  for (std::uint32_t f : inst.used_functions()) {
    if (!inst.function(f).same_function(nand)) return false;
  }
  return true;
}

// Collects gadget tuples, dropping repeats.
class TupleSet {
 public:
  void add_block(const ConstraintFunction& f, std::span<const Var> block) {
    const auto g = build_less_than(f, static_cast<int>(block.size()), block);
    for (const auto& t : g.tuples) tuples_.insert(t);
  }
  void emit(CspInstance& out, const ConstraintFunction& sym) const {
    const std::uint32_t id = out.intern(sym);
    for (const auto& t : tuples_) out.add_constraint(id, t);
  }

 private:
  std::set<std::vector<Var>> tuples_;
};

// Fresh variables fresh[0..l-1]: `anchor` plus the next free ones after the
// largest anchor index, cyclically, until the block has `size` members.
std::vector<Var> rotate_block(std::span<const Var> fresh, std::span<const std::size_t> anchor, std::size_t size,
                              std::span<const Var> prefix) {
  std::vector<Var> block(prefix.begin(), prefix.end());
  std::vector<char> taken(fresh.size(), 0);
  for (std::size_t a : anchor) {
    block.push_back(fresh[a]);
    taken[a] = 1;
  }
  const std::size_t start = anchor.empty() ? 0 : *std::max_element(anchor.begin(), anchor.end()) + 1;
  for (std::size_t step = 0; block.size() < size && step < fresh.size(); ++step) {
    const std::size_t j = (start + step) % fresh.size();
    if (taken[j]) continue;
    taken[j] = 1;
    block.push_back(fresh[j]);
  }
  if (block.size() != size) throw InvalidArgument("not enough fresh variables for a gadget block");
  return block;
}

CspInstance copy_with_extra(const CspInstance& inst, std::size_t extra) {
  CspInstance out(inst.num_variables() + extra);
  for (const Constraint& c : inst.constraints()) out.add_constraint(inst.function_of(c), c.vars);
  return out;
}

}  // namespace

LessThanGadget build_less_than(const ConstraintFunction& f, int block_size, std::span<const Var> vars) {
  if (!f.zero_valid()) throw InvalidArgument("LessThan gadget needs a 0-valid function");
  if (u_min(f) < 1 || f.constant_true()) throw InvalidArgument("LessThan gadget needs a violating function");
  if (block_size < f.arity()) throw InvalidArgument("LessThan block smaller than the arity");
  if (static_cast<std::size_t>(block_size) != vars.size()) throw InvalidArgument("LessThan block size mismatch");
  std::vector<Var> sorted(vars.begin(), vars.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw InvalidArgument("LessThan block variables must be distinct");
  }
  LessThanGadget g{symmetrize(f), {}};
  for_each_combination(sorted.size(), static_cast<std::size_t>(f.arity()), [&](std::span<const std::size_t> idx) {
    std::vector<Var> t;
    for (std::size_t i : idx) t.push_back(sorted[i]);
    g.tuples.push_back(std::move(t));
  });
  return g;
}

EmbeddedCsp dense_embed(const CspInstance& nand_instance, const ConstraintFunction& f, double gamma, int k) {
  const int c = u_min(f);
  const int h = f.arity();
  if (!f.zero_valid() || c < 2 || c > h) throw InvalidArgument("dense embedding needs a 0-valid f with u_min >= 2");
  if (gamma < c || gamma > h) throw InvalidArgument("dense embedding needs u_min(f) <= gamma <= arity(f)");
  if (!is_nand_instance(nand_instance, c)) throw InvalidArgument("dense embedding source must use NAND_c only");
  const std::size_t n = nand_instance.num_variables();
  if (k < 0 || static_cast<std::size_t>(k) > n) throw InvalidArgument("dense embedding needs 0 <= k <= n");

  if (c == h) {
    CspInstance out(n);
    for (const Constraint& con : nand_instance.constraints()) out.add_constraint(f, con.vars);
    return {std::move(out), k};
  }
  const int block = k + h;
  const std::size_t fresh_count =
      std::max(ceil_pow(static_cast<double>(n), (gamma - c) / (h - c)), static_cast<std::size_t>(block - c));
  CspInstance out(n + fresh_count);
  std::vector<Var> fresh(fresh_count);
  std::iota(fresh.begin(), fresh.end(), static_cast<Var>(n));
  TupleSet tuples;
  for (const Constraint& con : nand_instance.constraints()) {
    for_each_combination(fresh_count, static_cast<std::size_t>(block - c), [&](std::span<const std::size_t> idx) {
      std::vector<Var> vars = con.vars;
      for (std::size_t i : idx) vars.push_back(fresh[i]);
      tuples.add_block(f, vars);
    });
  }
  tuples.emit(out, symmetrize(f));
  return {std::move(out), k};
}

EmbeddedCsp sparse_embed(const CspInstance& source, const ConstraintFunction& f, double gamma, int k,
                         std::optional<double> delta) {
  const int d = u_min(f);
  const int h = f.arity();
  const std::size_t n = source.num_variables();
  if (!f.zero_valid() || d < 1 || d > h) throw InvalidArgument("sparse embedding needs a 0-valid f with u_min >= 1");
  if (gamma <= 0) throw InvalidArgument("sparse embedding needs gamma > 0");
  if (k < 2 * d - 2 || k < 0) throw InvalidArgument("sparse embedding needs k >= 2 u_min(f) - 2");
  if (n < 2) throw InvalidArgument("sparse embedding needs at least two variables");
  const double dl = delta.value_or(source.num_constraints() > 0
                                       ? std::log(static_cast<double>(source.num_constraints())) / std::log(static_cast<double>(n))
                                       : gamma);
  if (dl < gamma) throw InvalidArgument("sparse embedding needs gamma <= delta");
  const int block = k + h;
  const std::size_t fresh_count = std::max(ceil_pow(static_cast<double>(n), dl / gamma), static_cast<std::size_t>(block));
  CspInstance out = copy_with_extra(source, fresh_count);
  std::vector<Var> fresh(fresh_count);
  std::iota(fresh.begin(), fresh.end(), static_cast<Var>(n));

  TupleSet tuples;
  // At most d - 1 fresh variables may be true ...
  for_each_combination(fresh_count, static_cast<std::size_t>(d), [&](std::span<const std::size_t> idx) {
    tuples.add_block(f, rotate_block(fresh, idx, static_cast<std::size_t>(block), {}));
  });
  // ... and none once d - 1 source variables are.
  for_each_combination(n, static_cast<std::size_t>(d - 1), [&](std::span<const std::size_t> xs) {
    std::vector<Var> prefix(xs.begin(), xs.end());
    for (std::size_t y = 0; y < fresh_count; ++y) {
      const std::size_t anchor[] = {y};
      tuples.add_block(f, rotate_block(fresh, anchor, static_cast<std::size_t>(block), prefix));
    }
  });
  tuples.emit(out, symmetrize(f));
  return {std::move(out), k};
}

Hypergraph gen_kis_sparse_lb(const Hypergraph& uniform3, double gamma) {
  if (gamma < 2.0 || gamma > 3.0) throw InvalidArgument("padding construction needs 2 <= gamma <= 3");
  for (const Edge& e : uniform3.edges()) {
    if (e.size() != 3) throw InvalidArgument("padding construction needs a 3-uniform input");
  }
  const std::size_t core = uniform3.num_vertices();
  const std::size_t pad = ceil_pow(static_cast<double>(std::max<std::size_t>(core, 1)), 3.0 / gamma);
  const std::size_t total = core + pad;
  std::vector<Edge> edges(uniform3.edges().begin(), uniform3.edges().end());
  for (Vertex p = static_cast<Vertex>(core); p < total; ++p) {
    for (Vertex v = 0; v < total; ++v) {
      if (v == p || (v >= core && v < p)) continue;
      edges.push_back(Edge{v, p});
    }
  }
  return Hypergraph(total, std::move(edges));
}

EmbeddedHypergraph gen_mixed_lb(const PartiteHypergraph& input, int arity, double gamma_i) {
  const Hypergraph& hs = input.hypergraph;
  const std::size_t n = hs.num_vertices();
  const auto k = static_cast<int>(input.parts.size());
  if (k < 1) throw InvalidArgument("partite input needs at least one part");
  std::vector<int> part_of(n, -1);
  for (int p = 0; p < k; ++p) {
    for (Vertex v : input.parts[p]) {
      if (v >= n || part_of[v] >= 0) throw InvalidArgument("parts must partition the vertices");
      part_of[v] = p;
    }
  }
  if (std::count(part_of.begin(), part_of.end(), -1) > 0) throw InvalidArgument("parts must cover the vertices");
  if (arity < 3 || arity > kMaxArity) throw InvalidArgument("target arity must be in [3, 6]");
  const bool dense = gamma_i >= 3.0;
  if (!dense && gamma_i < 2.0) throw InvalidArgument("gamma_i must be at least 2");
  const int r = dense ? static_cast<int>(std::floor(gamma_i)) : 3;
  for (const Edge& e : hs.edges()) {
    if (static_cast<int>(e.size()) != r) throw InvalidArgument("partite input must be r-uniform");
  }
  const int dummies = dense ? arity - r - 1 : arity - 3;
  if (dummies < 0) throw InvalidArgument("target arity too small for the input uniformity");

  std::size_t pad = 0;
  if (!dense) {
    std::size_t largest = 1;
    for (const auto& p : input.parts) largest = std::max(largest, p.size());
    pad = ceil_pow(static_cast<double>(largest), 3.0 / gamma_i);
  }
  const std::size_t total = n + static_cast<std::size_t>(dummies) + pad;
  std::vector<Vertex> dummy(static_cast<std::size_t>(dummies));
  std::iota(dummy.begin(), dummy.end(), static_cast<Vertex>(n));

  std::vector<Edge> edges;
  for (const auto& p : input.parts) {
    for (std::size_t a = 0; a < p.size(); ++a) {
      for (std::size_t b = a + 1; b < p.size(); ++b) edges.push_back(Edge{p[a], p[b]});
    }
  }
  const auto& last = input.parts.back();
  for (const Edge& e : hs.edges()) {
    const bool touches_last = std::any_of(e.begin(), e.end(), [&](Vertex v) { return part_of[v] == k - 1; });
    if (dense && touches_last) {
      edges.push_back(e);
      continue;
    }
    std::vector<Vertex> base(e.begin(), e.end());
    base.insert(base.end(), dummy.begin(), dummy.end());
    if (!dense) {
      edges.emplace_back(base);
      continue;
    }
    for (Vertex v : last) {
      std::vector<Vertex> vs = base;
      vs.push_back(v);
      edges.emplace_back(vs);
    }
  }
  for (Vertex p = static_cast<Vertex>(n + dummy.size()); p < total; ++p) {
    for (Vertex v = 0; v < total; ++v) {
      if (v == p || (v >= n + dummy.size() && v < p)) continue;
      edges.push_back(Edge{v, p});
    }
  }
  return {Hypergraph::with_unique_edges(total, edges), k + dummies};
}

EmbeddedCsp gen_binary_hardness(const CspInstance& nand_instance, std::span<const ConstraintFunction> family,
                                double gamma, int k) {
  if (gamma < 1.0 || gamma > 2.0) throw InvalidArgument("binary hardness needs 1 <= gamma <= 2");
  if (!is_nand_instance(nand_instance, 2)) throw InvalidArgument("binary hardness source must use NAND only");
  const ConstraintFunction nand = functions::nand(2);
  std::optional<ConstraintFunction> gadget;
  for (const ConstraintFunction& f : family) {
    if (f.arity() != 2) throw InvalidArgument("binary hardness needs a binary family");
    if (f.constant_true() || f.same_function(nand)) continue;
    if (!gadget || s_min(f) < s_min(*gadget)) gadget = f;
  }
  if (!gadget) throw InvalidArgument("family has no non-trivial function besides NAND");
  const ConstraintFunction& f = *gadget;
  const int smin = s_min(f);
  if (smin > 2) throw InvalidArgument("gadget function is unsatisfiable");

  const std::size_t n = nand_instance.num_variables();
  const std::size_t cycle = std::max<std::size_t>(ceil_pow(static_cast<double>(std::max<std::size_t>(n, 1)), 2.0 / gamma), 2);
  const std::size_t aux = smin == 0 ? 0 : 2;
  CspInstance out = copy_with_extra(nand_instance, cycle + aux);
  const auto y = [&](std::size_t i) { return static_cast<Var>(n + i); };
  const Var z1 = static_cast<Var>(n + cycle);
  const Var z2 = z1 + 1;

  switch (smin) {
    case 0:
      for (std::size_t i = 0; i < cycle; ++i) {
        const Var a = y(i);
        const Var b = y((i + 1) % cycle);
        if (cycle == 2 && i == 1) break;  // the two-variable cycle is a single pair
        out.add_constraint(f, {a, b});
        out.add_constraint(f, {b, a});
        out.add_constraint(nand, {a, b});
      }
      break;
    case 1: {
      // Orient f so that it accepts (1, 0).
      const bool forward = f.at(0b01);
      out.add_constraint(f, forward ? std::vector<Var>{z1, z2} : std::vector<Var>{z2, z1});
      out.add_constraint(nand, {z1, z2});
      for (std::size_t i = 0; i < cycle; ++i) {
        out.add_constraint(nand, {z1, y(i)});
        out.add_constraint(nand, {z2, y(i)});
      }
      break;
    }
    default:
      out.add_constraint(f, {z1, z2});
      for (std::size_t i = 0; i < cycle; ++i) out.add_constraint(nand, {z1, y(i)});
      break;
  }
  return {std::move(out), k + smin};
}

}  // namespace sparsek
