#pragma once

#include <optional>
#include <span>
#include <vector>

#include "sparsek/csp.hpp"
#include "sparsek/hypergraph.hpp"

namespace sparsek {

// Copies of the symmetrized f on every arity-sized subset of a block of K
// variables. With c = u_min(f) and k = K - arity(f), every assignment of
// weight below c satisfies the block and none of weight in [c, k] does.
struct LessThanGadget {
  ConstraintFunction function;               // symmetrized f
  std::vector<std::vector<Var>> tuples;      // sorted variable tuples
};
LessThanGadget build_less_than(const ConstraintFunction& f, int block_size, std::span<const Var> vars);

// An instance together with the solution weight it must be asked at.
struct EmbeddedCsp {
  CspInstance instance;
  int k = 0;
};

// Re-expresses a NAND_c instance (c = u_min(f) >= 2) over f alone with about
// n^gamma constraints. Needs c <= gamma <= arity(f) and n >= k.
EmbeddedCsp dense_embed(const CspInstance& nand_instance, const ConstraintFunction& f, double gamma, int k);

// Adds about n^{delta/gamma} fresh variables that f-gadgets force false,
// lowering the density exponent from delta to gamma. delta defaults to
// log_n m. Needs u_min(f) >= 1, gamma <= delta and k >= 2 u_min(f) - 2.
// The result is equivalent for any gamma; it is only sparse when
// u_min(f) <= gamma.
EmbeddedCsp sparse_embed(const CspInstance& source, const ConstraintFunction& f, double gamma, int k,
                         std::optional<double> delta = std::nullopt);

// Appends ceil(n^{3/gamma}) padding vertices adjacent to every other vertex.
// k-independent sets are unchanged for k >= 2.
Hypergraph gen_kis_sparse_lb(const Hypergraph& uniform3, double gamma);

struct PartiteHypergraph {
  Hypergraph hypergraph;                 // r-uniform
  std::vector<std::vector<Vertex>> parts;  // a partition of the vertices
};

struct EmbeddedHypergraph {
  Hypergraph hypergraph;
  int k = 0;
};

// Mixed-arity instance with a k-independent set (k as returned) iff the
// partite input has an independent set using one vertex per part.
// gamma_i >= 3 uses r = floor(gamma_i)-uniform input and needs arity >= r + 1;
// 2 <= gamma_i < 3 uses 3-uniform input plus padding vertices.
EmbeddedHypergraph gen_mixed_lb(const PartiteHypergraph& input, int arity, double gamma_i);

// Hides a binary NAND instance inside about n^{2/gamma} extra variables that a
// cycle of gadgets over the family forces false. 1 <= gamma <= 2.
EmbeddedCsp gen_binary_hardness(const CspInstance& nand_instance, std::span<const ConstraintFunction> family,
                                double gamma, int k);

}  // namespace sparsek
