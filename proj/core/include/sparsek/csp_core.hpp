#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "sparsek/csp.hpp"
#include "sparsek/kis_solver.hpp"
#include "sparsek/nand_impl.hpp"

namespace sparsek {

enum class RegimeKind { Linear, Subexponential, Kis, Clique };

struct Regime {
  RegimeKind kind = RegimeKind::Linear;
  int offset = 0;  // meaningful for Clique only

  friend bool operator==(const Regime&, const Regime&) = default;
};

std::string to_string(const Regime& r);

// Functions of arity <= 2 only; constant-true functions are ignored.
Regime classify_binary_family(std::span<const ConstraintFunction> family);
// Classifies the functions that occur in the instance.
Regime classify_instance(const CspInstance& inst);

// Reflexive transitive closure of the implication arcs.
struct ImplStructure {
  std::vector<std::vector<Var>> descendants;  // sorted, contains v
  std::vector<std::vector<Var>> ancestors;    // sorted, contains v
};
ImplStructure compute_impl_structure(std::size_t n, std::span<const std::pair<Var, Var>> arcs);
// Implication arcs of an instance: IMPL constraints plus both directions of EQ.
std::vector<std::pair<Var, Var>> implication_arcs(const CspInstance& inst);

// An equivalent smaller instance: a weight-k solution of `instance` lifts to
// a weight-(k + |forced_true|) solution of the source.
struct Reduced {
  CspInstance instance;
  std::vector<Var> origin;       // reduced variable -> source variable
  std::vector<Var> forced_true;  // source variables
  int k = 0;

  std::vector<Var> lift(std::span<const Var> solution) const;
};

Reduced identity_reduction(const CspInstance& inst, int k);
// Chains `inner` (a reduction of outer.instance) behind `outer`.
Reduced compose(const Reduced& outer, const Reduced& inner);

// Fixes variables that some constraint forces false (or true) and
// propagates to a fixpoint. nullopt when that proves the instance has no
// weight-k solution.
std::optional<Reduced> preprocess_easy(const CspInstance& inst, int k);

// Leaves contain only 0-valid constraints. A weight-k solution exists iff
// some leaf has a weight-(leaf k) solution.
std::vector<Reduced> branch_and_bound(const CspInstance& inst, int k);

// All constraints must be EQ. Returns the true variables of a solution.
std::optional<std::vector<Var>> eq_components_subset_sum(const CspInstance& inst, int k);

// Drops variables with more than k descendants, or whose descendants contain
// both ends of a NAND, together with everything implying them.
std::optional<Reduced> impl_prune(const CspInstance& inst, int k);

struct CspSolveOptions {
  KisOptions kis;
  NandImplOptions nand_impl;
  // Cap on visited states in the closure and backtracking searches.
  std::size_t search_cap = 2'000'000;
};

struct CspSolution {
  bool satisfiable = false;
  std::optional<std::vector<Var>> assignment;  // true variables, sorted
  std::optional<Regime> regime;                // binary instances only
  std::string route;
};

CspSolution solve_csp(const CspInstance& inst, int k, const CspSolveOptions& options = {});

}  // namespace sparsek
