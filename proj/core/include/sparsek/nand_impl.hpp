#pragma once

#include <array>
#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "sparsek/common.hpp"

namespace sparsek {

// Binary NAND constraints plus implications (x, y) meaning x -> y.
struct NandImplInstance {
  std::size_t n = 0;
  std::vector<std::pair<Var, Var>> nand;
  std::vector<std::pair<Var, Var>> impl;
};

bool satisfies(const NandImplInstance& inst, std::span<const Var> true_vars);

struct NandImplOptions {
  // Cap on part-nodes per triangle instance; exceeding it raises ResourceLimit.
  std::size_t node_cap = 200000;
};

// A sub-instance together with the vertices fixed true on the way to it.
struct NandImplBranch {
  NandImplInstance instance;
  std::vector<Var> origin;  // branch variable -> variable of the parent
  std::vector<Var> forced;  // parent variables fixed true
  int k = 0;
};

// Branches over the closure-consistent choices of heavy variables (those
// with at least three descendants). In every branch each variable has at
// most two descendants.
std::vector<NandImplBranch> restrict_instance(const NandImplInstance& inst, int k);
// Branches over which mutually implying pairs are taken; the branches
// contain no such pairs.
std::vector<NandImplBranch> remove_two_cycles(const NandImplInstance& inst, int k);

struct VariableGroup {
  std::optional<Var> sink;   // absent for the group of isolated variables
  std::vector<Var> members;  // includes the sink
};

struct GroupPartition {
  std::vector<Var> left;   // one ancestor (itself), two descendants
  std::vector<Var> right;  // at least two ancestors
  std::vector<Var> zero;   // no other ancestor or descendant
  std::vector<VariableGroup> groups;
};

// Requires every variable to have at most two descendants and no 2-cycles.
GroupPartition build_groups(const NandImplInstance& inst);

// Greedy assignment of parts 0..l-3 (ascending sizes) to the lightest of three
// bins, lowest bin index on ties.
std::array<std::vector<std::size_t>, 3> balance_partition(std::span<const int> parts);

std::optional<std::vector<Var>> solve_restricted(const NandImplInstance& inst, int k,
                                                 const NandImplOptions& options = {});
std::optional<std::vector<Var>> solve_nand_impl(const NandImplInstance& inst, int k,
                                                const NandImplOptions& options = {});

// Calls visit on the vertex union of every triangle of every triangle
// instance built by solve_restricted. Exposed for completeness checks.
void for_each_restricted_candidate(const NandImplInstance& inst, int k,
                                   const std::function<void(std::span<const Var>)>& visit,
                                   const NandImplOptions& options = {});

}  // namespace sparsek
