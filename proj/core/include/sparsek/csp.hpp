#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sparsek/common.hpp"
#include "sparsek/constraint.hpp"

namespace sparsek {

struct Constraint {
  std::uint32_t function = 0;
  std::vector<Var> vars;
};

// Variables 0..n-1 and a list of constraints over pairwise distinct variables.
// Functions live in a per-instance table and are referenced by id.
class CspInstance {
 public:
  explicit CspInstance(std::size_t n = 0) : n_(n) {}

  std::size_t num_variables() const { return n_; }
  std::size_t num_constraints() const { return constraints_.size(); }
  std::span<const ConstraintFunction> functions() const { return functions_; }
  const ConstraintFunction& function(std::uint32_t id) const { return functions_[id]; }
  const ConstraintFunction& function_of(const Constraint& c) const { return functions_[c.function]; }
  std::span<const Constraint> constraints() const { return constraints_; }

  // Id of a function with the same arity and table, appending if none exists.
  std::uint32_t intern(const ConstraintFunction& f);
  // Always appends.
  std::uint32_t add_function(ConstraintFunction f);

  // Throws InvalidArgument on arity mismatch, repeated or out-of-range
  // variables, and constant-true functions.
  void add_constraint(std::uint32_t function, std::vector<Var> vars);
  void add_constraint(const ConstraintFunction& f, std::vector<Var> vars) {
    add_constraint(intern(f), std::move(vars));
  }

  // m_f indexed by function id.
  std::vector<std::size_t> function_counts() const;
  // Ids of functions that occur in at least one constraint, increasing.
  std::vector<std::uint32_t> used_functions() const;
  int max_arity() const;

  bool satisfied_by(std::span<const Var> true_vars) const;

 private:
  std::size_t n_ = 0;
  std::vector<ConstraintFunction> functions_;
  std::vector<Constraint> constraints_;
};

// CSP text: '#' comments, "p csp <n> <m>", "f <name> <arity> <bits>"
// declarations, and m lines "c <name> v1 .. vr" (1-based). Standard names
// (nand2..nand6, impl, eq, or, nor, and, xor, f, t) may be used undeclared.
CspInstance parse_csp(std::string_view text);
CspInstance read_csp(const std::filesystem::path& path);
std::string format_csp(const CspInstance& inst, std::span<const std::string> comments = {});

}  // namespace sparsek
