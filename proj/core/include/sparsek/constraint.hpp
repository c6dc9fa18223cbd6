#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>

#include "sparsek/common.hpp"

namespace sparsek {

inline constexpr int kMaxConstraintArity = 6;

// Boolean function of arity 0..6 as a truth table. Row j assigns bit
// (j >> p) & 1 to the argument at position p (position 0 is the first
// argument).
class ConstraintFunction {
 public:
  ConstraintFunction() = default;
  ConstraintFunction(int arity, std::uint64_t table, std::string name = {});
  // Row j is character j of `bits`, so "1110" is binary NAND.
  static ConstraintFunction from_bits(std::string_view bits, std::string name = {});

  int arity() const { return arity_; }
  std::uint64_t table() const { return table_; }
  std::size_t rows() const { return std::size_t{1} << arity_; }
  const std::string& name() const { return name_; }
  void set_name(std::string name) { name_ = std::move(name); }

  bool at(std::uint64_t row) const { return (table_ >> row) & 1U; }
  bool eval(std::span<const bool> args) const;

  bool constant_true() const { return table_ == full_mask(arity_); }
  bool constant_false() const { return table_ == 0; }
  bool zero_valid() const { return at(0); }
  std::string bits() const;

  // Same arity and table; names are ignored.
  bool same_function(const ConstraintFunction& other) const {
    return arity_ == other.arity_ && table_ == other.table_;
  }

  static std::uint64_t full_mask(int arity) {
    return arity == 6 ? ~std::uint64_t{0} : ((std::uint64_t{1} << (std::size_t{1} << arity)) - 1);
  }

 private:
  int arity_ = 0;
  std::uint64_t table_ = 0;
  std::string name_;
};

// Smallest weight of a violating / satisfying row; arity + 1 if none exists.
int u_min(const ConstraintFunction& f);
int s_min(const ConstraintFunction& f);

// perm[p] is the position that argument p moves to: g(y) = f(x) with
// y[perm[p]] = x[p].
ConstraintFunction permute(const ConstraintFunction& f, std::span<const int> perm);
// Conjunction over all argument permutations.
ConstraintFunction symmetrize(const ConstraintFunction& f);

struct Specialized {
  ConstraintFunction function;
  bool droppable = false;  // result is constant true
};
// Fixes the argument at `position` (0-based) to `value`.
Specialized specialize(const ConstraintFunction& f, int position, bool value);

// Mask of argument positions p such that every satisfying row has bit p = 0.
std::uint32_t forced_false_positions(const ConstraintFunction& f);
// Mask of argument positions p such that every satisfying row has bit p = 1.
std::uint32_t forced_true_positions(const ConstraintFunction& f);

namespace functions {
ConstraintFunction nand(int arity);
ConstraintFunction impl();      // x -> y
ConstraintFunction eq();
ConstraintFunction or2();
ConstraintFunction nor2();
ConstraintFunction and2();
ConstraintFunction xor2();
ConstraintFunction negation();  // unary "x must be false"
ConstraintFunction identity();  // unary "x must be true"
// Looks up a name such as "nand3", "impl", "eq", "or", "nor", "f", "and".
std::optional<ConstraintFunction> by_name(std::string_view name);
}  // namespace functions

// Semantic shape of a function of arity <= 2, up to argument order.
enum class BinaryShape {
  Nand,
  Impl,
  Eq,
  Nor,
  Or,
  And,
  Xor,
  ForceFalse,   // depends on one argument, which must be 0 (F)
  ForceTrue,    // depends on one argument, which must be 1
  OnlyOneSide,  // x and not y
  ConstantTrue,
  ConstantFalse,
};

struct BinaryShapeInfo {
  BinaryShape shape;
  // For Impl: position of the premise. For ForceFalse/ForceTrue/OnlyOneSide:
  // position of the argument that is forced (to 0/1/1 respectively).
  int position = 0;
};

// Throws InvalidArgument for arity > 2.
BinaryShapeInfo recognize_binary(const ConstraintFunction& f);
const char* to_string(BinaryShape shape);

}  // namespace sparsek
