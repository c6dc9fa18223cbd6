#include "sparsek/constraint.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <vector>

namespace sparsek {

ConstraintFunction::ConstraintFunction(int arity, std::uint64_t table, std::string name)
    : arity_(arity), table_(table), name_(std::move(name)) {
  if (arity < 0 || arity > kMaxConstraintArity) {
    throw InvalidArgument("constraint arity must be in 0..6");
  }
  if ((table & ~full_mask(arity)) != 0) throw InvalidArgument("truth table wider than 2^arity");
}

ConstraintFunction ConstraintFunction::from_bits(std::string_view bits, std::string name) {
  int arity = 0;
  while (arity <= kMaxConstraintArity && (std::size_t{1} << arity) < bits.size()) ++arity;
  if (arity > kMaxConstraintArity || (std::size_t{1} << arity) != bits.size()) {
    throw InvalidArgument("truth table length must be a power of two up to 64");
  }
  std::uint64_t table = 0;
  for (std::size_t j = 0; j < bits.size(); ++j) {
    if (bits[j] == '1') {
      table |= std::uint64_t{1} << j;
    } else if (bits[j] != '0') {
      throw InvalidArgument("truth table must consist of 0 and 1");
    }
  }
  return ConstraintFunction(arity, table, std::move(name));
}

bool ConstraintFunction::eval(std::span<const bool> args) const {
  std::uint64_t row = 0;
  for (std::size_t p = 0; p < args.size(); ++p) {
    if (args[p]) row |= std::uint64_t{1} << p;
  }
  return at(row);
}

std::string ConstraintFunction::bits() const {
  std::string s(rows(), '0');
  for (std::size_t j = 0; j < rows(); ++j) {
    if (at(j)) s[j] = '1';
  }
  return s;
}

int u_min(const ConstraintFunction& f) {
  int best = f.arity() + 1;
  for (std::uint64_t j = 0; j < f.rows(); ++j) {
    if (!f.at(j)) best = std::min(best, std::popcount(j));
  }
  return best;
}

int s_min(const ConstraintFunction& f) {
  int best = f.arity() + 1;
  for (std::uint64_t j = 0; j < f.rows(); ++j) {
    if (f.at(j)) best = std::min(best, std::popcount(j));
  }
  return best;
}

ConstraintFunction permute(const ConstraintFunction& f, std::span<const int> perm) {
  if (static_cast<int>(perm.size()) != f.arity()) throw InvalidArgument("permutation has wrong length");
  std::uint64_t table = 0;
  for (std::uint64_t j = 0; j < f.rows(); ++j) {
    if (!f.at(j)) continue;
    std::uint64_t y = 0;
    for (int p = 0; p < f.arity(); ++p) {
      if ((j >> p) & 1U) y |= std::uint64_t{1} << perm[p];
    }
    table |= std::uint64_t{1} << y;
  }
  return ConstraintFunction(f.arity(), table, f.name());
}

ConstraintFunction symmetrize(const ConstraintFunction& f) {
  std::vector<int> perm(f.arity());
  std::iota(perm.begin(), perm.end(), 0);
  std::uint64_t table = ConstraintFunction::full_mask(f.arity());
  do {
    table &= permute(f, perm).table();
  } while (std::next_permutation(perm.begin(), perm.end()));
  return ConstraintFunction(f.arity(), table, f.name().empty() ? std::string() : f.name() + "_sym");
}

Specialized specialize(const ConstraintFunction& f, int position, bool value) {
  if (position < 0 || position >= f.arity()) throw InvalidArgument("specialize: position out of range");
  const int r = f.arity() - 1;
  std::uint64_t table = 0;
  for (std::uint64_t j = 0; j < (std::uint64_t{1} << r); ++j) {
    const std::uint64_t low = j & ((std::uint64_t{1} << position) - 1);
    const std::uint64_t high = (j >> position) << (position + 1);
    const std::uint64_t row = low | high | (std::uint64_t{value} << position);
    if (f.at(row)) table |= std::uint64_t{1} << j;
  }
  ConstraintFunction g(r, table);
  return {g, g.constant_true()};
}

std::uint32_t forced_false_positions(const ConstraintFunction& f) {
  std::uint32_t ones = 0;
  for (std::uint64_t j = 0; j < f.rows(); ++j) {
    if (f.at(j)) ones |= static_cast<std::uint32_t>(j);
  }
  return static_cast<std::uint32_t>(f.rows() - 1) & ~ones;
}

std::uint32_t forced_true_positions(const ConstraintFunction& f) {
  std::uint32_t all = static_cast<std::uint32_t>(f.rows() - 1);
  for (std::uint64_t j = 0; j < f.rows(); ++j) {
    if (f.at(j)) all &= static_cast<std::uint32_t>(j);
  }
  return f.constant_false() ? 0 : all;
}

namespace functions {

ConstraintFunction nand(int arity) {
  const std::uint64_t full = ConstraintFunction::full_mask(arity);
  return ConstraintFunction(arity, full & ~(std::uint64_t{1} << ((std::size_t{1} << arity) - 1)),
                            "nand" + std::to_string(arity));
}
ConstraintFunction impl() { return ConstraintFunction::from_bits("1011", "impl"); }
ConstraintFunction eq() { return ConstraintFunction::from_bits("1001", "eq"); }
ConstraintFunction or2() { return ConstraintFunction::from_bits("0111", "or"); }
ConstraintFunction nor2() { return ConstraintFunction::from_bits("1000", "nor"); }
ConstraintFunction and2() { return ConstraintFunction::from_bits("0001", "and"); }
ConstraintFunction xor2() { return ConstraintFunction::from_bits("0110", "xor"); }
ConstraintFunction negation() { return ConstraintFunction::from_bits("10", "f"); }
ConstraintFunction identity() { return ConstraintFunction::from_bits("01", "t"); }

std::optional<ConstraintFunction> by_name(std::string_view name) {
  if (name == "impl") return impl();
  if (name == "eq") return eq();
  if (name == "or") return or2();
  if (name == "nor") return nor2();
  if (name == "and") return and2();
  if (name == "xor") return xor2();
  if (name == "f") return negation();
  if (name == "t") return identity();
  if (name == "nand") return nand(2);
  if (name.size() == 5 && name.substr(0, 4) == "nand" && name[4] >= '2' && name[4] <= '6') {
    return nand(name[4] - '0');
  }
  return std::nullopt;
}

}  // namespace functions

BinaryShapeInfo recognize_binary(const ConstraintFunction& f) {
  if (f.arity() > 2) throw InvalidArgument("recognize_binary: arity above 2");
  if (f.constant_true()) return {BinaryShape::ConstantTrue};
  if (f.constant_false()) return {BinaryShape::ConstantFalse};
  if (f.arity() == 1) {
    return {f.at(0) ? BinaryShape::ForceFalse : BinaryShape::ForceTrue, 0};
  }
  // Rows: j=0 (0,0), j=1 (x=1,y=0), j=2 (x=0,y=1), j=3 (1,1).
  switch (f.table()) {
    case 0b0111: return {BinaryShape::Nand};
    case 0b1101: return {BinaryShape::Impl, 0};  // fails only at x=1,y=0
    case 0b1011: return {BinaryShape::Impl, 1};  // fails only at x=0,y=1
    case 0b1001: return {BinaryShape::Eq};
    case 0b0001: return {BinaryShape::Nor};
    case 0b1110: return {BinaryShape::Or};
    case 0b1000: return {BinaryShape::And};
    case 0b0110: return {BinaryShape::Xor};
    case 0b0101: return {BinaryShape::ForceFalse, 0};  // true iff x=0
    case 0b0011: return {BinaryShape::ForceFalse, 1};  // true iff y=0
    case 0b1010: return {BinaryShape::ForceTrue, 0};   // true iff x=1
    case 0b1100: return {BinaryShape::ForceTrue, 1};   // true iff y=1
    case 0b0010: return {BinaryShape::OnlyOneSide, 0};  // x=1, y=0
    case 0b0100: return {BinaryShape::OnlyOneSide, 1};  // x=0, y=1
    default: break;
  }
  throw InternalError("recognize_binary: unreachable table");
}

const char* to_string(BinaryShape shape) {
  switch (shape) {
    case BinaryShape::Nand: return "NAND";
    case BinaryShape::Impl: return "IMPL";
    case BinaryShape::Eq: return "EQ";
    case BinaryShape::Nor: return "NOR";
    case BinaryShape::Or: return "OR";
    case BinaryShape::And: return "AND";
    case BinaryShape::Xor: return "XOR";
    case BinaryShape::ForceFalse: return "F";
    case BinaryShape::ForceTrue: return "T";
    case BinaryShape::OnlyOneSide: return "ANDNOT";
    case BinaryShape::ConstantTrue: return "TRUE";
    case BinaryShape::ConstantFalse: return "FALSE";
  }
  return "?";
}

}  // namespace sparsek
