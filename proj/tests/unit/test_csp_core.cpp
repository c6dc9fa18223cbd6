#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "helpers.hpp"
#include "sparsek/csp_core.hpp"
#include "sparsek/oracle.hpp"

namespace sparsek {
namespace {

namespace fn = functions;

Regime classify(std::initializer_list<ConstraintFunction> fs) {
  const std::vector<ConstraintFunction> v(fs);
  return classify_binary_family(v);
}

bool has_solution(const CspInstance& inst, int k) { return oracle::brute_solve_csp(inst, k).has_value(); }

std::vector<ConstraintFunction> random_family(Rng& rng) {
  const std::vector<ConstraintFunction> pool{fn::nand(2), fn::impl(), fn::eq(), fn::or2(), fn::nor2(), fn::negation()};
  std::vector<ConstraintFunction> fam;
  while (fam.empty()) {
    for (const auto& f : pool) {
      if (rng.bernoulli(0.4)) fam.push_back(f);
    }
  }
  return fam;
}

TEST(Classify, CanonicalFamilies) {
  using K = RegimeKind;
  EXPECT_EQ(classify({fn::nand(2)}), (Regime{K::Kis, 0}));
  EXPECT_EQ(classify({fn::impl()}), (Regime{K::Subexponential, 0}));
  EXPECT_EQ(classify({fn::eq()}), (Regime{K::Linear, 0}));
  EXPECT_EQ(classify({fn::nand(2), fn::eq()}), (Regime{K::Clique, 0}));
  EXPECT_EQ(classify({fn::nand(2), fn::impl()}), (Regime{K::Clique, 0}));
  EXPECT_EQ(classify({fn::impl(), fn::eq()}), (Regime{K::Subexponential, 0}));
  EXPECT_EQ(classify({fn::or2()}), (Regime{K::Linear, 0}));
  EXPECT_EQ(classify({fn::nand(2), fn::or2()}), (Regime{K::Clique, 1}));
  EXPECT_EQ(classify({fn::nor2()}), (Regime{K::Linear, 0}));
  EXPECT_EQ(classify({fn::nand(2), fn::nor2()}), (Regime{K::Clique, 0}));
  EXPECT_EQ(classify({fn::eq(), fn::or2()}), (Regime{K::Linear, 0}));
  EXPECT_EQ(classify({fn::nand(2), fn::impl(), fn::eq()}), (Regime{K::Clique, 0}));
  EXPECT_EQ(classify({fn::nand(2), fn::and2()}), (Regime{K::Clique, 2}));
}

TEST(Classify, Names) {
  EXPECT_EQ(to_string(Regime{RegimeKind::Kis, 0}), "KIS");
  EXPECT_EQ(to_string(Regime{RegimeKind::Clique, 1}), "Clique(1)");
  EXPECT_EQ(to_string(Regime{RegimeKind::Linear, 0}), "Linear");
  EXPECT_EQ(to_string(Regime{RegimeKind::Subexponential, 0}), "Subexponential");
}

TEST(Classify, InvariantUnderSwapsAndConstantTrue) {
  Rng rng(3);
  const std::vector<int> swap{1, 0};
  for (int trial = 0; trial < 40; ++trial) {
    auto fam = random_family(rng);
    const Regime base = classify_binary_family(fam);
    for (auto& f : fam) {
      if (f.arity() == 2 && rng.bernoulli(0.5)) f = permute(f, swap);
    }
    fam.emplace_back(2, 0xF);
    EXPECT_EQ(classify_binary_family(fam), base);
  }
  EXPECT_THROW(classify({fn::nand(3)}), InvalidArgument);
}

TEST(ImplStructure, ReflexiveTransitiveConsistent) {
  Rng rng(4);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = 10;
    std::vector<std::pair<Var, Var>> arcs;
    for (int i = 0; i < 14; ++i) {
      const Var x = static_cast<Var>(rng.below(n)), y = static_cast<Var>(rng.below(n));
      if (x != y) arcs.emplace_back(x, y);
    }
    const auto s = compute_impl_structure(n, arcs);
    for (Var v = 0; v < n; ++v) {
      const auto& d = s.descendants[v];
      EXPECT_TRUE(std::binary_search(d.begin(), d.end(), v));
      EXPECT_TRUE(std::binary_search(s.ancestors[v].begin(), s.ancestors[v].end(), v));
      std::set<Var> expanded(d.begin(), d.end());
      for (auto [x, y] : arcs) {
        if (expanded.count(x)) expanded.insert(y);
      }
      EXPECT_EQ(std::vector<Var>(expanded.begin(), expanded.end()), d);
      for (Var u : d) EXPECT_TRUE(std::binary_search(s.ancestors[u].begin(), s.ancestors[u].end(), v));
    }
  }
}

TEST(ImplicationArcs, EqGivesBothDirections) {
  CspInstance inst(3);
  inst.add_constraint(fn::eq(), {0, 1});
  inst.add_constraint(fn::impl(), {2, 1});
  auto arcs = implication_arcs(inst);
  std::sort(arcs.begin(), arcs.end());
  EXPECT_EQ(arcs, (std::vector<std::pair<Var, Var>>{{0, 1}, {1, 0}, {2, 1}}));
}

TEST(PreprocessEasy, NorRemovesBothVariables) {
  CspInstance inst(3);
  inst.add_constraint(fn::nor2(), {0, 1});
  const auto r = preprocess_easy(inst, 1);
  ASSERT_TRUE(r.has_value());
  EXPECT_EQ(r->instance.num_variables(), 1u);
  EXPECT_EQ(r->instance.num_constraints(), 0u);
  EXPECT_EQ(r->origin, std::vector<Var>{2});
  EXPECT_EQ(r->lift(std::vector<Var>{0}), std::vector<Var>{2});
}

TEST(PreprocessEasy, IdentityWithoutForcingConstraints) {
  CspInstance inst(4);
  inst.add_constraint(fn::nand(2), {0, 1});
  inst.add_constraint(fn::impl(), {2, 3});
  const auto r = preprocess_easy(inst, 2);
  ASSERT_TRUE(r.has_value());
  EXPECT_EQ(r->instance.num_variables(), 4u);
  EXPECT_EQ(r->instance.num_constraints(), 2u);
  EXPECT_TRUE(r->forced_true.empty());
}

TEST(PreprocessEasy, PreservesSatisfiability) {
  Rng rng(10);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 4 + rng.below(9);
    std::vector<ConstraintFunction> fam = random_family(rng);
    fam.push_back(fn::and2());
    const auto inst = random_csp(n, fam, rng.below(2 * n), rng);
    const int k = static_cast<int>(rng.below(5));
    const auto r = preprocess_easy(inst, k);
    const auto truth = oracle::brute_solve_csp(inst, k);
    EXPECT_EQ(r.has_value() && has_solution(r->instance, r->k), truth.has_value()) << trial;
    if (r) {
      EXPECT_LE(r->instance.num_variables(), n);
      EXPECT_LE(r->instance.num_constraints(), inst.num_constraints());
      if (auto sol = oracle::brute_solve_csp(r->instance, r->k)) {
        EXPECT_TRUE(inst.satisfied_by(r->lift(*sol)));
      }
    }
  }
}

TEST(BranchAndBound, OrBranches) {
  CspInstance inst(3);
  inst.add_constraint(fn::or2(), {0, 1});
  const auto leaves = branch_and_bound(inst, 1);
  ASSERT_EQ(leaves.size(), 2u);
  std::set<std::vector<Var>> forced;
  for (const auto& l : leaves) {
    EXPECT_EQ(l.k, 0);
    forced.insert(l.forced_true);
  }
  EXPECT_EQ(forced, (std::set<std::vector<Var>>{{0}, {1}}));
}

TEST(BranchAndBound, ZeroValidIsSingleLeaf) {
  CspInstance inst(4);
  inst.add_constraint(fn::nand(2), {0, 1});
  inst.add_constraint(fn::impl(), {1, 2});
  const auto leaves = branch_and_bound(inst, 2);
  ASSERT_EQ(leaves.size(), 1u);
  EXPECT_EQ(leaves[0].k, 2);
  EXPECT_EQ(leaves[0].instance.num_constraints(), 2u);
}

TEST(BranchAndBound, LeavesAreZeroValidAndEquivalent) {
  Rng rng(14);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 4 + rng.below(7);
    std::vector<ConstraintFunction> fam = random_family(rng);
    fam.push_back(fn::or2());
    if (rng.bernoulli(0.3)) fam.push_back(ConstraintFunction::from_bits("01111111"));
    const auto inst = random_csp(n, fam, 1 + rng.below(2 * n), rng);
    const int k = static_cast<int>(rng.below(5));
    const auto leaves = branch_and_bound(inst, k);
    bool any = false;
    for (const auto& l : leaves) {
      for (std::uint32_t f : l.instance.used_functions()) EXPECT_GE(u_min(l.instance.function(f)), 1);
      EXPECT_LE(l.k, k);
      if (auto sol = oracle::brute_solve_csp(l.instance, l.k)) {
        any = true;
        const auto lifted = l.lift(*sol);
        EXPECT_EQ(static_cast<int>(lifted.size()), k);
        EXPECT_TRUE(inst.satisfied_by(lifted));
      }
    }
    EXPECT_EQ(any, has_solution(inst, k)) << trial;
    EXPECT_LE(leaves.size(), static_cast<std::size_t>(std::pow(3.0, k)));
  }
}

CspInstance eq_components(std::initializer_list<int> sizes) {
  std::size_t n = 0;
  for (int s : sizes) n += static_cast<std::size_t>(s);
  CspInstance inst(n);
  Var base = 0;
  for (int s : sizes) {
    for (int i = 1; i < s; ++i) inst.add_constraint(fn::eq(), {base + i - 1, base + i});
    base += static_cast<Var>(s);
  }
  return inst;
}

TEST(SubsetSum, ComponentExamples) {
  const auto a = eq_components({3, 3, 2});
  const auto yes = eq_components_subset_sum(a, 5);
  ASSERT_TRUE(yes.has_value());
  EXPECT_EQ(yes->size(), 5u);
  EXPECT_TRUE(a.satisfied_by(*yes));
  EXPECT_FALSE(eq_components_subset_sum(eq_components({3, 3}), 5).has_value());
  const auto empty = eq_components_subset_sum(eq_components({3, 3}), 0);
  ASSERT_TRUE(empty.has_value());
  EXPECT_TRUE(empty->empty());
}

TEST(SubsetSum, MatchesBruteForce) {
  Rng rng(15);
  const std::vector<ConstraintFunction> fam{fn::eq()};
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 3 + rng.below(12);
    const auto inst = random_csp(n, fam, rng.below(n + 2), rng);
    const int k = static_cast<int>(rng.below(7));
    const auto s = eq_components_subset_sum(inst, k);
    EXPECT_EQ(s.has_value(), has_solution(inst, k));
    if (s) {
      EXPECT_EQ(static_cast<int>(s->size()), k);
      EXPECT_TRUE(inst.satisfied_by(*s));
    }
  }
}

TEST(ImplPrune, ChainKeepsTail) {
  CspInstance inst(10);
  for (Var v = 0; v + 1 < 10; ++v) inst.add_constraint(fn::impl(), {v, v + 1});
  const auto r = impl_prune(inst, 3);
  ASSERT_TRUE(r.has_value());
  EXPECT_EQ(r->origin, (std::vector<Var>{7, 8, 9}));
  const auto sol = oracle::brute_solve_csp(r->instance, r->k);
  ASSERT_TRUE(sol.has_value());
  EXPECT_EQ(r->lift(*sol), (std::vector<Var>{7, 8, 9}));
}

TEST(ImplPrune, NoImplicationsIsIdentity) {
  CspInstance inst(4);
  inst.add_constraint(fn::nand(2), {0, 1});
  const auto r = impl_prune(inst, 2);
  ASSERT_TRUE(r.has_value());
  EXPECT_EQ(r->instance.num_variables(), 4u);
}

TEST(ImplPrune, DropsAncestorsOfNandPairs) {
  CspInstance inst(5);
  inst.add_constraint(fn::impl(), {0, 1});
  inst.add_constraint(fn::impl(), {0, 2});
  inst.add_constraint(fn::nand(2), {1, 2});
  inst.add_constraint(fn::impl(), {3, 0});
  const auto r = impl_prune(inst, 2);
  ASSERT_TRUE(r.has_value());
  EXPECT_EQ(r->origin, (std::vector<Var>{1, 2, 4}));
}

TEST(ImplPrune, PreservesSatisfiability) {
  Rng rng(16);
  const std::vector<ConstraintFunction> fam{fn::nand(2), fn::impl(), fn::impl()};
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 4 + rng.below(11);
    const auto inst = random_csp(n, fam, rng.below(2 * n), rng);
    const int k = 1 + static_cast<int>(rng.below(5));
    const auto r = impl_prune(inst, k);
    EXPECT_EQ(r.has_value() && has_solution(r->instance, r->k), has_solution(inst, k)) << trial;
  }
}

TEST(SolveCsp, Examples) {
  const auto empty = solve_csp(CspInstance(5), 2);
  EXPECT_TRUE(empty.satisfiable);
  ASSERT_TRUE(empty.assignment.has_value());
  EXPECT_EQ(empty.assignment->size(), 2u);

  CspInstance k5(5);
  for (Var u = 0; u < 5; ++u) {
    for (Var v = u + 1; v < 5; ++v) k5.add_constraint(fn::nand(2), {u, v});
  }
  const auto no = solve_csp(k5, 2);
  EXPECT_FALSE(no.satisfiable);
  EXPECT_FALSE(no.assignment.has_value());
  ASSERT_TRUE(no.regime.has_value());
  EXPECT_EQ(*no.regime, (Regime{RegimeKind::Kis, 0}));
}

TEST(SolveCsp, MatchesOracleOnBinaryFamilies) {
  Rng rng(300);
  for (int trial = 0; trial < 300; ++trial) {
    const auto fam = random_family(rng);
    const std::size_t n = 3 + rng.below(12);
    const auto inst = random_csp(n, fam, rng.below(3 * n), rng);
    const int k = static_cast<int>(rng.below(6));
    const auto got = solve_csp(inst, k);
    EXPECT_EQ(got.satisfiable, has_solution(inst, k)) << "trial " << trial << " route " << got.route;
    if (got.satisfiable) {
      ASSERT_TRUE(got.assignment.has_value());
      EXPECT_EQ(static_cast<int>(got.assignment->size()), k);
      EXPECT_TRUE(inst.satisfied_by(*got.assignment));
    }
  }
}

TEST(SolveCsp, MatchesOracleOnNandImpl) {
  Rng rng(301);
  const std::vector<ConstraintFunction> fam{fn::nand(2), fn::impl()};
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 5 + rng.below(10);
    const auto inst = random_csp(n, fam, n + rng.below(2 * n), rng);
    const int k = 1 + static_cast<int>(rng.below(5));
    const auto got = solve_csp(inst, k);
    EXPECT_EQ(got.satisfiable, has_solution(inst, k)) << "trial " << trial << " route " << got.route;
    if (got.assignment) EXPECT_TRUE(inst.satisfied_by(*got.assignment));
  }
}

TEST(SolveCsp, HigherArity) {
  Rng rng(302);
  const std::vector<ConstraintFunction> fams[] = {
      {fn::nand(3), fn::nand(2)},
      {fn::nand(3), ConstraintFunction::from_bits("11101000"), fn::impl()},
      {ConstraintFunction::from_bits("01111111"), fn::nand(2)},
  };
  for (int trial = 0; trial < 150; ++trial) {
    const auto& fam = fams[trial % 3];
    const std::size_t n = 4 + rng.below(9);
    const auto inst = random_csp(n, fam, rng.below(3 * n), rng);
    const int k = static_cast<int>(rng.below(5));
    const auto got = solve_csp(inst, k);
    EXPECT_EQ(got.satisfiable, has_solution(inst, k)) << "trial " << trial << " route " << got.route;
    if (got.assignment) EXPECT_TRUE(inst.satisfied_by(*got.assignment));
    EXPECT_EQ(got.regime.has_value(), inst.max_arity() <= 2);
  }
}

TEST(SolveCsp, IsolatedVariablePath) {
  Rng rng(303);
  const std::vector<ConstraintFunction> fam{fn::nand(2), fn::or2(), fn::impl()};
  const auto inst = random_csp(2000, fam, 20, rng);
  const auto got = solve_csp(inst, 4);
  EXPECT_TRUE(got.satisfiable);
  EXPECT_EQ(got.route, "isolated");
  ASSERT_TRUE(got.assignment.has_value());
  EXPECT_TRUE(inst.satisfied_by(*got.assignment));
}

}  // namespace
}  // namespace sparsek
