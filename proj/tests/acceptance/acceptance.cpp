// End-to-end acceptance checks. Prints one PASS/FAIL line per criterion and
// exits non-zero if any criterion fails.
//
//   sparsek_acceptance            run everything
//   sparsek_acceptance 4 11       run only the listed criteria

#include <algorithm>
#include <bit>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "sparsek/clique_engine.hpp"
#include "sparsek/constraint.hpp"
#include "sparsek/csp_core.hpp"
#include "sparsek/kis_solver.hpp"
#include "sparsek/oracle.hpp"
#include "sparsek/random_models.hpp"
#include "sparsek/reductions.hpp"
#include "sparsek/turan_greedy.hpp"

namespace {

using namespace sparsek;
namespace fn = functions;
using Clock = std::chrono::steady_clock;

// Pinned limits.
constexpr double kCrit1Seconds = 60.0;
constexpr double kScalingRatio = 2.5;
constexpr int kScalingRuns = 5;
constexpr double kSmokeSeconds = 120.0;
constexpr double kLargeSmokeSeconds = 600.0;
constexpr double kBruteInfeasibleChecks = 1e11;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Outcome {
  bool pass = true;
  std::string detail;
};

// Collects mismatches; remembers the first few for the report.
class Tally {
 public:
  void check(bool ok, const std::string& what) {
    ++total_;
    if (ok) return;
    ++failed_;
    if (failed_ <= 3) first_.push_back(what);
  }
  bool ok() const { return failed_ == 0; }
  std::string summary() const {
    std::ostringstream out;
    out << (total_ - failed_) << "/" << total_ << " checks";
    for (const auto& s : first_) out << "; " << s;
    return out.str();
  }

 private:
  std::size_t total_ = 0;
  std::size_t failed_ = 0;
  std::vector<std::string> first_;
};

std::string describe(const std::string& label, int trial) { return label + " #" + std::to_string(trial); }

Hypergraph random_three(Rng& rng, std::size_t n, std::size_t m2, std::size_t m3) {
  std::array<std::size_t, kMaxArity + 1> per{};
  per[2] = std::min<std::size_t>(m2, binomial_u64(n, 2));
  per[3] = std::min<std::size_t>(m3, binomial_u64(n, 3));
  return random_hypergraph(n, per, rng);
}

CspInstance random_nand(Rng& rng, std::size_t n, double p) {
  CspInstance inst(n);
  for (Var u = 0; u < n; ++u) {
    for (Var v = u + 1; v < n; ++v) {
      if (rng.bernoulli(p)) inst.add_constraint(fn::nand(2), {u, v});
    }
  }
  return inst;
}

bool has_solution(const CspInstance& inst, int k) { return oracle::brute_solve_csp(inst, k).has_value(); }

bool independent_in(const Graph& g, std::span<const Vertex> s) {
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (std::size_t j = i + 1; j < s.size(); ++j) {
      if (g.has_edge(s[i], s[j])) return false;
    }
  }
  return std::set<Vertex>(s.begin(), s.end()).size() == s.size();
}

// A 0-valid ternary function whose smallest violating weight is 2.
const ConstraintFunction kAtMostOneOfThree = ConstraintFunction::from_bits("11101000", "amo3");

Outcome crit1() {
  Rng rng(1001);
  Tally tally;
  const auto start = Clock::now();
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 8 + static_cast<std::size_t>(trial % 7);
    const double gamma3 = 1.5 + 1.5 * (trial / 199.0);
    const double gamma2 = 1.0 + 0.5 * rng.unit();
    const auto h = random_three(rng, n, edges_for_density(n, 2, gamma2), edges_for_density(n, 3, gamma3));
    for (int k : {3, 6}) {
      tally.check(count_k_is_hypergraph(h, k) == oracle::brute_count_k_is(h, k), describe("seed", trial));
    }
  }
  const double elapsed = seconds_since(start);
  tally.check(elapsed < kCrit1Seconds, "over time budget");
  char buf[64];
  std::snprintf(buf, sizeof buf, "; %.2f s", elapsed);
  return {tally.ok(), tally.summary() + buf};
}

Outcome crit2() {
  Rng rng(1002);
  Tally tally;
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 6 + rng.below(7);
    std::array<std::size_t, kMaxArity + 1> per{};
    for (int r = 2; r <= 5; ++r) per[r] = rng.below(std::min<std::uint64_t>(3 * n, binomial_u64(n, r)) + 1);
    const auto h = random_hypergraph(n, per, rng);
    const int k = 1 + static_cast<int>(rng.below(6));
    const Count want = oracle::brute_count_k_is(h, k);
    tally.check(count_k_is_hypergraph(h, k) == want, describe("hypergraph", trial));
    tally.check(count_k_is_mixed(h, k) == want, describe("mixed", trial));
  }
  return {tally.ok(), tally.summary()};
}

Outcome crit3() {
  Rng rng(1003);
  Tally tally;
  for (double p : {0.2, 0.5, 0.8}) {
    for (int trial = 0; trial < 50; ++trial) {
      const auto g = random_graph(12, p, rng);
      for (int k = 3; k <= 6; ++k) {
        try {
          tally.check(count_k_cliques(g, k) == oracle::brute_count_k_cliques(g, k), describe("graph", trial));
        } catch (const InternalError& e) {
          tally.check(false, e.what());
        }
      }
    }
  }
  return {tally.ok(), tally.summary()};
}

Outcome crit4() {
  Rng rng(1004);
  Tally tally;
  for (int trial = 0; trial < 100; ++trial) {
    const int k = 3 + trial % 3;
    const std::size_t base = 4 * static_cast<std::size_t>(k * k);
    const std::size_t n = base + rng.below(4 * base);
    const std::size_t cap = (n * n) / (2 * static_cast<std::size_t>(k * k));
    const std::size_t m = std::min<std::size_t>(cap, binomial_u64(n, 2));
    const auto g = random_graph_edges(n, trial % 4 == 0 ? m : rng.below(m + 1), rng);
    if (!turan_premise(n, g.num_edges(), k)) {
      tally.check(false, describe("premise", trial));
      continue;
    }
    const auto found = find_k_is_sparse(g, k);
    tally.check(found && found->size() == static_cast<std::size_t>(k) && independent_in(g, *found), describe("graph", trial));
  }
  return {tally.ok(), tally.summary()};
}

Outcome crit5() {
  Rng rng(1005);
  Tally tally;
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = 10 + rng.below(4);
    const auto h = random_three(rng, n, rng.below(2 * n), n + rng.below(3 * n));
    for (int k : {4, 6}) {
      const Count base = count_invalid(h, k);
      for (int p = 0; p < 20; ++p) {
        std::vector<std::size_t> order(h.num_edges());
        std::iota(order.begin(), order.end(), std::size_t{0});
        rng.shuffle(std::span<std::size_t>(order));
        tally.check(count_invalid(reorder_edges(h, order), k) == base, describe("instance", trial));
      }
    }
  }
  return {tally.ok(), tally.summary()};
}

Outcome crit6() {
  Rng rng(1006);
  Tally tally;
  std::size_t evaluated = 0;
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 6 + rng.below(5);
    const auto h = random_three(rng, n, rng.below(n), n + rng.below(2 * n));
    for (int k = 3; k <= 7; ++k) {
      const std::size_t limit = static_cast<std::size_t>((k + 2) / 3);
      for (std::size_t size = limit + 1; 3 * size <= n; ++size) {
        for (const auto& m : enumerate_matchings(h, size)) {
          ++evaluated;
          tally.check(restricted_term(h, m.edges, k) == 0, describe("instance", trial));
          tally.check(oracle::brute_restricted_term(h, m.edges, k) == 0, describe("oracle", trial));
        }
      }
    }
  }
  return {tally.ok() && evaluated > 0, tally.summary()};
}

std::vector<ConstraintFunction> draw_family(Rng& rng, int trial) {
  if (trial % 3 == 0) return {fn::nand(2), fn::impl()};
  std::vector<ConstraintFunction> pool{fn::nand(2), fn::impl(), fn::eq(), fn::or2(), fn::nor2()};
  // An arbitrary binary function that is neither constant.
  pool.push_back(ConstraintFunction(2, 1 + rng.below(14), "f"));
  std::vector<ConstraintFunction> fam;
  while (fam.empty()) {
    for (const auto& f : pool) {
      if (rng.bernoulli(0.4)) fam.push_back(f);
    }
  }
  return fam;
}

Outcome crit7() {
  Rng rng(1007);
  Tally tally;
  std::map<std::string, int> routes;
  for (int trial = 0; trial < 300; ++trial) {
    const auto fam = draw_family(rng, trial);
    const std::size_t n = 3 + rng.below(12);
    const auto inst = random_csp(n, fam, rng.below(3 * n + 1), rng);
    const int k = static_cast<int>(rng.below(6));
    const auto got = solve_csp(inst, k);
    ++routes[got.route];
    bool ok = got.satisfiable == has_solution(inst, k);
    if (got.satisfiable) {
      ok = ok && got.assignment && got.assignment->size() == static_cast<std::size_t>(k) && inst.satisfied_by(*got.assignment);
    }
    tally.check(ok, describe("seed", trial) + " via " + got.route);
  }
  tally.check(routes.contains("nand-impl"), "nand-impl route never exercised");
  std::string detail = tally.summary() + "; routes";
  for (const auto& [r, c] : routes) detail += " " + r + "=" + std::to_string(c);
  return {tally.ok(), detail};
}

Outcome crit8() {
  using K = RegimeKind;
  const std::vector<std::pair<std::vector<ConstraintFunction>, Regime>> table{
      {{fn::nand(2)}, {K::Kis, 0}},
      {{fn::impl()}, {K::Subexponential, 0}},
      {{fn::eq()}, {K::Linear, 0}},
      {{fn::nand(2), fn::eq()}, {K::Clique, 0}},
      {{fn::nand(2), fn::impl()}, {K::Clique, 0}},
      {{fn::impl(), fn::eq()}, {K::Subexponential, 0}},
      {{fn::or2()}, {K::Linear, 0}},
      {{fn::nand(2), fn::or2()}, {K::Clique, 1}},
      {{fn::nor2()}, {K::Linear, 0}},
      {{fn::nand(2), fn::nor2()}, {K::Clique, 0}},
      {{fn::eq(), fn::or2()}, {K::Linear, 0}},
      {{fn::nand(2), fn::impl(), fn::eq()}, {K::Clique, 0}},
  };
  Tally tally;
  for (std::size_t i = 0; i < table.size(); ++i) {
    const auto& [fam, want] = table[i];
    const Regime got = classify_binary_family(fam);
    tally.check(got == want, "family " + std::to_string(i) + " gave " + to_string(got) + ", want " + to_string(want));
  }
  return {tally.ok(), tally.summary()};
}

Outcome crit9() {
  Rng rng(1009);
  Tally dense, sparse, kis_lb, mixed, binary;

  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = 3 + rng.below(4);
    const auto src = random_nand(rng, n, 0.2 + 0.6 * rng.unit());
    const int k = 1 + static_cast<int>(rng.below(std::min<std::size_t>(n, 3)));
    const auto out = dense_embed(src, kAtMostOneOfThree, 2.0 + rng.unit(), k);
    dense.check(has_solution(out.instance, out.k) == has_solution(src, k), describe("dense", trial));
  }

  const std::vector<ConstraintFunction> sources{fn::nand(2), fn::impl(), fn::nand(3)};
  const ConstraintFunction targets[] = {fn::nand(2), fn::nand(3), fn::impl(), kAtMostOneOfThree};
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = 3 + rng.below(3);
    const auto src = random_csp(n, sources, 1 + rng.below(2 * n), rng);
    const auto& f = targets[trial % 4];
    const int d = u_min(f);
    const int k = std::max(2 * d - 2, 1) + static_cast<int>(rng.below(2));
    const auto out = sparse_embed(src, f, static_cast<double>(d), k, static_cast<double>(d));
    sparse.check(has_solution(out.instance, out.k) == has_solution(src, k), describe("sparse", trial));
  }

  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = 5 + rng.below(4);
    const auto core = random_three(rng, n, 0, rng.below(binomial_u64(n, 3) + 1));
    const auto out = gen_kis_sparse_lb(core, 2.0 + rng.unit());
    const int k = 3 + static_cast<int>(rng.below(2));
    kis_lb.check(oracle::brute_find_k_is(out, k).has_value() == oracle::brute_find_k_is(core, k).has_value(),
                 describe("kis-lb", trial));
  }

  for (int trial = 0; trial < 50; ++trial) {
    const bool dense_case = trial % 2 == 0;
    const std::size_t parts = dense_case ? 3 + rng.below(2) : 3;
    const std::vector<std::size_t> sizes(parts, dense_case ? 2 : 2 + rng.below(2));
    const auto in = random_partite(sizes, 3, 0.3 + 0.6 * rng.unit(), rng);
    const int arity = dense_case ? 4 + static_cast<int>(rng.below(2)) : 3 + static_cast<int>(rng.below(2));
    const double gamma = dense_case ? 3.0 : 2.0 + 0.9 * rng.unit();
    const auto out = gen_mixed_lb(in, arity, gamma);
    mixed.check(oracle::brute_find_k_is(out.hypergraph, out.k).has_value() == oracle::brute_has_colorful_is(in.hypergraph, in.parts),
                describe("mixed-lb", trial));
  }

  const std::vector<std::vector<ConstraintFunction>> families{{fn::eq()},  {fn::impl()},  {fn::or2()},
                                                              {fn::xor2()}, {fn::and2()}, {fn::nor2(), fn::or2()}};
  for (int trial = 0; trial < 50; ++trial) {
    const auto& family = families[static_cast<std::size_t>(trial) % families.size()];
    const std::size_t n = 3 + rng.below(4);
    const auto src = random_nand(rng, n, rng.unit());
    const int k = 1 + static_cast<int>(rng.below(3));
    const auto out = gen_binary_hardness(src, family, 1.0 + rng.unit(), k);
    binary.check(has_solution(out.instance, out.k) == has_solution(src, k), describe("binary", trial));
  }

  const bool ok = dense.ok() && sparse.ok() && kis_lb.ok() && mixed.ok() && binary.ok();
  return {ok, "dense " + dense.summary() + " | sparse " + sparse.summary() + " | kis-lb " + kis_lb.summary() +
                  " | mixed-lb " + mixed.summary() + " | binary " + binary.summary()};
}

bool block_satisfied(const LessThanGadget& g, std::uint32_t mask) {
  for (const auto& t : g.tuples) {
    std::uint64_t row = 0;
    for (std::size_t p = 0; p < t.size(); ++p) row |= static_cast<std::uint64_t>((mask >> t[p]) & 1U) << p;
    if (!g.function.at(row)) return false;
  }
  return true;
}

Outcome crit10() {
  Tally tally;
  for (const auto& f : {fn::nand(2), fn::nand(3), kAtMostOneOfThree}) {
    const int c = u_min(f);
    for (int block = f.arity(); block <= 8; ++block) {
      std::vector<Var> vars(static_cast<std::size_t>(block));
      std::iota(vars.begin(), vars.end(), Var{0});
      const auto g = build_less_than(f, block, vars);
      const int k = block - f.arity();
      for (std::uint32_t mask = 0; mask < (1U << block); ++mask) {
        const int w = std::popcount(mask);
        const bool sat = block_satisfied(g, mask);
        if (w < c) tally.check(sat, f.name() + " K=" + std::to_string(block) + " low weight rejected");
        if (w >= c && w <= k) tally.check(!sat, f.name() + " K=" + std::to_string(block) + " gap weight accepted");
      }
    }
  }
  return {tally.ok(), tally.summary()};
}

double median(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  return v[v.size() / 2];
}

// Median wall time of `run` over kScalingRuns repetitions.
double time_median(const std::function<void()>& run) {
  std::vector<double> samples;
  for (int r = 0; r < kScalingRuns; ++r) {
    const auto start = Clock::now();
    run();
    samples.push_back(seconds_since(start));
  }
  return median(samples);
}

Outcome crit11() {
  Rng rng(1011);
  Tally isolated, greedy;
  const std::vector<ConstraintFunction> any_fam{fn::nand(2), fn::nor2(), fn::impl(), fn::eq()};
  const std::vector<ConstraintFunction> zero_valid{fn::nand(2), fn::nand(3), kAtMostOneOfThree};

  for (int trial = 0; trial < 100; ++trial) {
    const int k = 2 + static_cast<int>(rng.below(5));
    const std::size_t n = 500 + rng.below(5000);
    const std::size_t limit = n / (2 * static_cast<std::size_t>(k) * (any_fam.size() + 1)) - 1;
    auto inst = random_csp(n, any_fam, rng.below(limit), rng);
    // One 0-invalid constraint keeps a solution while forcing a branching step.
    if (trial % 2 == 1) {
      const auto a = static_cast<Var>(rng.below(n));
      const auto b = static_cast<Var>((a + 1 + rng.below(n - 1)) % n);
      inst.add_constraint(fn::or2(), {a, b});
    }
    const auto got = solve_csp(inst, k);
    isolated.check(got.route == "isolated" && got.assignment && got.assignment->size() == static_cast<std::size_t>(k) &&
                       inst.satisfied_by(*got.assignment),
                   describe("isolated", trial) + " via " + got.route);
  }
  for (int trial = 0; trial < 100; ++trial) {
    const int k = 2 + static_cast<int>(rng.below(5));
    const std::size_t n = 300 + rng.below(3000);
    const auto inst = random_csp(n, zero_valid, n, rng);
    if (!sparse_csp_premise(inst, k)) {
      greedy.check(false, describe("premise", trial));
      continue;
    }
    const auto got = sparse_csp_solve(inst, k);
    greedy.check(got && got->size() == static_cast<std::size_t>(k) && inst.satisfied_by(*got), describe("greedy", trial));
  }

  // Soft scaling check over n = 2^12 .. 2^16, n + m doubling each step.
  const int k = 4;
  const int reps_isolated = 400;
  const int reps_greedy = 100;
  std::vector<double> t_isolated, t_greedy;
  for (int e = 12; e <= 16; ++e) {
    const std::size_t n = std::size_t{1} << e;
    const auto a = random_csp(n, any_fam, n / (4 * k * any_fam.size()), rng);
    const auto b = random_csp(n, zero_valid, n, rng);
    t_isolated.push_back(time_median([&] {
      for (int r = 0; r < reps_isolated; ++r) (void)solve_csp(a, k);
    }));
    t_greedy.push_back(time_median([&] {
      for (int r = 0; r < reps_greedy; ++r) (void)sparse_csp_solve(b, k);
    }));
  }
  Tally scaling;
  std::ostringstream ratios;
  ratios.precision(2);
  ratios << std::fixed << "; step ratios isolated";
  for (std::size_t i = 1; i < t_isolated.size(); ++i) {
    const double r = t_isolated[i] / t_isolated[i - 1];
    ratios << " " << r;
    scaling.check(r <= kScalingRatio, "isolated step " + std::to_string(i));
  }
  ratios << ", greedy";
  for (std::size_t i = 1; i < t_greedy.size(); ++i) {
    const double r = t_greedy[i] / t_greedy[i - 1];
    ratios << " " << r;
    scaling.check(r <= kScalingRatio, "greedy step " + std::to_string(i));
  }
  ratios << "; ms at 2^12/2^16 isolated " << 1e3 * t_isolated.front() << "/" << 1e3 * t_isolated.back() << ", greedy "
         << 1e3 * t_greedy.front() << "/" << 1e3 * t_greedy.back();
  const bool ok = isolated.ok() && greedy.ok() && scaling.ok();
  return {ok, "isolated " + isolated.summary() + " | greedy " + greedy.summary() + " | scaling " + scaling.summary() +
                  ratios.str()};
}

Outcome crit12() {
  Rng rng(1012);
  std::ostringstream detail;
  detail.precision(2);
  detail << std::fixed;
  bool ok = true;

  {
    const std::size_t n = 60;
    const auto h = random_three(rng, n, n * n / 6, n * n - n * n / 6);
    const auto start = Clock::now();
    const Count got = count_k_is_hypergraph(h, 6);
    const double t = seconds_since(start);
    const auto brute_start = Clock::now();
    const Count want = oracle::brute_count_k_is(h, 6, 100'000'000);
    const double bt = seconds_since(brute_start);
    ok = ok && got == want && t < kSmokeSeconds;
    detail << "n=60 m=" << h.num_edges() << " k=6: " << got << " sets in " << t << " s (brute force " << bt << " s"
           << (got == want ? ", agrees" : ", DISAGREES") << ")";
  }
  {
    const std::size_t n = 80;
    const int k = 9;
    const auto h = random_three(rng, n, n * n / 6, n * n - n * n / 6);
    const double checks = std::stod(binomial(static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(k)).str());
    const auto start = Clock::now();
    const Count got = count_k_is_hypergraph(h, k);
    const double t = seconds_since(start);
    ok = ok && checks > kBruteInfeasibleChecks && t < kLargeSmokeSeconds;
    detail << "; n=80 m=" << h.num_edges() << " k=9: " << got << " sets in " << t << " s (brute force would need "
           << std::scientific << checks << std::fixed << " subset checks)";
  }
  return {ok, detail.str()};
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"3-hypergraph counts match brute force", crit1},
      {"mixed-arity counts match brute force", crit2},
      {"clique counts match brute force", crit3},
      {"greedy independent set under the sparsity premise", crit4},
      {"invalid-solution count independent of edge order", crit5},
      {"oversized matchings contribute nothing", crit6},
      {"CSP dispatcher matches brute force", crit7},
      {"binary family classification table", crit8},
      {"embeddings preserve the answer", crit9},
      {"LessThan gadget weight spectrum", crit10},
      {"linear sparse-regime solvers", crit11},
      {"performance smoke", crit12},
  };
  std::set<int> only;
  for (int i = 1; i < argc; ++i) only.insert(std::atoi(argv[i]));

  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const int id = static_cast<int>(i) + 1;
    if (!only.empty() && !only.contains(id)) continue;
    const auto& [name, run] = criteria[i];
    const auto start = Clock::now();
    Outcome out;
    try {
      out = run();
    } catch (const std::exception& e) {
      out = {false, std::string("exception: ") + e.what()};
    }
    if (!out.pass) ++failures;
    std::printf("%s %2d %s (%.2f s): %s\n", out.pass ? "PASS" : "FAIL", id, name.c_str(), seconds_since(start),
                out.detail.c_str());
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
