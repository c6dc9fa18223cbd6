#include <algorithm>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <sstream>

#include <CLI11.hpp>

#include "cli_support.hpp"
#include "sparsek/clique_engine.hpp"
#include "sparsek/constraint.hpp"
#include "sparsek/csp_core.hpp"
#include "sparsek/hgr_io.hpp"
#include "sparsek/kis_solver.hpp"
#include "sparsek/oracle.hpp"
#include "sparsek/random_models.hpp"
#include "sparsek/turan_greedy.hpp"

namespace sparsek::cli {
namespace {

struct Suite {
  std::string recipe = "random-hgr3";
  std::vector<std::size_t> n;
  std::vector<double> gamma;
  std::vector<int> k;
  std::vector<std::string> solvers;
  int reps = 1;
  std::uint64_t seed = 1;
};

Suite load_suite(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot read " + path);
  Json j;
  try {
    j = Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw InvalidArgument("suite " + path + ": " + e.what());
  }
  Suite s;
  s.recipe = j.value("recipe", s.recipe);
  s.n = j.value("n", s.n);
  s.gamma = j.value("gamma", s.gamma);
  s.k = j.value("k", s.k);
  s.solvers = j.value("solvers", s.solvers);
  s.reps = j.value("reps", s.reps);
  s.seed = j.value("seed", s.seed);
  return s;
}

struct Row {
  std::string recipe;
  std::size_t n = 0;
  double gamma = 0;
  std::size_t m = 0;
  int k = 0;
  std::string solver;
  std::int64_t elapsed_ns = 0;
  std::string decision;
};

using Outcome = std::pair<std::size_t, std::function<std::string()>>;

const std::vector<std::string>& solvers_for(const std::string& recipe) {
  static const std::map<std::string, std::vector<std::string>> table{
      {"random-hgr3", {"ie", "mixed", "brute"}},
      {"random-graph", {"clique", "greedy", "brute"}},
      {"random-csp", {"csp", "brute"}},
  };
  auto it = table.find(recipe);
  if (it == table.end()) throw InvalidArgument("unknown bench recipe '" + recipe + "'");
  return it->second;
}

std::string yes_no(bool b) { return b ? "YES" : "NO"; }

// Builds the instance for one cell and returns its size together with a
// closure that runs the solver and reports the decision.
Outcome prepare(const std::string& recipe, const std::string& solver, std::size_t n, double gamma, int k, Rng& rng) {
  if (recipe == "random-hgr3") {
    std::array<std::size_t, kMaxArity + 1> per{};
    per[3] = edges_for_density(n, 3, gamma);
    auto h = std::make_shared<Hypergraph>(random_hypergraph(n, per, rng));
    const std::size_t m = h->num_edges();
    if (solver == "ie") return {m, [h, k] { return yes_no(count_k_is_hypergraph(*h, k) > 0); }};
    if (solver == "mixed") return {m, [h, k] { return yes_no(count_k_is_mixed(*h, k) > 0); }};
    return {m, [h, k] { return yes_no(oracle::brute_find_k_is(*h, k).has_value()); }};
  }
  if (recipe == "random-graph") {
    auto g = std::make_shared<Graph>(random_graph_edges(n, edges_for_density(n, 2, gamma), rng));
    const std::size_t m = g->num_edges();
    if (solver == "clique") return {m, [g, k] { return yes_no(count_k_is(*g, k) > 0); }};
    if (solver == "greedy") {
      return {m, [g, k] { return find_k_is_sparse(*g, k) ? std::string("YES") : std::string("UNKNOWN"); }};
    }
    return {m, [g, k] { return yes_no(oracle::brute_count_k_is(*g, k) > 0); }};
  }
  const std::vector<ConstraintFunction> fam{functions::nand(2), functions::impl()};
  const auto count = static_cast<std::size_t>(std::ceil(std::pow(static_cast<double>(n), gamma)));
  auto inst = std::make_shared<CspInstance>(random_csp(n, fam, count, rng));
  const std::size_t m = inst->num_constraints();
  if (solver == "csp") return {m, [inst, k] { return yes_no(solve_csp(*inst, k).satisfiable); }};
  return {m, [inst, k] { return yes_no(oracle::brute_solve_csp(*inst, k).has_value()); }};
}

std::vector<Row> run_suite(const Suite& s) {
  const auto& known = solvers_for(s.recipe);
  const std::vector<std::string> solvers = s.solvers.empty() ? known : s.solvers;
  for (const auto& solver : solvers) {
    if (std::find(known.begin(), known.end(), solver) == known.end()) {
      throw InvalidArgument("solver '" + solver + "' does not apply to recipe " + s.recipe);
    }
  }
  std::vector<Row> rows;
  std::uint64_t cell = 0;
  for (std::size_t n : s.n) {
    for (double gamma : s.gamma) {
      for (int k : s.k) {
        for (int rep = 0; rep < s.reps; ++rep, ++cell) {
          // Every solver of a cell sees the same instance.
          for (const auto& solver : solvers) {
            Rng rng(s.seed + 0x9E3779B97F4A7C15ULL * cell);
            auto [m, run] = prepare(s.recipe, solver, n, gamma, k, rng);
            Row row{s.recipe, n, gamma, m, k, solver, 0, ""};
            Stopwatch clock;
            try {
              row.decision = run();
            } catch (const ResourceLimit&) {
              row.decision = "LIMIT";
            }
            row.elapsed_ns = clock.elapsed_ns();
            rows.push_back(std::move(row));
          }
        }
      }
    }
  }
  return rows;
}

std::string csv(const std::vector<Row>& rows) {
  std::ostringstream out;
  out << "recipe,n,m,k,solver,elapsed_ns,decision\n";
  for (const auto& r : rows) {
    out << r.recipe << ',' << r.n << ',' << r.m << ',' << r.k << ',' << r.solver << ',' << r.elapsed_ns << ','
        << r.decision << '\n';
  }
  return out.str();
}

// Median elapsed time per (n, gamma, k, solver), in grid order.
std::string plotdata(const std::vector<Row>& rows) {
  std::ostringstream out;
  out << "recipe,n,gamma,k,solver,median_ns,samples\n";
  std::vector<std::tuple<std::size_t, double, int, std::string>> order;
  std::map<std::tuple<std::size_t, double, int, std::string>, std::vector<std::int64_t>> samples;
  for (const auto& r : rows) {
    const auto key = std::make_tuple(r.n, r.gamma, r.k, r.solver);
    auto [it, fresh] = samples.try_emplace(key);
    if (fresh) order.push_back(key);
    it->second.push_back(r.elapsed_ns);
  }
  const std::string recipe = rows.empty() ? "" : rows.front().recipe;
  for (const auto& key : order) {
    auto v = samples[key];
    std::sort(v.begin(), v.end());
    const auto& [n, gamma, k, solver] = key;
    out << recipe << ',' << n << ',' << gamma << ',' << k << ',' << solver << ',' << v[v.size() / 2] << ','
        << v.size() << '\n';
  }
  return out.str();
}

}  // namespace

void add_bench_command(CLI::App& app, Context& ctx) {
  struct Args {
    std::string suite_path;
    Suite suite;
    std::string out;
    std::string plot;
  };
  auto a = std::make_shared<Args>();
  auto* cmd = app.add_subcommand("bench", "Time solvers over a grid of generated instances");
  cmd->add_option("--suite", a->suite_path, "JSON suite descriptor")->check(CLI::ExistingFile);
  cmd->add_option("--recipe", a->suite.recipe, "random-hgr3, random-graph or random-csp");
  cmd->add_option("--n", a->suite.n, "Instance sizes")->delimiter(',');
  cmd->add_option("--gamma", a->suite.gamma, "Density exponents")->delimiter(',');
  cmd->add_option("-k", a->suite.k, "Solution sizes")->delimiter(',');
  cmd->add_option("--solvers", a->suite.solvers, "Solvers to time (default: all for the recipe)")->delimiter(',');
  cmd->add_option("--reps", a->suite.reps, "Instances per grid cell")->check(CLI::PositiveNumber);
  cmd->add_option("--seed", a->suite.seed, "Base PRNG seed");
  cmd->add_option("-o,--out", a->out, "CSV output (default stdout)");
  cmd->add_option("--plotdata", a->plot, "Also write per-cell medians to this file");
  cmd->callback([a, &ctx] {
    const Suite suite = a->suite_path.empty() ? a->suite : load_suite(a->suite_path);
    const auto rows = run_suite(suite);
    write_output(a->out, csv(rows));
    if (!a->plot.empty()) write_output(a->plot, plotdata(rows));
    ctx.exit_code = kOk;
  });
}

}  // namespace sparsek::cli
