#include <iostream>
#include <memory>

#include <CLI11.hpp>

#include "cli_support.hpp"
#include "sparsek/constraint.hpp"
#include "sparsek/csp_core.hpp"
#include "sparsek/hgr_io.hpp"
#include "sparsek/kis_solver.hpp"
#include "sparsek/oracle.hpp"

namespace sparsek::cli {
namespace {

struct KisArgs {
  std::string path;
  int k = 0;
  bool count = false;
  bool witness = false;
  bool mixed = false;
  std::size_t node_cap = CliqueOptions{}.node_cap;
  OutputFlags out;
};

struct CspArgs {
  std::string path;
  int k = 0;
  bool regime = false;
  bool witness = false;
  std::size_t search_cap = CspSolveOptions{}.search_cap;
  OutputFlags out;
};

struct OracleArgs {
  std::string path;
  int k = 0;
  bool count = false;
  bool witness = false;
  std::uint64_t cap = oracle::kDefaultCap;
  OutputFlags out;
};

void say(const OutputFlags& out, const std::string& line) {
  if (!out.json_on_stdout()) std::cout << line << "\n";
}

void check_witness(const Hypergraph& h, std::span<const Vertex> w, int k) {
  if (w.size() != static_cast<std::size_t>(k) || !is_independent(h, w)) {
    throw InternalError("witness failed independent verification");
  }
}

void check_assignment(const CspInstance& inst, std::span<const Var> a, int k) {
  if (a.size() != static_cast<std::size_t>(k) || !inst.satisfied_by(a)) {
    throw InternalError("assignment failed independent verification");
  }
}

int run_kis(const KisArgs& a, bool count_only) {
  const Hypergraph h = read_hypergraph(a.path);
  KisOptions options;
  options.clique.node_cap = a.node_cap;
  Stopwatch clock;
  Json report = report_header(count_only ? "count-kis" : "solve-kis", a.path, a.k);
  report.update(profile_fields(h));

  Count count;
  std::optional<std::vector<Vertex>> witness;
  if (a.witness && !count_only) {
    auto d = decide_k_is(h, a.k, true, options);
    count = d.count;
    witness = std::move(d.witness);
  } else {
    count = a.mixed ? count_k_is_mixed(h, a.k, options) : count_k_is_hypergraph(h, a.k, options);
  }
  const bool yes = count > 0;
  report["decision"] = yes ? "YES" : "NO";
  report["count"] = format_count(count);
  if (witness) {
    check_witness(h, *witness, a.k);
    report["witness"] = json_vertices(*witness);
  } else if (a.witness) {
    report["witness"] = nullptr;
  }
  report["elapsed_ns"] = clock.elapsed_ns();

  if (count_only) {
    say(a.out, format_count(count));
  } else {
    say(a.out, yes ? "YES" : "NO");
    if (a.count) say(a.out, "count " + format_count(count));
    if (witness) say(a.out, "witness " + format_vertices(*witness));
  }
  return finish(a.out, report, yes);
}

int run_csp(const CspArgs& a) {
  const CspInstance inst = read_csp(a.path);
  CspSolveOptions options;
  options.search_cap = a.search_cap;
  Stopwatch clock;
  const CspSolution sol = solve_csp(inst, a.k, options);
  Json report = report_header("solve-csp", a.path, a.k);
  report.update(profile_fields(inst));
  report["decision"] = sol.satisfiable ? "YES" : "NO";
  report["route"] = sol.route;
  report["regime"] = sol.regime ? Json(to_string(*sol.regime)) : Json(nullptr);
  if (sol.assignment) {
    check_assignment(inst, *sol.assignment, a.k);
    report["assignment"] = json_vertices(*sol.assignment);
  }
  report["elapsed_ns"] = clock.elapsed_ns();

  say(a.out, sol.satisfiable ? "YES" : "NO");
  if (a.regime) say(a.out, "regime " + (sol.regime ? to_string(*sol.regime) : std::string("n/a")));
  if (a.witness && sol.assignment) say(a.out, "assignment " + format_vertices(*sol.assignment));
  return finish(a.out, report, sol.satisfiable);
}

int run_oracle(const OracleArgs& a) {
  const std::string text = read_text_file(a.path);
  Stopwatch clock;
  Json report = report_header("oracle", a.path, a.k);
  bool yes = false;
  std::optional<std::vector<std::uint32_t>> witness;
  std::optional<Count> count;
  if (sniff_kind(text) == FileKind::Hgr) {
    const Hypergraph h = parse_hypergraph(text);
    report.update(profile_fields(h));
    if (a.count) {
      count = oracle::brute_count_k_is(h, a.k, a.cap);
      yes = *count > 0;
    }
    if (!a.count || a.witness) {
      witness = oracle::brute_find_k_is(h, a.k, a.cap);
      yes = witness.has_value();
      if (witness) check_witness(h, *witness, a.k);
    }
  } else {
    const CspInstance inst = parse_csp(text);
    report.update(profile_fields(inst));
    if (a.count) {
      count = Count(oracle::brute_all_solutions(inst, a.k, a.cap).size());
      yes = *count > 0;
    }
    if (!a.count || a.witness) {
      witness = oracle::brute_solve_csp(inst, a.k, a.cap);
      yes = witness.has_value();
      if (witness) check_assignment(inst, *witness, a.k);
    }
  }
  report["decision"] = yes ? "YES" : "NO";
  if (count) report["count"] = format_count(*count);
  if (a.witness) report["witness"] = witness ? json_vertices(*witness) : Json(nullptr);
  report["elapsed_ns"] = clock.elapsed_ns();

  say(a.out, yes ? "YES" : "NO");
  if (count) say(a.out, "count " + format_count(*count));
  if (a.witness && witness) say(a.out, "witness " + format_vertices(*witness));
  return finish(a.out, report, yes);
}

int run_classify(const std::string& path, const std::string& family, bool as_json) {
  Regime regime;
  Json report;
  report["schema"] = 1;
  report["command"] = "classify";
  if (!family.empty()) {
    const auto fam = parse_family(family);
    for (const auto& f : fam) {
      if (f.arity() > 2) throw InvalidArgument("classification covers functions of arity at most 2");
    }
    regime = classify_binary_family(fam);
    report["family"] = family;
  } else {
    const CspInstance inst = read_csp(path);
    if (inst.max_arity() > 2) throw InvalidArgument("classification covers functions of arity at most 2");
    regime = classify_instance(inst);
    report["input"] = path;
  }
  report["regime"] = to_string(regime);
  if (as_json) {
    std::cout << report.dump(2) << "\n";
  } else {
    std::cout << to_string(regime) << "\n";
  }
  return kOk;
}

}  // namespace

void add_solve_commands(CLI::App& app, Context& ctx) {
  auto add_kis = [&](const char* name, const char* help, bool count_only) {
    auto args = std::make_shared<KisArgs>();
    auto* cmd = app.add_subcommand(name, help);
    cmd->add_option("input", args->path, "HGR file")->required()->check(CLI::ExistingFile);
    cmd->add_option("-k", args->k, "Independent set size")->required()->check(CLI::NonNegativeNumber);
    if (!count_only) {
      cmd->add_flag("--count", args->count, "Print the number of independent k-sets");
      cmd->add_flag("--witness", args->witness, "Print one independent k-set");
    }
    cmd->add_flag("--mixed", args->mixed, "Use the heavy/light arity split");
    cmd->add_option("--node-cap", args->node_cap, "Cap on clique-engine part nodes");
    add_output_flags(*cmd, args->out);
    cmd->callback([args, &ctx, count_only] { ctx.exit_code = run_kis(*args, count_only); });
  };
  add_kis("solve-kis", "Decide whether a hypergraph has an independent set of size k", false);
  add_kis("count-kis", "Count the independent sets of size k in a hypergraph", true);

  {
    auto args = std::make_shared<CspArgs>();
    auto* cmd = app.add_subcommand("solve-csp", "Find a weight-k satisfying assignment");
    cmd->add_option("input", args->path, "CSP file")->required()->check(CLI::ExistingFile);
    cmd->add_option("-k", args->k, "Number of true variables")->required()->check(CLI::NonNegativeNumber);
    cmd->add_flag("--regime", args->regime, "Print the complexity regime of the instance's functions");
    cmd->add_flag("--witness", args->witness, "Print the true variables of the assignment");
    cmd->add_option("--search-cap", args->search_cap, "Cap on visited search states");
    add_output_flags(*cmd, args->out);
    cmd->callback([args, &ctx] { ctx.exit_code = run_csp(*args); });
  }
  {
    auto args = std::make_shared<OracleArgs>();
    auto* cmd = app.add_subcommand("oracle", "Exhaustive reference answer for an HGR or CSP file");
    cmd->add_option("input", args->path, "HGR or CSP file")->required()->check(CLI::ExistingFile);
    cmd->add_option("-k", args->k, "Solution size")->required()->check(CLI::NonNegativeNumber);
    cmd->add_flag("--count", args->count, "Count all solutions");
    cmd->add_flag("--witness", args->witness, "Print the lexicographically first solution");
    cmd->add_option("--cap", args->cap, "Cap on enumerated candidates");
    add_output_flags(*cmd, args->out);
    cmd->callback([args, &ctx] { ctx.exit_code = run_oracle(*args); });
  }
  {
    struct ClassifyArgs {
      std::string path;
      std::string family;
      bool json = false;
    };
    auto args = std::make_shared<ClassifyArgs>();
    auto* cmd = app.add_subcommand("classify", "Complexity regime of a family of binary functions");
    auto* input = cmd->add_option("input", args->path, "CSP file")->check(CLI::ExistingFile);
    auto* family = cmd->add_option("--family", args->family, "Comma separated names or truth tables, e.g. nand,impl");
    input->excludes(family);
    cmd->add_flag("--json", args->json, "Print a JSON object");
    cmd->callback([args, &ctx] {
      if (args->path.empty() && args->family.empty()) throw CLI::ValidationError("classify", "give a CSP file or --family");
      ctx.exit_code = run_classify(args->path, args->family, args->json);
    });
  }
}

}  // namespace sparsek::cli
