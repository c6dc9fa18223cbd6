#include <charconv>
#include <cmath>
#include <functional>
#include <memory>
#include <optional>

#include <CLI11.hpp>

#include "cli_support.hpp"
#include "sparsek/constraint.hpp"
#include "sparsek/hgr_io.hpp"
#include "sparsek/random_models.hpp"
#include "sparsek/reductions.hpp"

namespace sparsek::cli {
namespace {

// Parameters are echoed into the header in declaration order, so the header
// and therefore the whole file depend only on the parameters and the seed.
class Provenance {
 public:
  explicit Provenance(std::string recipe) : recipe_(std::move(recipe)) {}

  void add(const std::string& key, const std::string& value) { params_ += " " + key + "=" + value; }
  void add(const std::string& key, double value) {
    char buf[32];
    const auto end = std::to_chars(buf, buf + sizeof buf, value).ptr;
    add(key, std::string(buf, end));
  }
  void add(const std::string& key, std::uint64_t value) { add(key, std::to_string(value)); }
  void note(std::string line) { extra_.push_back(std::move(line)); }

  std::vector<std::string> lines(std::uint64_t seed) const {
    std::vector<std::string> out{"generated by sparsek " SPARSEK_VERSION,
                                 "recipe " + recipe_ + params_ + " seed=" + std::to_string(seed)};
    out.insert(out.end(), extra_.begin(), extra_.end());
    return out;
  }

 private:
  std::string recipe_;
  std::string params_;
  std::vector<std::string> extra_;
};

struct Common {
  std::uint64_t seed = 1;
  std::string out;
};

CspInstance random_nand_source(std::size_t n, int arity, double p, Rng& rng) {
  CspInstance inst(n);
  const auto nand = functions::nand(arity);
  std::vector<Var> tuple(static_cast<std::size_t>(arity));
  // Visit every arity-subset in lexicographic order.
  std::function<void(std::size_t, Var)> visit = [&](std::size_t depth, Var from) {
    if (depth == tuple.size()) {
      if (rng.bernoulli(p)) inst.add_constraint(nand, tuple);
      return;
    }
    for (Var v = from; v < n; ++v) {
      tuple[depth] = v;
      visit(depth + 1, v + 1);
    }
  };
  visit(0, 0);
  return inst;
}

void write_embedded(const Common& c, const Provenance& prov, const EmbeddedCsp& e) {
  Provenance p = prov;
  p.note("k " + std::to_string(e.k));
  write_output(c.out, format_csp(e.instance, p.lines(c.seed)));
}

CLI::App* recipe(CLI::App& gen, const char* name, const char* help, Common& common) {
  auto* cmd = gen.add_subcommand(name, help);
  cmd->add_option("--seed", common.seed, "PRNG seed (mt19937_64)");
  cmd->add_option("-o,--out", common.out, "Output file (default stdout)");
  return cmd;
}

}  // namespace

void add_gen_command(CLI::App& app, Context& ctx) {
  auto* gen = app.add_subcommand("gen", "Generate instances");
  gen->require_subcommand(1);
  auto common = std::make_shared<Common>();

  {
    struct Args {
      std::size_t n = 0;
      std::array<std::optional<double>, kMaxArity + 1> gamma;
    };
    auto a = std::make_shared<Args>();
    auto* cmd = recipe(*gen, "random-hgr", "Uniformly random edges, ceil(n^gamma_r) of each arity r", *common);
    cmd->add_option("--n", a->n, "Vertices")->required();
    for (int r = 2; r <= kMaxArity; ++r) {
      cmd->add_option("--gamma" + std::to_string(r), a->gamma[r], "Density exponent of arity " + std::to_string(r));
    }
    cmd->callback([a, common, &ctx] {
      Provenance prov("random-hgr");
      prov.add("n", std::uint64_t{a->n});
      std::array<std::size_t, kMaxArity + 1> per{};
      for (int r = 2; r <= kMaxArity; ++r) {
        if (!a->gamma[r]) continue;
        prov.add("gamma" + std::to_string(r), *a->gamma[r]);
        per[r] = edges_for_density(a->n, r, *a->gamma[r]);
      }
      Rng rng(common->seed);
      write_output(common->out, format_hypergraph(random_hypergraph(a->n, per, rng), prov.lines(common->seed)));
      ctx.exit_code = kOk;
    });
  }

  {
    struct Args {
      std::size_t n = 0;
      std::size_t m = 0;
      std::string family = "nand,impl";
    };
    auto a = std::make_shared<Args>();
    auto* cmd = recipe(*gen, "random-csp", "m constraints drawn uniformly from a family", *common);
    cmd->add_option("--n", a->n, "Variables")->required();
    cmd->add_option("--m", a->m, "Constraints")->required();
    cmd->add_option("--family", a->family, "Comma separated function names or truth tables");
    cmd->callback([a, common, &ctx] {
      const auto fam = parse_family(a->family);
      Provenance prov("random-csp");
      prov.add("n", std::uint64_t{a->n});
      prov.add("m", std::uint64_t{a->m});
      prov.add("family", a->family);
      Rng rng(common->seed);
      write_output(common->out, format_csp(random_csp(a->n, fam, a->m, rng), prov.lines(common->seed)));
      ctx.exit_code = kOk;
    });
  }

  {
    struct Args {
      std::string input;
      std::size_t n = 6;
      int source_arity = 2;
      double p = 0.5;
      std::string function = "11101000";
      double gamma = 2.5;
      int k = 2;
    };
    auto a = std::make_shared<Args>();
    auto* cmd = recipe(*gen, "dense-embed", "Rewrite a NAND instance over a denser 0-valid function", *common);
    cmd->add_option("--input", a->input, "Source CSP file (NAND constraints only)")->check(CLI::ExistingFile);
    cmd->add_option("--n", a->n, "Variables of the random source");
    cmd->add_option("--source-arity", a->source_arity, "NAND arity of the random source");
    cmd->add_option("--p", a->p, "Constraint probability of the random source");
    cmd->add_option("--function", a->function, "Target function");
    cmd->add_option("--gamma", a->gamma, "Target density exponent");
    cmd->add_option("-k", a->k, "Solution weight of the source")->required();
    cmd->callback([a, common, &ctx] {
      Provenance prov("dense-embed");
      Rng rng(common->seed);
      CspInstance src;
      if (!a->input.empty()) {
        src = read_csp(a->input);
        prov.add("input", a->input);
      } else {
        src = random_nand_source(a->n, a->source_arity, a->p, rng);
        prov.add("n", std::uint64_t{a->n});
        prov.add("source-arity", std::uint64_t(a->source_arity));
        prov.add("p", a->p);
      }
      prov.add("function", a->function);
      prov.add("gamma", a->gamma);
      prov.add("k", std::uint64_t(a->k));
      write_embedded(*common, prov, dense_embed(src, parse_function(a->function), a->gamma, a->k));
      ctx.exit_code = kOk;
    });
  }

  {
    struct Args {
      std::string input;
      std::size_t n = 6;
      std::size_t m = 10;
      std::string family = "nand";
      std::string function = "impl";
      double gamma = 1.0;
      std::optional<double> delta;
      int k = 2;
    };
    auto a = std::make_shared<Args>();
    auto* cmd = recipe(*gen, "sparse-embed", "Pad an instance with forced-false variables to lower its density", *common);
    cmd->add_option("--input", a->input, "Source CSP file")->check(CLI::ExistingFile);
    cmd->add_option("--n", a->n, "Variables of the random source");
    cmd->add_option("--m", a->m, "Constraints of the random source");
    cmd->add_option("--family", a->family, "Family of the random source");
    cmd->add_option("--function", a->function, "Gadget function");
    cmd->add_option("--gamma", a->gamma, "Target density exponent");
    cmd->add_option("--delta", a->delta, "Source density exponent (default log_n m)");
    cmd->add_option("-k", a->k, "Solution weight")->required();
    cmd->callback([a, common, &ctx] {
      Provenance prov("sparse-embed");
      Rng rng(common->seed);
      CspInstance src;
      if (!a->input.empty()) {
        src = read_csp(a->input);
        prov.add("input", a->input);
      } else {
        src = random_csp(a->n, parse_family(a->family), a->m, rng);
        prov.add("n", std::uint64_t{a->n});
        prov.add("m", std::uint64_t{a->m});
        prov.add("family", a->family);
      }
      prov.add("function", a->function);
      prov.add("gamma", a->gamma);
      if (a->delta) prov.add("delta", *a->delta);
      prov.add("k", std::uint64_t(a->k));
      write_embedded(*common, prov, sparse_embed(src, parse_function(a->function), a->gamma, a->k, a->delta));
      ctx.exit_code = kOk;
    });
  }

  {
    struct Args {
      std::string input;
      std::size_t n = 8;
      std::size_t m3 = 20;
      double gamma = 2.5;
    };
    auto a = std::make_shared<Args>();
    auto* cmd = recipe(*gen, "kis-lb", "Pad a 3-uniform hypergraph with universal vertices", *common);
    cmd->add_option("--input", a->input, "Source HGR file (3-uniform)")->check(CLI::ExistingFile);
    cmd->add_option("--n", a->n, "Vertices of the random source");
    cmd->add_option("--m3", a->m3, "Edges of the random source");
    cmd->add_option("--gamma", a->gamma, "Target density exponent");
    cmd->callback([a, common, &ctx] {
      Provenance prov("kis-lb");
      Rng rng(common->seed);
      Hypergraph src;
      if (!a->input.empty()) {
        src = read_hypergraph(a->input);
        prov.add("input", a->input);
      } else {
        std::array<std::size_t, kMaxArity + 1> per{};
        per[3] = a->m3;
        src = random_hypergraph(a->n, per, rng);
        prov.add("n", std::uint64_t{a->n});
        prov.add("m3", std::uint64_t{a->m3});
      }
      prov.add("gamma", a->gamma);
      write_output(common->out, format_hypergraph(gen_kis_sparse_lb(src, a->gamma), prov.lines(common->seed)));
      ctx.exit_code = kOk;
    });
  }

  {
    struct Args {
      std::size_t parts = 3;
      std::size_t part_size = 2;
      int r = 3;
      double p = 0.5;
      int arity = 4;
      double gamma = 3.0;
    };
    auto a = std::make_shared<Args>();
    auto* cmd = recipe(*gen, "mixed-lb", "Mixed-arity instance hiding a colourful independent set problem", *common);
    cmd->add_option("--parts", a->parts, "Number of parts");
    cmd->add_option("--part-size", a->part_size, "Vertices per part");
    cmd->add_option("--r", a->r, "Uniformity of the partite input");
    cmd->add_option("--p", a->p, "Edge probability of the partite input");
    cmd->add_option("--arity", a->arity, "Largest arity of the output");
    cmd->add_option("--gamma", a->gamma, "Density exponent of the top arity");
    cmd->callback([a, common, &ctx] {
      Provenance prov("mixed-lb");
      prov.add("parts", std::uint64_t{a->parts});
      prov.add("part-size", std::uint64_t{a->part_size});
      prov.add("r", std::uint64_t(a->r));
      prov.add("p", a->p);
      prov.add("arity", std::uint64_t(a->arity));
      prov.add("gamma", a->gamma);
      Rng rng(common->seed);
      const std::vector<std::size_t> sizes(a->parts, a->part_size);
      const auto input = random_partite(sizes, a->r, a->p, rng);
      const auto out = gen_mixed_lb(input, a->arity, a->gamma);
      prov.note("k " + std::to_string(out.k));
      write_output(common->out, format_hypergraph(out.hypergraph, prov.lines(common->seed)));
      ctx.exit_code = kOk;
    });
  }

  {
    struct Args {
      std::string input;
      std::size_t n = 6;
      double p = 0.5;
      std::string family = "or";
      double gamma = 1.5;
      int k = 2;
    };
    auto a = std::make_shared<Args>();
    auto* cmd = recipe(*gen, "binary-hardness", "Hide a binary NAND instance behind a binary family", *common);
    cmd->add_option("--input", a->input, "Source CSP file (binary NAND)")->check(CLI::ExistingFile);
    cmd->add_option("--n", a->n, "Variables of the random source");
    cmd->add_option("--p", a->p, "Constraint probability of the random source");
    cmd->add_option("--family", a->family, "Binary family the output uses");
    cmd->add_option("--gamma", a->gamma, "Target density exponent in [1, 2]");
    cmd->add_option("-k", a->k, "Solution weight of the source")->required();
    cmd->callback([a, common, &ctx] {
      Provenance prov("binary-hardness");
      Rng rng(common->seed);
      CspInstance src;
      if (!a->input.empty()) {
        src = read_csp(a->input);
        prov.add("input", a->input);
      } else {
        src = random_nand_source(a->n, 2, a->p, rng);
        prov.add("n", std::uint64_t{a->n});
        prov.add("p", a->p);
      }
      prov.add("family", a->family);
      prov.add("gamma", a->gamma);
      prov.add("k", std::uint64_t(a->k));
      const auto fam = parse_family(a->family);
      write_embedded(*common, prov, gen_binary_hardness(src, fam, a->gamma, a->k));
      ctx.exit_code = kOk;
    });
  }

  {
    struct Args {
      std::string function = "nand2";
      int block = 4;
    };
    auto a = std::make_shared<Args>();
    auto* cmd = recipe(*gen, "lessthan", "The LessThan gadget on one block of variables", *common);
    cmd->add_option("--function", a->function, "0-valid function with u_min >= 2");
    cmd->add_option("--block", a->block, "Block size K")->required();
    cmd->callback([a, common, &ctx] {
      Provenance prov("lessthan");
      prov.add("function", a->function);
      prov.add("block", std::uint64_t(a->block));
      const auto f = parse_function(a->function);
      std::vector<Var> vars(static_cast<std::size_t>(std::max(a->block, 0)));
      for (std::size_t i = 0; i < vars.size(); ++i) vars[i] = static_cast<Var>(i);
      const auto g = build_less_than(f, a->block, vars);
      CspInstance inst(vars.size());
      const auto id = inst.intern(g.function);
      for (const auto& t : g.tuples) inst.add_constraint(id, t);
      prov.note("k " + std::to_string(a->block - f.arity()) + " c " + std::to_string(u_min(f)));
      write_output(common->out, format_csp(inst, prov.lines(common->seed)));
      ctx.exit_code = kOk;
    });
  }
}

}  // namespace sparsek::cli
