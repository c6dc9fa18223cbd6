#include <iostream>

#include <CLI11.hpp>

#include "cli_support.hpp"
#include "sparsek/hgr_io.hpp"

int main(int argc, char** argv) {
  using namespace sparsek;
  using namespace sparsek::cli;

  CLI::App app{"Exact k-independent set counting and weight-k CSP solving"};
  app.set_version_flag("--version", SPARSEK_VERSION);
  app.require_subcommand(1);
  Context ctx;
  add_solve_commands(app, ctx);
  add_gen_command(app, ctx);
  add_bench_command(app, ctx);

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const InvalidArgument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const ResourceLimit& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return kResource;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kInternal;
  }
  return ctx.exit_code;
}
