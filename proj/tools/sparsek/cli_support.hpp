#pragma once

#include <chrono>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "sparsek/common.hpp"
#include "sparsek/csp.hpp"
#include "sparsek/hypergraph.hpp"

namespace CLI {
class App;
}

namespace sparsek::cli {

enum ExitCode : int {
  kOk = 0,
  kNo = 1,  // only with --strict-exit
  kUsage = 2,
  kResource = 3,
  kInternal = 4,
};

// Shared per-run state. Subcommand callbacks store their exit status here.
struct Context {
  int exit_code = kOk;
};

using Json = nlohmann::ordered_json;

// Flags shared by the solving subcommands.
struct OutputFlags {
  std::string report;  // path, "-" for stdout
  bool strict_exit = false;

  bool json_on_stdout() const { return report == "-"; }
};

void add_output_flags(CLI::App& cmd, OutputFlags& flags);

// Writes the report (if requested) and returns the exit status.
int finish(const OutputFlags& flags, const Json& report, bool decision);

Json report_header(const std::string& command, const std::filesystem::path& input, int k);
Json profile_fields(const Hypergraph& h);
Json profile_fields(const CspInstance& inst);

std::string format_count(const Count& c);
// 1-based, space separated.
std::string format_vertices(std::span<const std::uint32_t> items);
Json json_vertices(std::span<const std::uint32_t> items);

class Stopwatch {
 public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  std::int64_t elapsed_ns() const {
    return std::chrono::duration_cast<std::chrono::nanoseconds>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

enum class FileKind { Hgr, Csp };

// From the first non-comment line.
FileKind sniff_kind(const std::string& text);

// Comma separated function names or 0/1 truth tables.
std::vector<ConstraintFunction> parse_family(const std::string& spec);
ConstraintFunction parse_function(const std::string& spec);

// Writes to `path`, or stdout when it is empty or "-".
void write_output(const std::string& path, const std::string& content);

void add_solve_commands(CLI::App& app, Context& ctx);
void add_gen_command(CLI::App& app, Context& ctx);
void add_bench_command(CLI::App& app, Context& ctx);

}  // namespace sparsek::cli
