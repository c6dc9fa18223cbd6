#include "cli_support.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "sparsek/constraint.hpp"

namespace sparsek::cli {

void add_output_flags(CLI::App& cmd, OutputFlags& flags) {
  cmd.add_option("--report", flags.report, "Write a JSON report to this path ('-' for stdout only)");
  cmd.add_flag("--strict-exit", flags.strict_exit, "Exit with status 1 on a NO answer");
}

int finish(const OutputFlags& flags, const Json& report, bool decision) {
  if (flags.json_on_stdout()) {
    std::cout << report.dump(2) << "\n";
  } else if (!flags.report.empty()) {
    std::ofstream out(flags.report);
    if (!out) throw Error("cannot write report to " + flags.report);
    out << report.dump(2) << "\n";
  }
  return (!decision && flags.strict_exit) ? kNo : kOk;
}

Json report_header(const std::string& command, const std::filesystem::path& input, int k) {
  Json j;
  j["schema"] = 1;
  j["command"] = command;
  j["input"] = input.string();
  j["k"] = k;
  return j;
}

Json profile_fields(const Hypergraph& h) {
  Json j;
  j["n"] = h.num_vertices();
  j["m"] = h.num_edges();
  Json by_arity = Json::object();
  const auto profile = h.arity_profile();
  for (std::size_t r = 2; r < profile.size(); ++r) {
    if (profile[r] > 0) by_arity[std::to_string(r)] = profile[r];
  }
  j["m_i"] = std::move(by_arity);
  return j;
}

Json profile_fields(const CspInstance& inst) {
  Json j;
  j["n"] = inst.num_variables();
  j["m"] = inst.num_constraints();
  Json by_function = Json::object();
  const auto counts = inst.function_counts();
  for (std::uint32_t f : inst.used_functions()) {
    const auto& fn = inst.function(f);
    std::string key = fn.name().empty() ? fn.bits() : fn.name();
    by_function[key] = counts[f];
  }
  j["m_i"] = std::move(by_function);
  return j;
}

std::string format_count(const Count& c) { return to_string(c); }

std::string format_vertices(std::span<const std::uint32_t> items) {
  std::ostringstream out;
  for (std::size_t i = 0; i < items.size(); ++i) out << (i ? " " : "") << items[i] + 1;
  return out.str();
}

Json json_vertices(std::span<const std::uint32_t> items) {
  Json arr = Json::array();
  for (auto v : items) arr.push_back(v + 1);
  return arr;
}

FileKind sniff_kind(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream words(line);
    std::string a, b;
    if (!(words >> a) || a.front() == '#') continue;
    if (a == "p" && words >> b) {
      if (b == "hgr") return FileKind::Hgr;
      if (b == "csp") return FileKind::Csp;
    }
    break;
  }
  throw InvalidArgument("cannot tell the input format: expected a 'p hgr' or 'p csp' header");
}

ConstraintFunction parse_function(const std::string& spec) {
  if (auto f = functions::by_name(spec)) return *f;
  const bool bits = !spec.empty() && spec.find_first_not_of("01") == std::string::npos;
  if (bits) return ConstraintFunction::from_bits(spec);
  throw InvalidArgument("unknown function '" + spec + "'");
}

std::vector<ConstraintFunction> parse_family(const std::string& spec) {
  std::vector<ConstraintFunction> out;
  std::istringstream in(spec);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (!item.empty()) out.push_back(parse_function(item));
  }
  if (out.empty()) throw InvalidArgument("empty function family");
  return out;
}

void write_output(const std::string& path, const std::string& content) {
  if (path.empty() || path == "-") {
    std::cout << content;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path);
  out << content;
}

}  // namespace sparsek::cli
