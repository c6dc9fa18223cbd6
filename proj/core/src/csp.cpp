#include "sparsek/csp.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <set>

#include "sparsek/hgr_io.hpp"

namespace sparsek {

std::uint32_t CspInstance::intern(const ConstraintFunction& f) {
  for (std::uint32_t i = 0; i < functions_.size(); ++i) {
    if (functions_[i].same_function(f)) return i;
  }
  return add_function(f);
}

std::uint32_t CspInstance::add_function(ConstraintFunction f) {
  functions_.push_back(std::move(f));
  return static_cast<std::uint32_t>(functions_.size() - 1);
}

void CspInstance::add_constraint(std::uint32_t function, std::vector<Var> vars) {
  if (function >= functions_.size()) throw InvalidArgument("unknown function id");
  const ConstraintFunction& f = functions_[function];
  if (static_cast<int>(vars.size()) != f.arity()) throw InvalidArgument("constraint arity mismatch");
  if (f.constant_true()) throw InvalidArgument("constant-true constraint");
  for (std::size_t i = 0; i < vars.size(); ++i) {
    if (vars[i] >= n_) throw InvalidArgument("constraint variable out of range");
    for (std::size_t j = 0; j < i; ++j) {
      if (vars[i] == vars[j]) throw InvalidArgument("constraint repeats a variable");
    }
  }
  constraints_.push_back({function, std::move(vars)});
}

std::vector<std::size_t> CspInstance::function_counts() const {
  std::vector<std::size_t> counts(functions_.size(), 0);
  for (const auto& c : constraints_) ++counts[c.function];
  return counts;
}

std::vector<std::uint32_t> CspInstance::used_functions() const {
  std::vector<std::uint32_t> out;
  auto counts = function_counts();
  for (std::uint32_t i = 0; i < counts.size(); ++i) {
    if (counts[i] > 0) out.push_back(i);
  }
  return out;
}

int CspInstance::max_arity() const {
  int r = 0;
  for (const auto& c : constraints_) r = std::max(r, static_cast<int>(c.vars.size()));
  return r;
}

bool CspInstance::satisfied_by(std::span<const Var> true_vars) const {
  std::vector<char> value(n_, 0);
  for (Var v : true_vars) {
    if (v >= n_) return false;
    value[v] = 1;
  }
  for (const auto& c : constraints_) {
    std::uint64_t row = 0;
    for (std::size_t p = 0; p < c.vars.size(); ++p) {
      if (value[c.vars[p]]) row |= std::uint64_t{1} << p;
    }
    if (!functions_[c.function].at(row)) return false;
  }
  return true;
}

namespace {

std::vector<std::string_view> tokens(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

bool to_u64(std::string_view tok, std::uint64_t& out) {
  auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), out);
  return ec == std::errc() && p == tok.data() + tok.size();
}

}  // namespace

CspInstance parse_csp(std::string_view text) {
  std::optional<CspInstance> inst;
  std::uint64_t declared_m = 0;
  std::map<std::string, std::uint32_t, std::less<>> names;
  std::vector<std::pair<std::string, ConstraintFunction>> pending;  // declared before header
  std::size_t line_no = 0;
  std::size_t pos = 0;

  auto declare = [&](const std::string& name, ConstraintFunction f) {
    names[name] = inst->add_function(std::move(f));
  };

  while (pos <= text.size()) {
    std::size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    std::string_view line = text.substr(pos, nl - pos);
    pos = nl + 1;
    ++line_no;
    auto tok = tokens(line);
    if (!tok.empty() && tok[0].front() != '#') {
      if (tok[0] == "p") {
        std::uint64_t n = 0;
        if (inst || tok.size() != 4 || tok[1] != "csp" || !to_u64(tok[2], n) || !to_u64(tok[3], declared_m) ||
            n > UINT32_MAX) {
          throw ParseError(ParseErrorKind::MalformedHeader, line_no, std::string(line));
        }
        inst.emplace(static_cast<std::size_t>(n));
        for (auto& [name, f] : pending) declare(name, std::move(f));
        pending.clear();
      } else if (tok[0] == "f") {
        std::uint64_t arity = 0;
        if (tok.size() != 4 || !to_u64(tok[2], arity)) {
          throw ParseError(ParseErrorKind::MalformedLine, line_no, std::string(line));
        }
        if (arity < 1 || arity > static_cast<std::uint64_t>(kMaxConstraintArity) ||
            tok[3].size() != (std::size_t{1} << arity)) {
          throw ParseError(ParseErrorKind::ArityMismatch, line_no, std::string(tok[1]));
        }
        ConstraintFunction f;
        try {
          f = ConstraintFunction::from_bits(tok[3], std::string(tok[1]));
        } catch (const InvalidArgument& e) {
          throw ParseError(ParseErrorKind::BadTruthTable, line_no, e.what());
        }
        std::string name(tok[1]);
        bool dup = names.count(name) > 0;
        for (auto& p : pending) dup = dup || p.first == name;
        if (dup) throw ParseError(ParseErrorKind::DuplicateFunction, line_no, name);
        if (inst) {
          declare(name, std::move(f));
        } else {
          pending.emplace_back(name, std::move(f));
        }
      } else if (tok[0] == "c") {
        if (!inst) throw ParseError(ParseErrorKind::MissingHeader, line_no, "constraint before header");
        if (tok.size() < 2) throw ParseError(ParseErrorKind::MalformedLine, line_no, std::string(line));
        std::string name(tok[1]);
        auto it = names.find(name);
        if (it == names.end()) {
          auto builtin = functions::by_name(name);
          if (!builtin) throw ParseError(ParseErrorKind::UnknownFunction, line_no, name);
          declare(name, *builtin);
          it = names.find(name);
        }
        const ConstraintFunction& f = inst->function(it->second);
        if (f.constant_true()) throw ParseError(ParseErrorKind::TrivialFunction, line_no, name);
        if (tok.size() - 2 != static_cast<std::size_t>(f.arity())) {
          throw ParseError(ParseErrorKind::ArityMismatch, line_no, name);
        }
        std::vector<Var> vars;
        for (std::size_t i = 2; i < tok.size(); ++i) {
          std::uint64_t v = 0;
          if (!to_u64(tok[i], v)) throw ParseError(ParseErrorKind::MalformedLine, line_no, std::string(tok[i]));
          if (v == 0 || v > inst->num_variables()) {
            throw ParseError(ParseErrorKind::VertexOutOfRange, line_no, std::string(tok[i]));
          }
          const Var x = static_cast<Var>(v - 1);
          if (std::find(vars.begin(), vars.end(), x) != vars.end()) {
            throw ParseError(ParseErrorKind::DuplicateVariable, line_no, std::string(tok[i]));
          }
          vars.push_back(x);
        }
        inst->add_constraint(it->second, std::move(vars));
      } else {
        throw ParseError(ParseErrorKind::MalformedLine, line_no, std::string(line));
      }
    }
    if (nl == text.size()) break;
  }
  if (!inst) throw ParseError(ParseErrorKind::MissingHeader, line_no, "no 'p csp' line");
  if (inst->num_constraints() != declared_m) {
    throw ParseError(ParseErrorKind::EdgeCountMismatch, line_no,
                     "header declares " + std::to_string(declared_m) + " constraints, found " +
                         std::to_string(inst->num_constraints()));
  }
  return std::move(*inst);
}

CspInstance read_csp(const std::filesystem::path& path) { return parse_csp(read_text_file(path)); }

std::string format_csp(const CspInstance& inst, std::span<const std::string> comments) {
  std::string out;
  for (const auto& c : comments) out += "# " + c + "\n";
  out += "p csp " + std::to_string(inst.num_variables()) + " " + std::to_string(inst.num_constraints()) + "\n";
  std::vector<std::string> names(inst.functions().size());
  std::set<std::string> taken;
  for (std::uint32_t i = 0; i < names.size(); ++i) {
    std::string name = inst.function(i).name();
    bool usable = !name.empty() && name.find_first_of(" \t#") == std::string::npos && !taken.count(name);
    if (!usable) {
      int suffix = 0;
      do {
        name = "g" + std::to_string(i) + (suffix ? "_" + std::to_string(suffix) : "");
        ++suffix;
      } while (taken.count(name));
    }
    taken.insert(name);
    names[i] = name;
    out += "f " + name + " " + std::to_string(inst.function(i).arity()) + " " + inst.function(i).bits() + "\n";
  }
  for (const auto& c : inst.constraints()) {
    out += "c " + names[c.function];
    for (Var v : c.vars) out += " " + std::to_string(v + 1);
    out += '\n';
  }
  return out;
}

}  // namespace sparsek
