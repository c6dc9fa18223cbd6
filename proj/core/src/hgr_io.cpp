#include "sparsek/hgr_io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>
#include <unordered_set>
#include <vector>

namespace sparsek {

const char* to_string(ParseErrorKind kind) {
  switch (kind) {
    case ParseErrorKind::MissingHeader: return "MissingHeader";
    case ParseErrorKind::MalformedHeader: return "MalformedHeader";
    case ParseErrorKind::MalformedLine: return "MalformedLine";
    case ParseErrorKind::VertexOutOfRange: return "VertexOutOfRange";
    case ParseErrorKind::DuplicateVertexInEdge: return "DuplicateVertexInEdge";
    case ParseErrorKind::DuplicateVariable: return "DuplicateVariable";
    case ParseErrorKind::ArityTooSmall: return "ArityTooSmall";
    case ParseErrorKind::ArityTooLarge: return "ArityTooLarge";
    case ParseErrorKind::DuplicateEdge: return "DuplicateEdge";
    case ParseErrorKind::EdgeCountMismatch: return "EdgeCountMismatch";
    case ParseErrorKind::UnknownFunction: return "UnknownFunction";
    case ParseErrorKind::DuplicateFunction: return "DuplicateFunction";
    case ParseErrorKind::BadTruthTable: return "BadTruthTable";
    case ParseErrorKind::TrivialFunction: return "TrivialFunction";
    case ParseErrorKind::ArityMismatch: return "ArityMismatch";
  }
  return "Unknown";
}

ParseError::ParseError(ParseErrorKind kind, std::size_t line, const std::string& detail)
    : Error("line " + std::to_string(line) + ": " + to_string(kind) +
            (detail.empty() ? "" : ": " + detail)),
      kind_(kind),
      line_(line) {}

namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
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

bool parse_u64(std::string_view tok, std::uint64_t& out) {
  auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), out);
  return ec == std::errc() && p == tok.data() + tok.size();
}

}  // namespace

Hypergraph parse_hypergraph(std::string_view text) {
  std::optional<std::uint64_t> n;
  std::uint64_t declared_m = 0;
  std::vector<Edge> edges;
  std::unordered_set<Edge, EdgeHash> seen;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    std::string_view line = text.substr(pos, nl - pos);
    pos = nl + 1;
    ++line_no;
    auto tok = split_ws(line);
    if (tok.empty() || tok[0].front() == '#') {
      if (nl == text.size()) break;
      continue;
    }
    if (tok[0] == "p") {
      std::uint64_t nv = 0;
      if (n || tok.size() != 4 || tok[1] != "hgr" || !parse_u64(tok[2], nv) ||
          !parse_u64(tok[3], declared_m) || nv > UINT32_MAX) {
        throw ParseError(ParseErrorKind::MalformedHeader, line_no, std::string(line));
      }
      n = nv;
    } else if (tok[0] == "e") {
      std::vector<Vertex> vs;
      for (std::size_t i = 1; i < tok.size(); ++i) {
        std::uint64_t v = 0;
        if (!parse_u64(tok[i], v)) throw ParseError(ParseErrorKind::MalformedLine, line_no, std::string(tok[i]));
        if (v == 0 || v > UINT32_MAX) throw ParseError(ParseErrorKind::VertexOutOfRange, line_no, std::string(tok[i]));
        vs.push_back(static_cast<Vertex>(v - 1));
      }
      std::vector<Vertex> sorted = vs;
      std::sort(sorted.begin(), sorted.end());
      if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
        throw ParseError(ParseErrorKind::DuplicateVertexInEdge, line_no, "");
      }
      if (vs.size() < 2) throw ParseError(ParseErrorKind::ArityTooSmall, line_no, "");
      if (vs.size() > static_cast<std::size_t>(kMaxArity)) {
        throw ParseError(ParseErrorKind::ArityTooLarge, line_no, "");
      }
      if (!n) throw ParseError(ParseErrorKind::MissingHeader, line_no, "edge before header");
      if (sorted.back() >= *n) {
        throw ParseError(ParseErrorKind::VertexOutOfRange, line_no, std::to_string(sorted.back() + 1));
      }
      Edge e(vs);
      if (!seen.insert(e).second) throw ParseError(ParseErrorKind::DuplicateEdge, line_no, "");
      edges.push_back(e);
    } else {
      throw ParseError(ParseErrorKind::MalformedLine, line_no, std::string(line));
    }
    if (nl == text.size()) break;
  }
  if (!n) throw ParseError(ParseErrorKind::MissingHeader, line_no, "no 'p hgr' line");
  if (edges.size() != declared_m) {
    throw ParseError(ParseErrorKind::EdgeCountMismatch, line_no,
                     "header declares " + std::to_string(declared_m) + " edges, found " +
                         std::to_string(edges.size()));
  }
  return Hypergraph(static_cast<std::size_t>(*n), std::move(edges));
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Hypergraph read_hypergraph(const std::filesystem::path& path) {
  return parse_hypergraph(read_text_file(path));
}

std::string format_hypergraph(const Hypergraph& h, std::span<const std::string> comments) {
  std::string out;
  for (const auto& c : comments) out += "# " + c + "\n";
  out += "p hgr " + std::to_string(h.num_vertices()) + " " + std::to_string(h.num_edges()) + "\n";
  for (const Edge& e : h.edges()) {
    out += 'e';
    for (Vertex v : e) {
      out += ' ';
      out += std::to_string(v + 1);
    }
    out += '\n';
  }
  return out;
}

}  // namespace sparsek
