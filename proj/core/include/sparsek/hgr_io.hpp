#pragma once

#include <cstddef>
#include <filesystem>
#include <span>
#include <string>
#include <string_view>

#include "sparsek/common.hpp"
#include "sparsek/hypergraph.hpp"

namespace sparsek {

enum class ParseErrorKind {
  MissingHeader,
  MalformedHeader,
  MalformedLine,
  VertexOutOfRange,
  DuplicateVertexInEdge,
  DuplicateVariable,
  ArityTooSmall,
  ArityTooLarge,
  DuplicateEdge,
  EdgeCountMismatch,
  UnknownFunction,
  DuplicateFunction,
  BadTruthTable,
  TrivialFunction,
  ArityMismatch,
};

const char* to_string(ParseErrorKind kind);

class ParseError : public Error {
 public:
  ParseError(ParseErrorKind kind, std::size_t line, const std::string& detail);
  ParseErrorKind kind() const { return kind_; }
  std::size_t line() const { return line_; }

 private:
  ParseErrorKind kind_;
  std::size_t line_;
};

// HGR text: '#' comments, "p hgr <n> <m>", then m lines "e v1 .. vr" (1-based).
Hypergraph parse_hypergraph(std::string_view text);
Hypergraph read_hypergraph(const std::filesystem::path& path);
std::string format_hypergraph(const Hypergraph& h, std::span<const std::string> comments = {});

std::string read_text_file(const std::filesystem::path& path);

}  // namespace sparsek
