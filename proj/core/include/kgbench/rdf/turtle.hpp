#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "kgbench/rdf/term.hpp"

namespace kgbench::rdf {

struct ParseOptions {
  // Base IRI for resolving relative references before any @base directive.
  // Relative IRIs are kept verbatim when no base is known.
  std::string base_iri;
};

// Parses a complete Turtle document. Throws kgbench::ParseError describing
// the first violation.
Graph ParseTurtle(std::string_view text, const ParseOptions& options = {});

struct SalvageResult {
  Graph graph;
  std::size_t failed_statements = 0;
  std::size_t total_statements = 0;
};

// Parses each top-level statement independently, carrying prefixes, base
// and blank node labels forward from the statements that succeed. Never
// throws.
SalvageResult SalvageParseTurtle(std::string_view text, const ParseOptions& options = {});

// A top-level statement unit: starts at the first character that is not
// whitespace or comment and ends after its '.' terminator (or at the end of
// input when unterminated).
struct StatementSpan {
  std::size_t offset = 0;
  std::size_t length = 0;
  bool terminated = false;

  std::size_t end() const noexcept { return offset + length; }
};

// Splits at '.' characters that are outside strings, IRIs and comments and
// are not part of a number or a prefixed name.
std::vector<StatementSpan> SplitStatements(std::string_view text);

// Picks the most promising Turtle payload from a model response: the fenced
// code block whose salvage parse yields the most triples (first wins ties),
// or the whole response when it has no fenced blocks.
std::string ExtractTurtleCandidate(std::string_view response);

// Writes Turtle grouped by subject with ';' and ',' abbreviations. Blank
// nodes are relabeled b0, b1, ... in order of appearance.
std::string SerializeTurtle(const Graph& graph);

}  // namespace kgbench::rdf
