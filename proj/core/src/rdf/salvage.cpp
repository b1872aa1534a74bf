#include <utility>

#include "kgbench/error.hpp"
#include "kgbench/rdf/turtle.hpp"
#include "rdf/turtle_parser.hpp"

namespace kgbench::rdf {
namespace {

bool IsNameByte(char c) {
  auto u = static_cast<unsigned char>(c);
  return u >= 0x80 || (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
         (c >= '0' && c <= '9') || c == '_' || c == '-' || c == ':' || c == '%' || c == '\\';
}

bool IsSpace(char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r'; }

// Skips whitespace and comments starting at `i`.
std::size_t SkipTrivia(std::string_view text, std::size_t i) {
  while (i < text.size()) {
    if (IsSpace(text[i])) {
      ++i;
    } else if (text[i] == '#') {
      while (i < text.size() && text[i] != '\n' && text[i] != '\r') ++i;
    } else {
      break;
    }
  }
  return i;
}

}  // namespace

std::vector<StatementSpan> SplitStatements(std::string_view text) {
  std::vector<StatementSpan> spans;
  std::size_t i = SkipTrivia(text, 0);
  std::size_t start = i;
  while (i < text.size()) {
    char c = text[i];
    if (c == '#') {
      while (i < text.size() && text[i] != '\n' && text[i] != '\r') ++i;
      continue;
    }
    if (c == '<') {
      // An IRI cannot contain whitespace, so a missing '>' ends at the next space.
      ++i;
      while (i < text.size() && text[i] != '>' && !IsSpace(text[i])) ++i;
      if (i < text.size() && text[i] == '>') ++i;
      continue;
    }
    if (c == '"' || c == '\'') {
      bool long_form = i + 2 < text.size() && text[i + 1] == c && text[i + 2] == c;
      i += long_form ? 3 : 1;
      while (i < text.size()) {
        if (text[i] == '\\') {
          i += 2;
          continue;
        }
        if (long_form) {
          if (text[i] == c && i + 2 < text.size() && text[i + 1] == c && text[i + 2] == c) {
            i += 3;
            break;
          }
        } else {
          if (text[i] == c) {
            ++i;
            break;
          }
          // Short strings cannot span lines; an unbalanced quote stops here.
          if (text[i] == '\n' || text[i] == '\r') break;
        }
        ++i;
      }
      continue;
    }
    if (c == '\\') {
      i += 2;
      continue;
    }
    if (c == '.') {
      char prev = i > 0 ? text[i - 1] : ' ';
      char next = i + 1 < text.size() ? text[i + 1] : ' ';
      bool inside_token = (next >= '0' && next <= '9') || (IsNameByte(prev) && IsNameByte(next));
      if (!inside_token) {
        spans.push_back({start, i + 1 - start, true});
        i = SkipTrivia(text, i + 1);
        start = i;
        continue;
      }
    }
    ++i;
  }
  if (start < text.size()) {
    std::size_t end = text.size();
    while (end > start && IsSpace(text[end - 1])) --end;
    if (end > start) spans.push_back({start, end - start, false});
  }
  return spans;
}

SalvageResult SalvageParseTurtle(std::string_view text, const ParseOptions& options) {
  SalvageResult result;
  detail::ParserState state;
  state.base = options.base_iri;
  std::set<Triple> triples;
  for (const auto& span : SplitStatements(text)) {
    ++result.total_statements;
    detail::ParserState attempt = state;
    std::set<Triple> unit;
    try {
      detail::ParseTurtleChunk(text.substr(span.offset, span.length), attempt, unit);
    } catch (const ParseError&) {
      ++result.failed_statements;
      continue;
    }
    state = std::move(attempt);
    triples.merge(unit);
  }
  result.graph = Graph(std::move(triples), std::move(state.prefixes));
  return result;
}

std::string ExtractTurtleCandidate(std::string_view response) {
  std::vector<std::string_view> blocks;
  std::size_t pos = 0;
  while (true) {
    std::size_t open = response.find("```", pos);
    if (open == std::string_view::npos) break;
    // The rest of the opening line is the info string (e.g. "turtle").
    std::size_t content = response.find('\n', open + 3);
    if (content == std::string_view::npos) {
      blocks.push_back({});
      break;
    }
    ++content;
    std::size_t close = response.find("```", content);
    if (close == std::string_view::npos) {
      blocks.push_back(response.substr(content));
      break;
    }
    blocks.push_back(response.substr(content, close - content));
    pos = close + 3;
  }
  if (blocks.empty()) return std::string(response);

  std::size_t best = 0;
  std::size_t best_count = 0;
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    std::size_t count = SalvageParseTurtle(blocks[i]).graph.size();
    if (count > best_count) {
      best = i;
      best_count = count;
    }
  }
  return std::string(blocks[best]);
}

}  // namespace kgbench::rdf
