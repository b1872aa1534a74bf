#pragma once

#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <string_view>

#include "kgbench/rdf/term.hpp"

namespace kgbench::rdf::detail {

// Everything a statement can change that later statements observe.
struct ParserState {
  std::map<std::string, std::string> prefixes;
  std::string base;
  std::map<std::string, std::string> blank_labels;
  std::size_t anon_counter = 0;
};

// Recursive-descent Turtle parser over one chunk of text. Triples are
// appended to `out` as statements complete; `state` is updated in place.
// Throws ParseError with positions relative to the start of `text`.
void ParseTurtleChunk(std::string_view text, ParserState& state, std::set<Triple>& out);

// Resolves `reference` against `base` (RFC 3986, section 5.2).
std::string ResolveIri(std::string_view base, std::string_view reference);

// Code point classes from the Turtle grammar.
bool IsPnCharsBase(char32_t c);
bool IsPnCharsU(char32_t c);
bool IsPnChars(char32_t c);

}  // namespace kgbench::rdf::detail
