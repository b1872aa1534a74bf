#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "kgbench/rdf/term.hpp"

namespace kgbench::rdf {

// Canonical lexical form for xsd:integer, xsd:decimal, xsd:double and
// xsd:boolean literals. Other datatypes, and lexical forms that are not valid
// for their datatype, are returned unchanged.
Literal CanonicalizeLiteral(const Literal& literal);

// Deterministic blank node labels "c0", "c1", ... keyed by the graph's own
// labels. Isomorphic graphs receive labels that make them identical.
std::map<std::string, std::string> CanonicalBlankLabels(const Graph& graph);

// Comparison-ready form of a graph: literals canonicalized, blank nodes
// canonically relabeled, triples sorted by their N-Triples line.
class NormalizedTripleSet {
 public:
  NormalizedTripleSet() = default;

  const std::vector<Triple>& triples() const noexcept { return triples_; }
  // N-Triples lines, parallel to triples() and sorted.
  const std::vector<std::string>& lines() const noexcept { return lines_; }

  std::size_t size() const noexcept { return triples_.size(); }
  bool empty() const noexcept { return triples_.empty(); }

  Graph ToGraph() const;
  std::string ToNTriplesDocument() const;

  friend bool operator==(const NormalizedTripleSet& a, const NormalizedTripleSet& b) {
    return a.lines_ == b.lines_;
  }

 private:
  friend NormalizedTripleSet Normalize(const Graph& graph);
  friend NormalizedTripleSet RelabelBlanks(const NormalizedTripleSet& set,
                                           const std::map<std::string, std::string>& mapping);

  std::vector<Triple> triples_;
  std::vector<std::string> lines_;
};

NormalizedTripleSet Normalize(const Graph& graph);

// Renames blank nodes according to `mapping` (labels not in the mapping are
// kept) and re-sorts. Used for alignment between two normalized sets.
NormalizedTripleSet RelabelBlanks(const NormalizedTripleSet& set,
                                  const std::map<std::string, std::string>& mapping);

}  // namespace kgbench::rdf
