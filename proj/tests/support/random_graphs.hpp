#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>

#include "kgbench/hash.hpp"
#include "kgbench/rdf/term.hpp"

namespace kgbench::testing {

// Graphs exercising every term shape the serializer has to handle: escapes,
// non-ASCII text, language tags, numeric forms, custom datatypes, IRIs that
// cannot be abbreviated and shared blank nodes.
rdf::Graph RandomRichGraph(SeededRandom& rng, std::size_t max_triples);

// A small graph over a tiny vocabulary so that two draws overlap often.
rdf::Graph RandomSmallGraph(SeededRandom& rng, std::size_t max_triples, std::size_t max_blanks);

// A reference graph and a candidate derived from it by renaming blank
// nodes, dropping, adding and editing triples.
std::pair<rdf::Graph, rdf::Graph> RandomGraphPair(SeededRandom& rng, std::size_t max_triples,
                                                  std::size_t max_blanks);

// Applies a random bijective relabeling to the graph's blank nodes.
rdf::Graph RelabelRandomly(const rdf::Graph& graph, SeededRandom& rng);

}  // namespace kgbench::testing
