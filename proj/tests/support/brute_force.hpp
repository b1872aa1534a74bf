#pragma once

#include <cstddef>

#include "kgbench/rdf/term.hpp"

namespace kgbench::testing {

struct BestMatch {
  std::size_t tp = 0;
  std::size_t candidate_size = 0;
  std::size_t reference_size = 0;
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
};

// Maximum overlap between the two graphs over every way of identifying
// candidate blank nodes with distinct reference blank nodes (or with none),
// after literal canonicalization. Exponential; meant for tiny graphs.
BestMatch BruteForceBestMatch(const rdf::Graph& candidate, const rdf::Graph& reference);

}  // namespace kgbench::testing
