#pragma once

#include <cstddef>

#include "kgbench/rdf/normalize.hpp"
#include "kgbench/rdf/term.hpp"

namespace kgbench::rdf {

struct DiffScores {
  std::size_t tp = 0;
  std::size_t fp = 0;
  std::size_t fn = 0;
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
};

// Precision, recall and F1 from the three counts. Both sets empty scores 1.
DiffScores ScoresFromCounts(std::size_t tp, std::size_t candidate_size,
                            std::size_t reference_size);

// Plain set comparison of two normalized sets.
DiffScores TripleSetScores(const NormalizedTripleSet& candidate,
                           const NormalizedTripleSet& reference);

// Above this many candidate label assignments, GraphScores keeps the
// canonical labels as they are.
inline constexpr std::size_t kBlankAlignmentBudget = 40320;

// Normalizes both graphs and compares them. When both contain blank nodes
// and the number of injective label assignments is within
// kBlankAlignmentBudget, the candidate's canonical blank labels are aligned
// to the reference's so that the true positive count is maximal.
DiffScores GraphScores(const Graph& candidate, const Graph& reference);

}  // namespace kgbench::rdf
