#include "kgbench/rdf/scores.hpp"

#include <algorithm>
#include <functional>
#include <iterator>
#include <unordered_set>

namespace kgbench::rdf {
namespace {

std::vector<std::string> BlankLabelsOf(const NormalizedTripleSet& set) {
  std::set<std::string> labels;
  for (const auto& t : set.triples()) {
    if (const auto* b = std::get_if<BlankNode>(&t.subject)) labels.insert(b->label);
    if (const auto* b = std::get_if<BlankNode>(&t.object)) labels.insert(b->label);
  }
  return {labels.begin(), labels.end()};
}

// Number of injective maps from a set of size k into a set of size n, or
// budget + 1 when it exceeds the budget.
std::size_t InjectionCount(std::size_t n, std::size_t k, std::size_t budget) {
  std::size_t count = 1;
  for (std::size_t i = 0; i < k; ++i) {
    count *= (n - i);
    if (count > budget) return budget + 1;
  }
  return count;
}

bool HasBlank(const Triple& t) { return IsBlank(t.subject) || IsBlank(t.object); }

}  // namespace

DiffScores ScoresFromCounts(std::size_t tp, std::size_t candidate_size,
                            std::size_t reference_size) {
  DiffScores s;
  s.tp = tp;
  s.fp = candidate_size - tp;
  s.fn = reference_size - tp;
  if (candidate_size == 0 && reference_size == 0) {
    s.precision = s.recall = s.f1 = 1.0;
    return s;
  }
  s.precision = candidate_size == 0 ? 0.0 : static_cast<double>(tp) / candidate_size;
  s.recall = reference_size == 0 ? 0.0 : static_cast<double>(tp) / reference_size;
  s.f1 = s.precision + s.recall == 0.0
             ? 0.0
             : 2.0 * s.precision * s.recall / (s.precision + s.recall);
  return s;
}

DiffScores TripleSetScores(const NormalizedTripleSet& candidate,
                           const NormalizedTripleSet& reference) {
  std::vector<std::string> common;
  std::set_intersection(candidate.lines().begin(), candidate.lines().end(),
                        reference.lines().begin(), reference.lines().end(),
                        std::back_inserter(common));
  return ScoresFromCounts(common.size(), candidate.size(), reference.size());
}

DiffScores GraphScores(const Graph& candidate, const Graph& reference) {
  NormalizedTripleSet cand = Normalize(candidate);
  NormalizedTripleSet ref = Normalize(reference);
  DiffScores canonical = TripleSetScores(cand, ref);

  std::vector<std::string> cand_blanks = BlankLabelsOf(cand);
  std::vector<std::string> ref_blanks = BlankLabelsOf(ref);
  if (cand_blanks.empty() || ref_blanks.empty()) return canonical;
  const bool cand_is_small = cand_blanks.size() <= ref_blanks.size();
  const auto& small = cand_is_small ? cand_blanks : ref_blanks;
  const auto& large = cand_is_small ? ref_blanks : cand_blanks;
  if (InjectionCount(large.size(), small.size(), kBlankAlignmentBudget) > kBlankAlignmentBudget) {
    return canonical;
  }

  std::unordered_set<std::string> ref_lines(ref.lines().begin(), ref.lines().end());
  std::size_t ground_tp = 0;
  std::vector<const Triple*> blank_triples;
  for (std::size_t i = 0; i < cand.size(); ++i) {
    if (HasBlank(cand.triples()[i])) {
      blank_triples.push_back(&cand.triples()[i]);
    } else if (ref_lines.contains(cand.lines()[i])) {
      ++ground_tp;
    }
  }

  std::size_t best_tp = canonical.tp;
  std::vector<std::size_t> chosen;
  std::vector<bool> used(large.size(), false);
  std::map<std::string, std::string> mapping;

  auto evaluate = [&] {
    mapping.clear();
    if (cand_is_small) {
      for (std::size_t i = 0; i < small.size(); ++i) mapping[small[i]] = large[chosen[i]];
    } else {
      // Candidate blanks outside the image get labels no reference blank has.
      for (std::size_t j = 0; j < large.size(); ++j) mapping[large[j]] = "u" + std::to_string(j);
      for (std::size_t i = 0; i < small.size(); ++i) mapping[large[chosen[i]]] = small[i];
    }
    auto rename = [&](const Term& t) -> Term {
      if (const auto* b = std::get_if<BlankNode>(&t)) return BlankNode{mapping.at(b->label)};
      return t;
    };
    std::size_t tp = ground_tp;
    for (const Triple* t : blank_triples) {
      Triple renamed{rename(t->subject), t->predicate, rename(t->object)};
      if (ref_lines.contains(ToNTriples(renamed))) ++tp;
    }
    best_tp = std::max(best_tp, tp);
  };

  std::function<void()> enumerate = [&] {
    if (chosen.size() == small.size()) {
      evaluate();
      return;
    }
    for (std::size_t j = 0; j < large.size(); ++j) {
      if (used[j]) continue;
      used[j] = true;
      chosen.push_back(j);
      enumerate();
      chosen.pop_back();
      used[j] = false;
    }
  };
  enumerate();

  return ScoresFromCounts(best_tp, cand.size(), ref.size());
}

}  // namespace kgbench::rdf
