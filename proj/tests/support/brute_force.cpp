#include "brute_force.hpp"

#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "kgbench/rdf/normalize.hpp"

namespace kgbench::testing {
namespace {

using rdf::Term;

std::string Render(const Term& t, const std::string& blank_prefix,
                   const std::map<std::string, std::string>* mapping) {
  if (const auto* b = std::get_if<rdf::BlankNode>(&t)) {
    if (mapping) {
      auto it = mapping->find(b->label);
      if (it != mapping->end()) return "_:ref_" + it->second;
    }
    return "_:" + blank_prefix + b->label;
  }
  if (const auto* l = std::get_if<rdf::Literal>(&t)) return rdf::ToNTriples(Term(rdf::CanonicalizeLiteral(*l)));
  return rdf::ToNTriples(t);
}

std::set<std::string> Lines(const rdf::Graph& g, const std::string& blank_prefix,
                            const std::map<std::string, std::string>* mapping) {
  std::set<std::string> lines;
  for (const auto& t : g) {
    lines.insert(Render(t.subject, blank_prefix, mapping) + " " + Render(t.predicate, "", nullptr) + " " +
                 Render(t.object, blank_prefix, mapping));
  }
  return lines;
}

}  // namespace

BestMatch BruteForceBestMatch(const rdf::Graph& candidate, const rdf::Graph& reference) {
  std::set<std::string> ref_lines = Lines(reference, "ref_", nullptr);
  std::set<std::string> cand_base = Lines(candidate, "cand_", nullptr);
  std::vector<std::string> cand_blanks;
  for (const auto& l : candidate.BlankLabels()) cand_blanks.push_back(l);
  std::vector<std::string> ref_blanks;
  for (const auto& l : reference.BlankLabels()) ref_blanks.push_back(l);

  BestMatch best;
  best.candidate_size = cand_base.size();
  best.reference_size = ref_lines.size();

  std::map<std::string, std::string> mapping;
  std::vector<bool> taken(ref_blanks.size(), false);
  std::function<void(std::size_t)> assign = [&](std::size_t i) {
    if (i == cand_blanks.size()) {
      std::size_t tp = 0;
      for (const auto& line : Lines(candidate, "cand_", &mapping)) tp += ref_lines.count(line);
      best.tp = std::max(best.tp, tp);
      return;
    }
    assign(i + 1);  // left unmatched
    for (std::size_t j = 0; j < ref_blanks.size(); ++j) {
      if (taken[j]) continue;
      taken[j] = true;
      mapping[cand_blanks[i]] = ref_blanks[j];
      assign(i + 1);
      mapping.erase(cand_blanks[i]);
      taken[j] = false;
    }
  };
  assign(0);

  const double c = static_cast<double>(best.candidate_size);
  const double r = static_cast<double>(best.reference_size);
  if (best.candidate_size == 0 && best.reference_size == 0) {
    best.precision = best.recall = best.f1 = 1.0;
    return best;
  }
  best.precision = best.candidate_size ? static_cast<double>(best.tp) / c : 0.0;
  best.recall = best.reference_size ? static_cast<double>(best.tp) / r : 0.0;
  best.f1 = best.precision + best.recall > 0
                ? 2.0 * best.precision * best.recall / (best.precision + best.recall)
                : 0.0;
  return best;
}

}  // namespace kgbench::testing
