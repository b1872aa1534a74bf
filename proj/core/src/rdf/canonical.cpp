#include <algorithm>
#include <array>
#include <optional>
#include <set>
#include <unordered_map>

#include "kgbench/hash.hpp"
#include "kgbench/rdf/normalize.hpp"

namespace kgbench::rdf {
namespace {

constexpr int kMaxRefinementRounds = 10;
// Leaves explored when ties survive refinement; beyond this only the first
// member of each tied class is individualized.
constexpr int kIndividualizationBudget = 256;

struct Incidence {
  std::uint64_t predicate = 0;
  bool outgoing = true;
  int neighbor = -1;  // blank node index, or -1 for a ground term
  std::uint64_t ground = 0;
};

Graph CanonicalizeLiterals(const Graph& graph) {
  std::set<Triple> out;
  for (const auto& t : graph) {
    Triple copy = t;
    if (auto* lit = std::get_if<Literal>(&copy.object)) copy.object = CanonicalizeLiteral(*lit);
    out.insert(std::move(copy));
  }
  return Graph(std::move(out), graph.prefixes());
}

class BlankLabeler {
 public:
  explicit BlankLabeler(const Graph& graph) {
    std::unordered_map<std::string, int> index;
    auto node_of = [&](const Term& t) -> int {
      const auto* b = std::get_if<BlankNode>(&t);
      if (b == nullptr) return -1;
      auto [it, inserted] = index.try_emplace(b->label, static_cast<int>(labels_.size()));
      if (inserted) labels_.push_back(b->label);
      return it->second;
    };
    for (const auto& t : graph) {
      int s = node_of(t.subject);
      int o = node_of(t.object);
      if (s < 0 && o < 0) continue;
      blank_triples_.push_back({t, s, o});
    }
    incidences_.resize(labels_.size());
    for (const auto& bt : blank_triples_) {
      std::uint64_t p = Fnv1a64(ToNTriples(bt.triple.predicate));
      if (bt.subject >= 0) {
        incidences_[bt.subject].push_back(
            {p, true, bt.object, bt.object < 0 ? Fnv1a64(ToNTriples(bt.triple.object)) : 0});
      }
      if (bt.object >= 0) {
        incidences_[bt.object].push_back(
            {p, false, bt.subject, bt.subject < 0 ? Fnv1a64(ToNTriples(bt.triple.subject)) : 0});
      }
    }
  }

  std::map<std::string, std::string> Labels() {
    std::map<std::string, std::string> result;
    if (labels_.empty()) return result;
    std::vector<std::uint64_t> colors(labels_.size(), Fnv1a64("blank"));
    int budget = kIndividualizationBudget;
    std::optional<Leaf> best;
    Search(std::move(colors), budget, best);
    for (std::size_t rank = 0; rank < best->order.size(); ++rank) {
      result[labels_[best->order[rank]]] = "c" + std::to_string(rank);
    }
    return result;
  }

 private:
  struct BlankTriple {
    Triple triple;
    int subject;
    int object;
  };

  struct Leaf {
    std::vector<std::string> lines;
    std::vector<int> order;
  };

  static std::size_t CountDistinct(std::vector<std::uint64_t> colors) {
    std::sort(colors.begin(), colors.end());
    return static_cast<std::size_t>(std::unique(colors.begin(), colors.end()) - colors.begin());
  }

  // signature(n) = hash(previous signature, sorted multiset of
  // (predicate, direction, neighbor signature)).
  std::vector<std::uint64_t> Refine(std::vector<std::uint64_t> colors) const {
    std::size_t classes = CountDistinct(colors);
    std::vector<std::array<std::uint64_t, 3>> items;
    for (int round = 0; round < kMaxRefinementRounds; ++round) {
      std::vector<std::uint64_t> next(colors.size());
      for (std::size_t n = 0; n < colors.size(); ++n) {
        items.clear();
        for (const auto& inc : incidences_[n]) {
          std::uint64_t other = inc.neighbor >= 0 ? colors[inc.neighbor] : inc.ground;
          items.push_back({inc.predicate, inc.outgoing ? 1u : 2u, other});
        }
        std::sort(items.begin(), items.end());
        std::uint64_t h = HashCombine(0x5167, colors[n]);
        for (const auto& item : items) {
          h = HashCombine(h, item[0]);
          h = HashCombine(h, item[1]);
          h = HashCombine(h, item[2]);
        }
        next[n] = h;
      }
      std::size_t next_classes = CountDistinct(next);
      colors = std::move(next);
      if (next_classes == classes) break;
      classes = next_classes;
    }
    return colors;
  }

  // Sorted incident triples with blank neighbors written as their current
  // signature and the node itself as "_".
  std::string TieKey(int node, const std::vector<std::uint64_t>& colors) const {
    auto render = [&](const Term& term, int index) {
      if (index == node) return std::string("_");
      if (index >= 0) return "#" + ToHex(colors[index]);
      return ToNTriples(term);
    };
    std::vector<std::string> parts;
    for (const auto& bt : blank_triples_) {
      if (bt.subject != node && bt.object != node) continue;
      parts.push_back(render(bt.triple.subject, bt.subject) + " " +
                      ToNTriples(bt.triple.predicate) + " " + render(bt.triple.object, bt.object));
    }
    std::sort(parts.begin(), parts.end());
    std::string key;
    for (const auto& p : parts) key += p + "\n";
    return key;
  }

  std::vector<std::string> Render(const std::vector<int>& order) const {
    std::vector<std::string> label(labels_.size());
    for (std::size_t rank = 0; rank < order.size(); ++rank) {
      label[order[rank]] = "c" + std::to_string(rank);
    }
    auto term = [&](const Term& t, int index) {
      return index >= 0 ? "_:" + label[index] : ToNTriples(t);
    };
    std::vector<std::string> lines;
    lines.reserve(blank_triples_.size());
    for (const auto& bt : blank_triples_) {
      lines.push_back(term(bt.triple.subject, bt.subject) + " " +
                      ToNTriples(bt.triple.predicate) + " " + term(bt.triple.object, bt.object));
    }
    std::sort(lines.begin(), lines.end());
    return lines;
  }

  void Search(std::vector<std::uint64_t> colors, int& budget, std::optional<Leaf>& best) const {
    colors = Refine(std::move(colors));
    const int n = static_cast<int>(colors.size());
    std::vector<int> order(n);
    for (int i = 0; i < n; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](int a, int b) { return colors[a] < colors[b]; });

    // Break color ties by the incident-triple key; keys are only needed there.
    std::vector<std::string> keys(n);
    for (int i = 0; i < n;) {
      int j = i;
      while (j < n && colors[order[j]] == colors[order[i]]) ++j;
      if (j - i > 1) {
        for (int k = i; k < j; ++k) keys[order[k]] = TieKey(order[k], colors);
        std::sort(order.begin() + i, order.begin() + j,
                  [&](int a, int b) { return keys[a] < keys[b]; });
      }
      i = j;
    }

    int tie_start = -1;
    int tie_end = -1;
    for (int i = 0; i + 1 < n; ++i) {
      if (colors[order[i]] == colors[order[i + 1]] && keys[order[i]] == keys[order[i + 1]]) {
        tie_start = i;
        tie_end = i + 1;
        while (tie_end + 1 < n && colors[order[tie_end + 1]] == colors[order[i]] &&
               keys[order[tie_end + 1]] == keys[order[i]]) {
          ++tie_end;
        }
        break;
      }
    }

    if (tie_start < 0) {
      Leaf leaf{Render(order), order};
      if (!best || leaf.lines < best->lines) best = std::move(leaf);
      --budget;
      return;
    }

    // Individualize each member of the first tied class in turn and keep the
    // labeling whose serialization is smallest.
    std::vector<int> members(order.begin() + tie_start, order.begin() + tie_end + 1);
    std::sort(members.begin(), members.end(),
              [&](int a, int b) { return labels_[a] < labels_[b]; });
    for (std::size_t m = 0; m < members.size(); ++m) {
      if (m > 0 && budget <= 0) break;
      std::vector<std::uint64_t> branch = colors;
      branch[members[m]] = HashCombine(branch[members[m]], 0x1d1d1d1d);
      Search(std::move(branch), budget, best);
    }
  }

  std::vector<std::string> labels_;
  std::vector<BlankTriple> blank_triples_;
  std::vector<std::vector<Incidence>> incidences_;
};

void SortLines(std::vector<Triple>& triples, std::vector<std::string>& lines) {
  std::vector<std::size_t> idx(triples.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return lines[a] < lines[b]; });
  std::vector<Triple> sorted_triples;
  std::vector<std::string> sorted_lines;
  sorted_triples.reserve(idx.size());
  sorted_lines.reserve(idx.size());
  for (std::size_t i : idx) {
    if (!sorted_lines.empty() && sorted_lines.back() == lines[i]) continue;
    sorted_triples.push_back(std::move(triples[i]));
    sorted_lines.push_back(std::move(lines[i]));
  }
  triples = std::move(sorted_triples);
  lines = std::move(sorted_lines);
}

Term Rename(const Term& t, const std::map<std::string, std::string>& mapping) {
  if (const auto* b = std::get_if<BlankNode>(&t)) {
    auto it = mapping.find(b->label);
    if (it != mapping.end()) return BlankNode{it->second};
  }
  return t;
}

}  // namespace

std::map<std::string, std::string> CanonicalBlankLabels(const Graph& graph) {
  return BlankLabeler(CanonicalizeLiterals(graph)).Labels();
}

NormalizedTripleSet Normalize(const Graph& graph) {
  Graph literal_canonical = CanonicalizeLiterals(graph);
  auto labels = BlankLabeler(literal_canonical).Labels();
  NormalizedTripleSet out;
  out.triples_.reserve(literal_canonical.size());
  out.lines_.reserve(literal_canonical.size());
  for (const auto& t : literal_canonical) {
    Triple renamed{Rename(t.subject, labels), t.predicate, Rename(t.object, labels)};
    out.lines_.push_back(ToNTriples(renamed));
    out.triples_.push_back(std::move(renamed));
  }
  SortLines(out.triples_, out.lines_);
  return out;
}

NormalizedTripleSet RelabelBlanks(const NormalizedTripleSet& set,
                                  const std::map<std::string, std::string>& mapping) {
  NormalizedTripleSet out;
  out.triples_.reserve(set.size());
  out.lines_.reserve(set.size());
  for (const auto& t : set.triples_) {
    Triple renamed{Rename(t.subject, mapping), t.predicate, Rename(t.object, mapping)};
    out.lines_.push_back(ToNTriples(renamed));
    out.triples_.push_back(std::move(renamed));
  }
  SortLines(out.triples_, out.lines_);
  return out;
}

Graph NormalizedTripleSet::ToGraph() const {
  return Graph(std::set<Triple>(triples_.begin(), triples_.end()));
}

std::string NormalizedTripleSet::ToNTriplesDocument() const {
  std::string out;
  for (const auto& line : lines_) out += line + "\n";
  return out;
}

}  // namespace kgbench::rdf
