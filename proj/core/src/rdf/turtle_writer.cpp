#include <algorithm>
#include <map>
#include <regex>

#include "kgbench/rdf/turtle.hpp"

namespace kgbench::rdf {
namespace {

bool IsSafeLocalChar(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') ||
         c == '_' || c == '-';
}

// Local names we abbreviate: ASCII name characters, not starting with '-'.
bool IsSafeLocalName(std::string_view local) {
  if (local.empty() || local.front() == '-') return false;
  for (char c : local) {
    if (!IsSafeLocalChar(c)) return false;
  }
  return true;
}

bool IsSafePrefix(std::string_view prefix) {
  if (prefix.empty()) return true;
  if (!((prefix[0] >= 'a' && prefix[0] <= 'z') || (prefix[0] >= 'A' && prefix[0] <= 'Z'))) {
    return false;
  }
  for (char c : prefix) {
    if (!IsSafeLocalChar(c)) return false;
  }
  return true;
}

class Writer {
 public:
  explicit Writer(const Graph& graph) : graph_(graph) {
    for (const auto& [prefix, ns] : graph.prefixes()) {
      if (IsSafePrefix(prefix) && !ns.empty()) usable_prefixes_.emplace_back(prefix, ns);
    }
  }

  std::string Write() {
    std::string out;
    for (const auto& [prefix, ns] : usable_prefixes_) {
      out += "@prefix " + prefix + ": " + ToNTriples(MakeIri(ns)) + " .\n";
    }
    if (!usable_prefixes_.empty() && !graph_.empty()) out += "\n";

    // rdf:type statements lead each subject block.
    const Term type = MakeIri(vocab::kRdfType);
    std::vector<const Triple*> ordered;
    for (const auto& t : graph_) ordered.push_back(&t);
    std::stable_sort(ordered.begin(), ordered.end(), [&](const Triple* a, const Triple* b) {
      if (a->subject != b->subject) return a->subject < b->subject;
      return (a->predicate == type) > (b->predicate == type);
    });

    const Term* subject = nullptr;
    const Term* predicate = nullptr;
    for (const Triple* triple : ordered) {
      const Triple& t = *triple;
      if (subject == nullptr || t.subject != *subject) {
        if (subject != nullptr) out += " .\n";
        out += WriteTerm(t.subject) + " " + WritePredicate(t.predicate) + " " + WriteTerm(t.object);
        subject = &t.subject;
      } else if (t.predicate != *predicate) {
        out += " ;\n    " + WritePredicate(t.predicate) + " " + WriteTerm(t.object);
      } else {
        out += ", " + WriteTerm(t.object);
      }
      predicate = &t.predicate;
    }
    if (subject != nullptr) out += " .\n";
    return out;
  }

 private:
  std::string WriteIri(const std::string& iri) {
    const std::pair<std::string, std::string>* best = nullptr;
    for (const auto& entry : usable_prefixes_) {
      if (iri.size() > entry.second.size() && iri.starts_with(entry.second) &&
          IsSafeLocalName(std::string_view(iri).substr(entry.second.size())) &&
          (best == nullptr || entry.second.size() > best->second.size())) {
        best = &entry;
      }
    }
    if (best != nullptr) return best->first + ":" + iri.substr(best->second.size());
    return ToNTriples(MakeIri(iri));
  }

  std::string WritePredicate(const Term& predicate) {
    const auto& iri = std::get<Iri>(predicate).value;
    if (iri == vocab::kRdfType) return "a";
    return WriteIri(iri);
  }

  std::string WriteTerm(const Term& term) {
    if (const auto* iri = std::get_if<Iri>(&term)) return WriteIri(iri->value);
    if (const auto* blank = std::get_if<BlankNode>(&term)) {
      auto [it, inserted] =
          blank_labels_.try_emplace(blank->label, "b" + std::to_string(blank_labels_.size()));
      return "_:" + it->second;
    }
    const auto& lit = std::get<Literal>(term);
    if (!lit.language && IsBareToken(lit)) return lit.lexical;
    std::string out = "\"" + EscapeString(lit.lexical) + "\"";
    if (lit.language) {
      out += "@" + *lit.language;
    } else if (lit.datatype != vocab::kXsdString) {
      out += "^^" + WriteIri(lit.datatype);
    }
    return out;
  }

  // Literals whose lexical form is exactly the Turtle shorthand token.
  static bool IsBareToken(const Literal& lit) {
    static const std::regex kInteger(R"([+-]?[0-9]+)");
    static const std::regex kDecimal(R"([+-]?[0-9]*\.[0-9]+)");
    static const std::regex kDouble(
        R"([+-]?([0-9]+\.[0-9]*[eE][+-]?[0-9]+|\.[0-9]+[eE][+-]?[0-9]+|[0-9]+[eE][+-]?[0-9]+))");
    if (lit.datatype == vocab::kXsdInteger) return std::regex_match(lit.lexical, kInteger);
    if (lit.datatype == vocab::kXsdDecimal) return std::regex_match(lit.lexical, kDecimal);
    if (lit.datatype == vocab::kXsdDouble) return std::regex_match(lit.lexical, kDouble);
    if (lit.datatype == vocab::kXsdBoolean) return lit.lexical == "true" || lit.lexical == "false";
    return false;
  }

  const Graph& graph_;
  std::vector<std::pair<std::string, std::string>> usable_prefixes_;
  std::map<std::string, std::string> blank_labels_;
};

}  // namespace

std::string SerializeTurtle(const Graph& graph) { return Writer(graph).Write(); }

}  // namespace kgbench::rdf
