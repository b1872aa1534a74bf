#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <variant>

namespace kgbench::rdf {

namespace vocab {
inline constexpr std::string_view kRdf = "http://www.w3.org/1999/02/22-rdf-syntax-ns#";
inline constexpr std::string_view kRdfs = "http://www.w3.org/2000/01/rdf-schema#";
inline constexpr std::string_view kXsd = "http://www.w3.org/2001/XMLSchema#";
inline constexpr std::string_view kFoaf = "http://xmlns.com/foaf/0.1/";

inline constexpr std::string_view kRdfType = "http://www.w3.org/1999/02/22-rdf-syntax-ns#type";
inline constexpr std::string_view kRdfFirst = "http://www.w3.org/1999/02/22-rdf-syntax-ns#first";
inline constexpr std::string_view kRdfRest = "http://www.w3.org/1999/02/22-rdf-syntax-ns#rest";
inline constexpr std::string_view kRdfNil = "http://www.w3.org/1999/02/22-rdf-syntax-ns#nil";
inline constexpr std::string_view kLangString =
    "http://www.w3.org/1999/02/22-rdf-syntax-ns#langString";

inline constexpr std::string_view kXsdString = "http://www.w3.org/2001/XMLSchema#string";
inline constexpr std::string_view kXsdBoolean = "http://www.w3.org/2001/XMLSchema#boolean";
inline constexpr std::string_view kXsdInteger = "http://www.w3.org/2001/XMLSchema#integer";
inline constexpr std::string_view kXsdDecimal = "http://www.w3.org/2001/XMLSchema#decimal";
inline constexpr std::string_view kXsdDouble = "http://www.w3.org/2001/XMLSchema#double";

inline constexpr std::string_view kFoafPerson = "http://xmlns.com/foaf/0.1/Person";
inline constexpr std::string_view kFoafKnows = "http://xmlns.com/foaf/0.1/knows";
}  // namespace vocab

struct Iri {
  std::string value;

  friend auto operator<=>(const Iri&, const Iri&) = default;
};

// Plain literals carry xsd:string; language-tagged literals carry
// rdf:langString and a lowercase tag.
struct Literal {
  std::string lexical;
  std::string datatype{vocab::kXsdString};
  std::optional<std::string> language;

  friend auto operator<=>(const Literal&, const Literal&) = default;
};

struct BlankNode {
  std::string label;

  friend auto operator<=>(const BlankNode&, const BlankNode&) = default;
};

using Term = std::variant<Iri, Literal, BlankNode>;

inline bool IsIri(const Term& t) { return std::holds_alternative<Iri>(t); }
inline bool IsLiteral(const Term& t) { return std::holds_alternative<Literal>(t); }
inline bool IsBlank(const Term& t) { return std::holds_alternative<BlankNode>(t); }

Term MakeIri(std::string_view iri);
Term MakeBlank(std::string_view label);
Term MakeLiteral(std::string_view lexical, std::string_view datatype = vocab::kXsdString);
Term MakeLangLiteral(std::string_view lexical, std::string_view language);

// N-Triples form of a term: <iri>, "lex"^^<dt>, "lex"@lang, _:label.
// Plain xsd:string literals are written without a datatype.
std::string ToNTriples(const Term& term);

// Escapes a lexical form for use between double quotes.
std::string EscapeString(std::string_view s);

struct Triple {
  Term subject;
  Term predicate;
  Term object;

  friend auto operator<=>(const Triple&, const Triple&) = default;
};

// "<s> <p> <o> ." on one line.
std::string ToNTriples(const Triple& triple);

// Throws kgbench::Error when the RDF position constraints are violated
// (literal subject, non-IRI predicate, empty IRI, ...).
void ValidateTriple(const Triple& triple);

// A set of triples plus the prefix table it was parsed with. Identity (and
// operator==) ignores the prefix table.
class Graph {
 public:
  using PrefixMap = std::map<std::string, std::string>;
  using const_iterator = std::set<Triple>::const_iterator;

  Graph() = default;
  explicit Graph(std::set<Triple> triples, PrefixMap prefixes = {})
      : triples_(std::move(triples)), prefixes_(std::move(prefixes)) {}

  // Returns false when the triple was already present.
  bool Insert(Triple triple);
  bool Contains(const Triple& triple) const { return triples_.contains(triple); }
  bool Erase(const Triple& triple) { return triples_.erase(triple) > 0; }

  std::size_t size() const noexcept { return triples_.size(); }
  bool empty() const noexcept { return triples_.empty(); }
  const_iterator begin() const noexcept { return triples_.begin(); }
  const_iterator end() const noexcept { return triples_.end(); }

  const std::set<Triple>& triples() const noexcept { return triples_; }
  const PrefixMap& prefixes() const noexcept { return prefixes_; }
  void SetPrefix(std::string prefix, std::string ns) { prefixes_[std::move(prefix)] = std::move(ns); }

  // Distinct blank node labels in order of label.
  std::set<std::string> BlankLabels() const;

  friend bool operator==(const Graph& a, const Graph& b) { return a.triples_ == b.triples_; }

 private:
  std::set<Triple> triples_;
  PrefixMap prefixes_;
};

}  // namespace kgbench::rdf
