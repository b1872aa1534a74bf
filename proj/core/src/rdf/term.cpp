#include "kgbench/rdf/term.hpp"

#include <cstdio>

#include "kgbench/error.hpp"

namespace kgbench::rdf {

Term MakeIri(std::string_view iri) { return Iri{std::string(iri)}; }

Term MakeBlank(std::string_view label) { return BlankNode{std::string(label)}; }

Term MakeLiteral(std::string_view lexical, std::string_view datatype) {
  return Literal{std::string(lexical), std::string(datatype), std::nullopt};
}

Term MakeLangLiteral(std::string_view lexical, std::string_view language) {
  std::string tag(language);
  for (char& c : tag) {
    if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
  }
  return Literal{std::string(lexical), std::string(vocab::kLangString), std::move(tag)};
}

std::string EscapeString(std::string_view s) {
  std::string out;
  out.reserve(s.size() + 2);
  for (unsigned char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      case '\t': out += "\\t"; break;
      case '\b': out += "\\b"; break;
      case '\f': out += "\\f"; break;
      default:
        if (c < 0x20 || c == 0x7f) {
          char buf[8];
          std::snprintf(buf, sizeof buf, "\\u%04X", c);
          out += buf;
        } else {
          out.push_back(static_cast<char>(c));
        }
    }
  }
  return out;
}

namespace {

std::string EscapeIri(std::string_view iri) {
  std::string out;
  out.reserve(iri.size());
  for (unsigned char c : iri) {
    if (c <= 0x20 || c == '<' || c == '>' || c == '"' || c == '{' || c == '}' ||
        c == '|' || c == '^' || c == '`' || c == '\\') {
      char buf[8];
      std::snprintf(buf, sizeof buf, "\\u%04X", c);
      out += buf;
    } else {
      out.push_back(static_cast<char>(c));
    }
  }
  return out;
}

}  // namespace

std::string ToNTriples(const Term& term) {
  if (const auto* iri = std::get_if<Iri>(&term)) {
    return "<" + EscapeIri(iri->value) + ">";
  }
  if (const auto* blank = std::get_if<BlankNode>(&term)) {
    return "_:" + blank->label;
  }
  const auto& lit = std::get<Literal>(term);
  std::string out = "\"" + EscapeString(lit.lexical) + "\"";
  if (lit.language) {
    out += "@" + *lit.language;
  } else if (lit.datatype != vocab::kXsdString) {
    out += "^^<" + EscapeIri(lit.datatype) + ">";
  }
  return out;
}

std::string ToNTriples(const Triple& triple) {
  return ToNTriples(triple.subject) + " " + ToNTriples(triple.predicate) + " " +
         ToNTriples(triple.object) + " .";
}

void ValidateTriple(const Triple& triple) {
  if (IsLiteral(triple.subject)) throw Error("literal in subject position");
  if (!IsIri(triple.predicate)) throw Error("predicate must be an IRI");
  auto check_term = [](const Term& t) {
    if (const auto* iri = std::get_if<Iri>(&t); iri && iri->value.empty()) {
      throw Error("empty IRI");
    }
    if (const auto* b = std::get_if<BlankNode>(&t); b && b->label.empty()) {
      throw Error("empty blank node label");
    }
    if (const auto* lit = std::get_if<Literal>(&t)) {
      if (lit->language.has_value() != (lit->datatype == vocab::kLangString)) {
        throw Error("language tag requires rdf:langString and vice versa");
      }
    }
  };
  check_term(triple.subject);
  check_term(triple.predicate);
  check_term(triple.object);
}

bool Graph::Insert(Triple triple) { return triples_.insert(std::move(triple)).second; }

std::set<std::string> Graph::BlankLabels() const {
  std::set<std::string> labels;
  for (const auto& t : triples_) {
    if (const auto* b = std::get_if<BlankNode>(&t.subject)) labels.insert(b->label);
    if (const auto* b = std::get_if<BlankNode>(&t.object)) labels.insert(b->label);
  }
  return labels;
}

}  // namespace kgbench::rdf
