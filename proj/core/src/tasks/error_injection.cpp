#include <algorithm>
#include <array>
#include <set>

#include "kgbench/error.hpp"
#include "kgbench/hash.hpp"
#include "kgbench/rdf/turtle.hpp"
#include "kgbench/tasks/turtle_fix.hpp"

namespace kgbench::tasks::turtle_fix {
namespace {

constexpr std::array<std::pair<ErrorKind, std::string_view>, 6> kKindNames = {{
    {ErrorKind::kDropFinalDot, "drop_final_dot"},
    {ErrorKind::kSwapSeparator, "swap_separator"},
    {ErrorKind::kBreakPrefixDirective, "break_prefix_directive"},
    {ErrorKind::kDeleteIriClose, "delete_iri_close"},
    {ErrorKind::kUnbalanceQuote, "unbalance_quote"},
    {ErrorKind::kUndeclaredPrefix, "undeclared_prefix"},
}};

// A manipulation that could be applied; offsets are in the original document.
struct Opportunity {
  ErrorKind kind;
  std::size_t offset;
  std::string original;
  std::string replacement;
};

bool IsNameStart(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
         static_cast<unsigned char>(c) >= 0x80;
}

bool IsNameChar(char c) {
  return IsNameStart(c) || (c >= '0' && c <= '9') || c == '_' || c == '-' || c == '.';
}

std::string UndeclaredVariant(const std::string& prefix, const std::set<std::string>& declared) {
  std::string candidate = prefix.empty() ? "undeclared" : prefix + "x";
  while (declared.contains(candidate)) candidate += "x";
  return candidate;
}

// Lists every applicable manipulation in one statement.
std::vector<Opportunity> ScanStatement(std::string_view doc, const rdf::StatementSpan& span,
                                       const std::set<std::string>& declared) {
  std::vector<Opportunity> out;
  std::string_view text = doc.substr(span.offset, span.length);
  const std::size_t base = span.offset;
  const bool directive = text.starts_with("@prefix") || text.starts_with("@base");

  if (span.terminated) out.push_back({ErrorKind::kDropFinalDot, span.end() - 1, ".", ""});

  std::size_t i = 0;
  bool prefix_colon_seen = false;
  while (i < text.size()) {
    char c = text[i];
    if (c == '#') {
      while (i < text.size() && text[i] != '\n') ++i;
      continue;
    }
    if (c == '<') {
      std::size_t close = text.find('>', i + 1);
      if (close == std::string_view::npos) break;
      out.push_back({ErrorKind::kDeleteIriClose, base + close, ">", ""});
      i = close + 1;
      continue;
    }
    if (c == '"' || c == '\'') {
      bool long_form = text.substr(i, 3) == std::string(3, c);
      std::size_t j = i + (long_form ? 3 : 1);
      while (j < text.size()) {
        if (text[j] == '\\') {
          j += 2;
          continue;
        }
        if (long_form ? text.substr(j, 3) == std::string(3, c) : text[j] == c) break;
        ++j;
      }
      if (j >= text.size()) break;
      if (!long_form) out.push_back({ErrorKind::kUnbalanceQuote, base + j, std::string(1, c), ""});
      i = j + (long_form ? 3 : 1);
      continue;
    }
    if (c == ';' || c == ',') {
      out.push_back({ErrorKind::kSwapSeparator, base + i, std::string(1, c), c == ';' ? "," : ";"});
      ++i;
      continue;
    }
    if (c == '_' && i + 1 < text.size() && text[i + 1] == ':') {
      i += 2;
      while (i < text.size() && IsNameChar(text[i])) ++i;
      continue;
    }
    if (c == '@') {
      // directive keyword or language tag
      ++i;
      while (i < text.size() && IsNameChar(text[i])) ++i;
      continue;
    }
    if (IsNameStart(c) || c == ':') {
      std::size_t start = i;
      while (i < text.size() && IsNameChar(text[i])) ++i;
      if (i < text.size() && text[i] == ':') {
        std::string prefix(text.substr(start, i - start));
        if (directive && !prefix_colon_seen) {
          prefix_colon_seen = true;
          out.push_back({ErrorKind::kBreakPrefixDirective, base + i, ":", ""});
        } else if (!directive && declared.contains(prefix)) {
          out.push_back({ErrorKind::kUndeclaredPrefix, base + start, prefix,
                         UndeclaredVariant(prefix, declared)});
        }
        ++i;
        while (i < text.size() && (IsNameChar(text[i]) || text[i] == ':')) ++i;
      }
      continue;
    }
    ++i;
  }
  return out;
}

}  // namespace

std::string_view ToString(ErrorKind kind) {
  for (const auto& [k, name] : kKindNames) {
    if (k == kind) return name;
  }
  return "unknown";
}

std::optional<ErrorKind> ErrorKindFromString(std::string_view name) {
  for (const auto& [k, n] : kKindNames) {
    if (n == name) return k;
  }
  return std::nullopt;
}

Injection InjectErrors(std::string_view document, std::size_t k, std::uint64_t seed) {
  if (k == 0) throw SizeError("error count must be at least 1");
  const auto spans = rdf::SplitStatements(document);

  std::set<std::string> declared;
  for (const auto& span : spans) {
    std::string_view text = document.substr(span.offset, span.length);
    if (text.starts_with("@prefix")) {
      std::size_t start = text.find_first_not_of(" \t", 7);
      std::size_t colon = text.find(':', start);
      if (start != std::string_view::npos && colon != std::string_view::npos) {
        declared.insert(std::string(text.substr(start, colon - start)));
      }
    }
  }

  std::vector<std::vector<Opportunity>> by_statement;
  std::vector<std::size_t> manipulable;
  for (std::size_t s = 0; s < spans.size(); ++s) {
    by_statement.push_back(ScanStatement(document, spans[s], declared));
    if (!by_statement.back().empty()) manipulable.push_back(s);
  }
  if (manipulable.size() < k) {
    throw SizeError("cannot inject " + std::to_string(k) + " errors into a document with " +
                    std::to_string(manipulable.size()) + " manipulable statements");
  }

  SeededRandom rng(HashCombine(seed, Fnv1a64("turtle-fix/inject")));
  rng.Shuffle(manipulable);
  manipulable.resize(k);
  std::sort(manipulable.begin(), manipulable.end());

  struct Chosen {
    std::size_t statement;
    Opportunity op;
  };
  std::vector<Chosen> chosen;
  for (std::size_t s : manipulable) {
    const auto& ops = by_statement[s];
    std::vector<ErrorKind> kinds;
    for (const auto& op : ops) {
      if (std::find(kinds.begin(), kinds.end(), op.kind) == kinds.end()) kinds.push_back(op.kind);
    }
    ErrorKind kind = rng.Pick(kinds);
    std::vector<const Opportunity*> of_kind;
    for (const auto& op : ops) {
      if (op.kind == kind) of_kind.push_back(&op);
    }
    chosen.push_back({s, *rng.Pick(of_kind)});
  }

  Injection result;
  std::size_t cursor = 0;
  std::ptrdiff_t shift = 0;
  for (const auto& c : chosen) {
    result.corrupted.append(document.substr(cursor, c.op.offset - cursor));
    result.corrupted += c.op.replacement;
    cursor = c.op.offset + c.op.original.size();
    result.error_log.push_back({c.op.kind, c.statement,
                                static_cast<std::size_t>(static_cast<std::ptrdiff_t>(c.op.offset) + shift),
                                c.op.original, c.op.replacement});
    shift += static_cast<std::ptrdiff_t>(c.op.replacement.size()) -
             static_cast<std::ptrdiff_t>(c.op.original.size());
  }
  result.corrupted.append(document.substr(cursor));
  return result;
}

std::string RestoreManipulations(std::string_view corrupted,
                                 const std::vector<Manipulation>& error_log) {
  std::vector<const Manipulation*> ordered;
  for (const auto& m : error_log) ordered.push_back(&m);
  std::sort(ordered.begin(), ordered.end(),
            [](const Manipulation* a, const Manipulation* b) { return a->offset > b->offset; });
  std::string out(corrupted);
  for (const Manipulation* m : ordered) {
    if (out.compare(m->offset, m->replacement.size(), m->replacement) != 0) {
      throw Error("error log does not match the corrupted document at offset " +
                  std::to_string(m->offset));
    }
    out.replace(m->offset, m->replacement.size(), m->original);
  }
  return out;
}

nlohmann::json ErrorLogToJson(const std::vector<Manipulation>& error_log) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& m : error_log) {
    arr.push_back({{"kind", ToString(m.kind)},
                   {"statement_index", m.statement_index},
                   {"offset", m.offset},
                   {"original", m.original},
                   {"replacement", m.replacement}});
  }
  return arr;
}

std::vector<Manipulation> ErrorLogFromJson(const nlohmann::json& j) {
  std::vector<Manipulation> log;
  for (const auto& item : j) {
    auto kind = ErrorKindFromString(item.at("kind").get<std::string>());
    if (!kind) throw Error("unknown error kind " + item.at("kind").dump());
    log.push_back({*kind, item.at("statement_index").get<std::size_t>(),
                   item.at("offset").get<std::size_t>(), item.at("original").get<std::string>(),
                   item.at("replacement").get<std::string>()});
  }
  return log;
}

}  // namespace kgbench::tasks::turtle_fix
