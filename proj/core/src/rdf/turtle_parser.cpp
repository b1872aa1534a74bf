#include "rdf/turtle_parser.hpp"

#include <cctype>
#include <optional>
#include <utility>
#include <vector>

#include "kgbench/error.hpp"
#include "kgbench/rdf/turtle.hpp"

namespace kgbench::rdf {
namespace detail {

bool IsPnCharsBase(char32_t c) {
  return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || (c >= 0xC0 && c <= 0xD6) ||
         (c >= 0xD8 && c <= 0xF6) || (c >= 0xF8 && c <= 0x2FF) || (c >= 0x370 && c <= 0x37D) ||
         (c >= 0x37F && c <= 0x1FFF) || (c >= 0x200C && c <= 0x200D) ||
         (c >= 0x2070 && c <= 0x218F) || (c >= 0x2C00 && c <= 0x2FEF) ||
         (c >= 0x3001 && c <= 0xD7FF) || (c >= 0xF900 && c <= 0xFDCF) ||
         (c >= 0xFDF0 && c <= 0xFFFD) || (c >= 0x10000 && c <= 0xEFFFF);
}

bool IsPnCharsU(char32_t c) { return c == '_' || IsPnCharsBase(c); }

bool IsPnChars(char32_t c) {
  return IsPnCharsU(c) || c == '-' || (c >= '0' && c <= '9') || c == 0xB7 ||
         (c >= 0x300 && c <= 0x36F) || (c >= 0x203F && c <= 0x2040);
}

namespace {

struct IriParts {
  std::optional<std::string> scheme;
  std::optional<std::string> authority;
  std::string path;
  std::optional<std::string> query;
  std::optional<std::string> fragment;
};

IriParts SplitIri(std::string_view s) {
  IriParts parts;
  // scheme = ALPHA *( ALPHA / DIGIT / "+" / "-" / "." ) ":"
  std::size_t i = 0;
  if (!s.empty() && ((s[0] >= 'a' && s[0] <= 'z') || (s[0] >= 'A' && s[0] <= 'Z'))) {
    std::size_t j = 1;
    while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '+' ||
                            s[j] == '-' || s[j] == '.')) {
      ++j;
    }
    if (j < s.size() && s[j] == ':') {
      parts.scheme = std::string(s.substr(0, j));
      i = j + 1;
    }
  }
  if (s.substr(i, 2) == "//") {
    std::size_t end = s.find_first_of("/?#", i + 2);
    if (end == std::string_view::npos) end = s.size();
    parts.authority = std::string(s.substr(i + 2, end - i - 2));
    i = end;
  }
  std::size_t path_end = s.find_first_of("?#", i);
  if (path_end == std::string_view::npos) path_end = s.size();
  parts.path = std::string(s.substr(i, path_end - i));
  i = path_end;
  if (i < s.size() && s[i] == '?') {
    std::size_t end = s.find('#', i);
    if (end == std::string_view::npos) end = s.size();
    parts.query = std::string(s.substr(i + 1, end - i - 1));
    i = end;
  }
  if (i < s.size() && s[i] == '#') parts.fragment = std::string(s.substr(i + 1));
  return parts;
}

std::string RemoveDotSegments(std::string_view input) {
  std::string in(input);
  std::string out;
  while (!in.empty()) {
    if (in.starts_with("../")) {
      in.erase(0, 3);
    } else if (in.starts_with("./")) {
      in.erase(0, 2);
    } else if (in.starts_with("/./")) {
      in.replace(0, 3, "/");
    } else if (in == "/.") {
      in = "/";
    } else if (in.starts_with("/../") || in == "/..") {
      in = in.size() == 3 ? std::string("/") : "/" + in.substr(4);
      auto pos = out.rfind('/');
      out.erase(pos == std::string::npos ? 0 : pos);
    } else if (in == "." || in == "..") {
      in.clear();
    } else {
      std::size_t start = in[0] == '/' ? 1 : 0;
      std::size_t next = in.find('/', start);
      if (next == std::string::npos) next = in.size();
      out += in.substr(0, next);
      in.erase(0, next);
    }
  }
  return out;
}

std::string MergePaths(const IriParts& base, const std::string& ref_path) {
  if (base.authority && base.path.empty()) return "/" + ref_path;
  auto pos = base.path.rfind('/');
  if (pos == std::string::npos) return ref_path;
  return base.path.substr(0, pos + 1) + ref_path;
}

std::string Recompose(const IriParts& p) {
  std::string out;
  if (p.scheme) out += *p.scheme + ":";
  if (p.authority) out += "//" + *p.authority;
  out += p.path;
  if (p.query) out += "?" + *p.query;
  if (p.fragment) out += "#" + *p.fragment;
  return out;
}

}  // namespace

std::string ResolveIri(std::string_view base, std::string_view reference) {
  IriParts ref = SplitIri(reference);
  if (ref.scheme) {
    ref.path = RemoveDotSegments(ref.path);
    return Recompose(ref);
  }
  if (base.empty()) return std::string(reference);
  IriParts b = SplitIri(base);
  IriParts t;
  t.scheme = b.scheme;
  if (ref.authority) {
    t.authority = ref.authority;
    t.path = RemoveDotSegments(ref.path);
    t.query = ref.query;
  } else {
    t.authority = b.authority;
    if (ref.path.empty()) {
      t.path = b.path;
      t.query = ref.query ? ref.query : b.query;
    } else {
      t.path = ref.path[0] == '/' ? RemoveDotSegments(ref.path)
                                  : RemoveDotSegments(MergePaths(b, ref.path));
      t.query = ref.query;
    }
  }
  t.fragment = ref.fragment;
  return Recompose(t);
}

namespace {

void AppendUtf8(std::string& out, char32_t cp) {
  if (cp < 0x80) {
    out.push_back(static_cast<char>(cp));
  } else if (cp < 0x800) {
    out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else if (cp < 0x10000) {
    out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else {
    out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  }
}

bool IsHex(char c) {
  return (c >= '0' && c <= '9') || (c >= 'a' && c <= 'f') || (c >= 'A' && c <= 'F');
}

int HexValue(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  return c - 'A' + 10;
}

bool IsAsciiAlpha(char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z'); }
bool IsDigit(char c) { return c >= '0' && c <= '9'; }

class Parser {
 public:
  Parser(std::string_view text, ParserState& state, std::set<Triple>& out)
      : text_(text), state_(state), out_(out) {}

  void ParseDocument() {
    SkipWs();
    while (!AtEnd()) {
      ParseStatement();
      SkipWs();
    }
  }

 private:
  // ---- low-level cursor ----------------------------------------------------

  bool AtEnd() const { return pos_ >= text_.size(); }
  char Peek(std::size_t ahead = 0) const {
    return pos_ + ahead < text_.size() ? text_[pos_ + ahead] : '\0';
  }

  [[noreturn]] void Fail(const std::string& message) const { FailAt(pos_, message); }

  [[noreturn]] void FailAt(std::size_t pos, const std::string& message) const {
    std::size_t line = 1;
    std::size_t column = 1;
    for (std::size_t i = 0; i < pos && i < text_.size(); ++i) {
      if (text_[i] == '\n') {
        ++line;
        column = 1;
      } else if ((static_cast<unsigned char>(text_[i]) & 0xC0) != 0x80) {
        ++column;
      }
    }
    throw ParseError(line, column, message);
  }

  std::string Describe() const {
    if (AtEnd()) return "end of input";
    char c = Peek();
    if (static_cast<unsigned char>(c) < 0x20) return "control character";
    return std::string("'") + c + "'";
  }

  // Decodes the UTF-8 code point at `at`; sets `length` to its byte count.
  char32_t DecodeAt(std::size_t at, std::size_t& length) const {
    auto byte = [&](std::size_t i) { return static_cast<unsigned char>(text_[i]); };
    unsigned char b0 = byte(at);
    if (b0 < 0x80) {
      length = 1;
      return b0;
    }
    std::size_t n = 0;
    char32_t cp = 0;
    if ((b0 & 0xE0) == 0xC0) {
      n = 2;
      cp = b0 & 0x1F;
    } else if ((b0 & 0xF0) == 0xE0) {
      n = 3;
      cp = b0 & 0x0F;
    } else if ((b0 & 0xF8) == 0xF0) {
      n = 4;
      cp = b0 & 0x07;
    } else {
      FailAt(at, "invalid UTF-8");
    }
    if (at + n > text_.size()) FailAt(at, "truncated UTF-8 sequence");
    for (std::size_t i = 1; i < n; ++i) {
      if ((byte(at + i) & 0xC0) != 0x80) FailAt(at, "invalid UTF-8");
      cp = (cp << 6) | (byte(at + i) & 0x3F);
    }
    length = n;
    return cp;
  }

  char32_t PeekCodePoint(std::size_t& length) const {
    if (AtEnd()) {
      length = 0;
      return 0;
    }
    return DecodeAt(pos_, length);
  }

  void SkipWs() {
    while (!AtEnd()) {
      char c = Peek();
      if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
        ++pos_;
      } else if (c == '#') {
        while (!AtEnd() && Peek() != '\n' && Peek() != '\r') ++pos_;
      } else {
        break;
      }
    }
  }

  void Expect(char c, const char* what) {
    SkipWs();
    if (Peek() != c) Fail(std::string("expected ") + what + ", found " + Describe());
    ++pos_;
  }

  // True when a keyword ends here (not followed by a name character or ':').
  bool KeywordBoundary(std::size_t at) const {
    if (at >= text_.size()) return true;
    std::size_t len = 0;
    char32_t c = DecodeAt(at, len);
    if (c == '.') {
      // "true." ends a statement; "true.x:y" would be a prefixed name.
      if (at + 1 >= text_.size()) return true;
      char32_t next = DecodeAt(at + 1, len);
      return !(IsPnChars(next) || next == ':');
    }
    return !(IsPnChars(c) || c == ':');
  }

  bool MatchKeywordCaseless(std::string_view word) const {
    if (text_.size() - pos_ < word.size()) return false;
    for (std::size_t i = 0; i < word.size(); ++i) {
      char c = text_[pos_ + i];
      if (c >= 'a' && c <= 'z') c = static_cast<char>(c - 'a' + 'A');
      if (c != word[i]) return false;
    }
    return KeywordBoundary(pos_ + word.size());
  }

  bool MatchKeyword(std::string_view word) const {
    return text_.substr(pos_, word.size()) == word && KeywordBoundary(pos_ + word.size());
  }

  // ---- statements ----------------------------------------------------------

  void ParseStatement() {
    if (Peek() == '@') {
      if (text_.substr(pos_, 7) == "@prefix" && !IsAsciiAlpha(Peek(7))) {
        pos_ += 7;
        ParsePrefixBody();
        Expect('.', "'.' after @prefix directive");
        return;
      }
      if (text_.substr(pos_, 5) == "@base" && !IsAsciiAlpha(Peek(5))) {
        pos_ += 5;
        ParseBaseBody();
        Expect('.', "'.' after @base directive");
        return;
      }
      Fail("unknown directive");
    }
    if (MatchKeywordCaseless("PREFIX")) {
      pos_ += 6;
      ParsePrefixBody();
      return;
    }
    if (MatchKeywordCaseless("BASE")) {
      pos_ += 4;
      ParseBaseBody();
      return;
    }
    ParseTriples();
    Expect('.', "'.' at end of statement");
  }

  void ParsePrefixBody() {
    SkipWs();
    std::size_t start = pos_;
    std::string prefix = ReadPnPrefix();
    if (Peek() != ':') FailAt(start, "expected prefix name ending in ':'");
    ++pos_;
    SkipWs();
    if (Peek() != '<') Fail("expected IRI in prefix directive, found " + Describe());
    state_.prefixes[prefix] = ReadIriRef();
  }

  void ParseBaseBody() {
    SkipWs();
    if (Peek() != '<') Fail("expected IRI in base directive, found " + Describe());
    state_.base = ReadIriRef();
  }

  void ParseTriples() {
    SkipWs();
    if (Peek() == '[') {
      std::size_t save = pos_;
      ++pos_;
      SkipWs();
      if (Peek() == ']') {
        // ANON subject requires a predicate-object list.
        ++pos_;
        Term subject = FreshBlank();
        ParsePredicateObjectList(subject);
        return;
      }
      pos_ = save;
      Term subject = ParseBlankNodePropertyList();
      SkipWs();
      if (Peek() != '.') ParsePredicateObjectList(subject);
      return;
    }
    Term subject = ParseSubject();
    ParsePredicateObjectList(subject);
  }

  Term ParseSubject() {
    SkipWs();
    char c = Peek();
    if (c == '<') return Iri{ReadIriRef()};
    if (c == '_' && Peek(1) == ':') return ReadBlankLabel();
    if (c == '(') return ParseCollection();
    if (c == '"' || c == '\'' || IsDigit(c) || c == '+' || c == '-' ||
        (c == '.' && IsDigit(Peek(1)))) {
      Fail("literal is not allowed as subject");
    }
    if (MatchKeyword("true") || MatchKeyword("false")) Fail("literal is not allowed as subject");
    if (AtEnd()) Fail("expected subject, found end of input");
    return ReadPrefixedName("subject");
  }

  void ParsePredicateObjectList(const Term& subject) {
    ParseVerbObjectList(subject);
    for (;;) {
      SkipWs();
      if (Peek() != ';') return;
      while (Peek() == ';') {
        ++pos_;
        SkipWs();
      }
      char c = Peek();
      if (c == '.' || c == ']' || AtEnd()) return;
      ParseVerbObjectList(subject);
    }
  }

  void ParseVerbObjectList(const Term& subject) {
    Term predicate = ParseVerb();
    for (;;) {
      Term object = ParseObject();
      out_.insert(Triple{subject, predicate, std::move(object)});
      SkipWs();
      if (Peek() != ',') return;
      ++pos_;
    }
  }

  Term ParseVerb() {
    SkipWs();
    if (Peek() == 'a' && KeywordBoundary(pos_ + 1)) {
      ++pos_;
      return Iri{std::string(vocab::kRdfType)};
    }
    char c = Peek();
    if (c == '<') return Iri{ReadIriRef()};
    if (AtEnd()) Fail("expected predicate, found end of input");
    if (c == '_' && Peek(1) == ':') Fail("blank node is not allowed as predicate");
    if (c == '[' || c == '(') Fail("expected predicate IRI, found " + Describe());
    if (c == '"' || c == '\'' || IsDigit(c)) Fail("literal is not allowed as predicate");
    return ReadPrefixedName("predicate");
  }

  Term ParseObject() {
    SkipWs();
    char c = Peek();
    if (AtEnd()) Fail("expected object, found end of input");
    if (c == '<') return Iri{ReadIriRef()};
    if (c == '_' && Peek(1) == ':') return ReadBlankLabel();
    if (c == '(') return ParseCollection();
    if (c == '[') {
      std::size_t save = pos_;
      ++pos_;
      SkipWs();
      if (Peek() == ']') {
        ++pos_;
        return FreshBlank();
      }
      pos_ = save;
      return ParseBlankNodePropertyList();
    }
    if (c == '"' || c == '\'') return ParseRdfLiteral();
    if (IsDigit(c) || c == '+' || c == '-' || (c == '.' && IsDigit(Peek(1)))) {
      return ParseNumber();
    }
    if (MatchKeyword("true")) {
      pos_ += 4;
      return MakeLiteral("true", vocab::kXsdBoolean);
    }
    if (MatchKeyword("false")) {
      pos_ += 5;
      return MakeLiteral("false", vocab::kXsdBoolean);
    }
    return ReadPrefixedName("object");
  }

  Term ParseBlankNodePropertyList() {
    Expect('[', "'['");
    Term node = FreshBlank();
    ParsePredicateObjectList(node);
    Expect(']', "']' closing blank node property list");
    return node;
  }

  Term ParseCollection() {
    Expect('(', "'('");
    std::vector<Term> items;
    for (;;) {
      SkipWs();
      if (Peek() == ')') {
        ++pos_;
        break;
      }
      if (AtEnd()) Fail("unterminated collection");
      items.push_back(ParseObject());
    }
    if (items.empty()) return Iri{std::string(vocab::kRdfNil)};
    Term head = FreshBlank();
    Term current = head;
    for (std::size_t i = 0; i < items.size(); ++i) {
      out_.insert(Triple{current, Iri{std::string(vocab::kRdfFirst)}, items[i]});
      Term next = i + 1 < items.size() ? FreshBlank() : Term{Iri{std::string(vocab::kRdfNil)}};
      out_.insert(Triple{current, Iri{std::string(vocab::kRdfRest)}, next});
      current = std::move(next);
    }
    return head;
  }

  // ---- terminals -----------------------------------------------------------

  Term FreshBlank() {
    // '~' cannot occur in a document label, so these never collide.
    return BlankNode{"~b" + std::to_string(state_.anon_counter++)};
  }

  Term ReadBlankLabel() {
    std::size_t start = pos_;
    pos_ += 2;
    std::size_t len = 0;
    char32_t first = PeekCodePoint(len);
    if (len == 0 || !(IsPnCharsU(first) || (first >= '0' && first <= '9'))) {
      FailAt(start, "invalid blank node label");
    }
    pos_ += len;
    std::size_t last_good = pos_;
    while (!AtEnd()) {
      char32_t c = PeekCodePoint(len);
      if (IsPnChars(c)) {
        pos_ += len;
        last_good = pos_;
      } else if (c == '.') {
        pos_ += len;
      } else {
        break;
      }
    }
    pos_ = last_good;
    std::string label(text_.substr(start + 2, pos_ - start - 2));
    auto [it, inserted] = state_.blank_labels.try_emplace(label, label);
    return BlankNode{it->second};
  }

  // Reads PN_PREFIX (possibly empty); leaves the cursor at the ':' if any.
  std::string ReadPnPrefix() {
    std::size_t start = pos_;
    std::size_t len = 0;
    char32_t first = PeekCodePoint(len);
    if (len == 0 || !IsPnCharsBase(first)) return "";
    pos_ += len;
    std::size_t last_good = pos_;
    while (!AtEnd()) {
      char32_t c = PeekCodePoint(len);
      if (IsPnChars(c)) {
        pos_ += len;
        last_good = pos_;
      } else if (c == '.') {
        pos_ += len;
      } else {
        break;
      }
    }
    pos_ = last_good;
    return std::string(text_.substr(start, pos_ - start));
  }

  // One PLX item (percent escape or backslash escape) at the cursor, or
  // nothing. Appends its IRI contribution.
  bool ReadPlx(std::string& local) {
    if (Peek() == '%') {
      if (!IsHex(Peek(1)) || !IsHex(Peek(2))) Fail("invalid percent escape in local name");
      local.append(text_.substr(pos_, 3));
      pos_ += 3;
      return true;
    }
    if (Peek() == '\\') {
      static constexpr std::string_view kEscapable = "_~.-!$&'()*+,;=/?#@%";
      char e = Peek(1);
      if (e == '\0' || kEscapable.find(e) == std::string_view::npos) {
        Fail("invalid escape in local name");
      }
      local.push_back(e);
      pos_ += 2;
      return true;
    }
    return false;
  }

  Term ReadPrefixedName(const char* role) {
    std::size_t start = pos_;
    std::string prefix = ReadPnPrefix();
    if (Peek() != ':') {
      pos_ = start;
      Fail(std::string("expected ") + role + ", found " + Describe());
    }
    ++pos_;
    std::string local;
    std::size_t len = 0;
    if (!AtEnd()) {
      char32_t c = PeekCodePoint(len);
      bool started = false;
      if (IsPnCharsU(c) || c == ':' || (c >= '0' && c <= '9')) {
        local.append(text_.substr(pos_, len));
        pos_ += len;
        started = true;
      } else {
        started = ReadPlx(local);
      }
      if (started) {
        std::size_t last_good = pos_;
        std::size_t last_good_size = local.size();
        while (!AtEnd()) {
          c = PeekCodePoint(len);
          if (IsPnChars(c) || c == ':') {
            local.append(text_.substr(pos_, len));
            pos_ += len;
          } else if (c == '.') {
            local.push_back('.');
            pos_ += len;
            continue;
          } else if (!ReadPlx(local)) {
            break;
          }
          last_good = pos_;
          last_good_size = local.size();
        }
        pos_ = last_good;
        local.resize(last_good_size);
      }
    }
    auto it = state_.prefixes.find(prefix);
    if (it == state_.prefixes.end()) FailAt(start, "undefined prefix '" + prefix + ":'");
    return Iri{it->second + local};
  }

  std::string ReadIriRef() {
    std::size_t start = pos_;
    ++pos_;  // '<'
    std::string iri;
    for (;;) {
      if (AtEnd()) FailAt(start, "unterminated IRI");
      char c = Peek();
      if (c == '>') {
        ++pos_;
        break;
      }
      auto uc = static_cast<unsigned char>(c);
      if (uc <= 0x20 || c == '<' || c == '"' || c == '{' || c == '}' || c == '|' || c == '^' ||
          c == '`') {
        Fail("invalid character in IRI");
      }
      if (c == '\\') {
        char32_t cp = ReadUchar();
        if (cp <= 0x20 || cp == '<' || cp == '>' || cp == '"' || cp == '{' || cp == '}' ||
            cp == '|' || cp == '^' || cp == '`' || cp == '\\') {
          Fail("escaped character not allowed in IRI");
        }
        AppendUtf8(iri, cp);
        continue;
      }
      iri.push_back(c);
      ++pos_;
    }
    std::string resolved = ResolveIri(state_.base, iri);
    if (resolved.empty()) FailAt(start, "relative IRI with no base");
    return resolved;
  }

  // \uXXXX or \UXXXXXXXX at the cursor.
  char32_t ReadUchar() {
    char kind = Peek(1);
    std::size_t digits = kind == 'u' ? 4 : kind == 'U' ? 8 : 0;
    if (digits == 0) Fail("invalid escape sequence");
    char32_t cp = 0;
    for (std::size_t i = 0; i < digits; ++i) {
      char h = Peek(2 + i);
      if (!IsHex(h)) Fail("invalid unicode escape");
      cp = (cp << 4) | static_cast<char32_t>(HexValue(h));
    }
    if ((cp >= 0xD800 && cp <= 0xDFFF) || cp > 0x10FFFF) Fail("invalid code point in escape");
    pos_ += 2 + digits;
    return cp;
  }

  std::string ReadString() {
    std::size_t start = pos_;
    char quote = Peek();
    bool long_form = Peek(1) == quote && Peek(2) == quote;
    pos_ += long_form ? 3 : 1;
    std::string value;
    for (;;) {
      if (AtEnd()) FailAt(start, "unterminated string literal");
      char c = Peek();
      if (long_form) {
        if (c == quote && Peek(1) == quote && Peek(2) == quote) {
          pos_ += 3;
          return value;
        }
      } else {
        if (c == quote) {
          ++pos_;
          return value;
        }
        if (c == '\n' || c == '\r') FailAt(start, "unterminated string literal");
      }
      if (c == '\\') {
        char e = Peek(1);
        switch (e) {
          case 't': value.push_back('\t'); pos_ += 2; continue;
          case 'b': value.push_back('\b'); pos_ += 2; continue;
          case 'n': value.push_back('\n'); pos_ += 2; continue;
          case 'r': value.push_back('\r'); pos_ += 2; continue;
          case 'f': value.push_back('\f'); pos_ += 2; continue;
          case '"': value.push_back('"'); pos_ += 2; continue;
          case '\'': value.push_back('\''); pos_ += 2; continue;
          case '\\': value.push_back('\\'); pos_ += 2; continue;
          case 'u':
          case 'U': AppendUtf8(value, ReadUchar()); continue;
          default: Fail("invalid escape sequence in string");
        }
      }
      std::size_t len = 0;
      DecodeAt(pos_, len);
      value.append(text_.substr(pos_, len));
      pos_ += len;
    }
  }

  Term ParseRdfLiteral() {
    std::string lexical = ReadString();
    if (Peek() == '@') {
      ++pos_;
      std::size_t start = pos_;
      while (IsAsciiAlpha(Peek())) ++pos_;
      if (pos_ == start) Fail("invalid language tag");
      while (Peek() == '-') {
        std::size_t sub = ++pos_;
        while (IsAsciiAlpha(Peek()) || IsDigit(Peek())) ++pos_;
        if (pos_ == sub) Fail("invalid language tag");
      }
      return MakeLangLiteral(lexical, text_.substr(start, pos_ - start));
    }
    if (Peek() == '^' && Peek(1) == '^') {
      pos_ += 2;
      Term datatype = Peek() == '<' ? Term{Iri{ReadIriRef()}} : ReadPrefixedName("datatype IRI");
      return MakeLiteral(lexical, std::get<Iri>(datatype).value);
    }
    return MakeLiteral(lexical);
  }

  Term ParseNumber() {
    std::size_t start = pos_;
    if (Peek() == '+' || Peek() == '-') ++pos_;
    std::size_t int_digits = 0;
    while (IsDigit(Peek())) {
      ++pos_;
      ++int_digits;
    }
    bool has_dot = false;
    std::size_t frac_digits = 0;
    auto exponent_follows = [&](std::size_t at) {
      std::size_t i = at;
      if (i >= text_.size() || (text_[i] != 'e' && text_[i] != 'E')) return false;
      ++i;
      if (i < text_.size() && (text_[i] == '+' || text_[i] == '-')) ++i;
      return i < text_.size() && IsDigit(text_[i]);
    };
    if (Peek() == '.' && (IsDigit(Peek(1)) || (int_digits > 0 && exponent_follows(pos_ + 1)))) {
      has_dot = true;
      ++pos_;
      while (IsDigit(Peek())) {
        ++pos_;
        ++frac_digits;
      }
    }
    if (int_digits == 0 && frac_digits == 0) FailAt(start, "invalid numeric literal");
    bool has_exp = false;
    if (exponent_follows(pos_)) {
      has_exp = true;
      ++pos_;
      if (Peek() == '+' || Peek() == '-') ++pos_;
      while (IsDigit(Peek())) ++pos_;
    }
    std::string lexical(text_.substr(start, pos_ - start));
    if (has_exp) return MakeLiteral(lexical, vocab::kXsdDouble);
    if (has_dot) return MakeLiteral(lexical, vocab::kXsdDecimal);
    return MakeLiteral(lexical, vocab::kXsdInteger);
  }

  std::string_view text_;
  ParserState& state_;
  std::set<Triple>& out_;
  std::size_t pos_ = 0;
};

}  // namespace

void ParseTurtleChunk(std::string_view text, ParserState& state, std::set<Triple>& out) {
  Parser(text, state, out).ParseDocument();
}

}  // namespace detail

Graph ParseTurtle(std::string_view text, const ParseOptions& options) {
  detail::ParserState state;
  state.base = options.base_iri;
  std::set<Triple> triples;
  detail::ParseTurtleChunk(text, state, triples);
  return Graph(std::move(triples), std::move(state.prefixes));
}

}  // namespace kgbench::rdf
