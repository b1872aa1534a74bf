#include <charconv>
#include <cmath>
#include <regex>
#include <string>

#include "kgbench/rdf/normalize.hpp"

namespace kgbench::rdf {
namespace {

std::string StripLeadingZeros(std::string digits) {
  std::size_t nz = digits.find_first_not_of('0');
  if (nz == std::string::npos) return "0";
  return digits.substr(nz);
}

std::optional<std::string> CanonicalInteger(const std::string& lex) {
  static const std::regex kPattern(R"(([+-]?)([0-9]+))");
  std::smatch m;
  if (!std::regex_match(lex, m, kPattern)) return std::nullopt;
  std::string digits = StripLeadingZeros(m[2].str());
  if (digits == "0" || m[1].str() != "-") return digits;
  return "-" + digits;
}

std::optional<std::string> CanonicalDecimal(const std::string& lex) {
  static const std::regex kPattern(R"(([+-]?)([0-9]*)(?:\.([0-9]*))?)");
  std::smatch m;
  if (!std::regex_match(lex, m, kPattern)) return std::nullopt;
  std::string int_part = m[2].str();
  std::string frac_part = m[3].str();
  if (int_part.empty() && frac_part.empty()) return std::nullopt;
  int_part = StripLeadingZeros(int_part);
  std::size_t last = frac_part.find_last_not_of('0');
  frac_part = last == std::string::npos ? "0" : frac_part.substr(0, last + 1);
  std::string out = int_part + "." + frac_part;
  if (m[1].str() == "-" && out != "0.0") out = "-" + out;
  return out;
}

std::optional<std::string> CanonicalDouble(const std::string& lex) {
  if (lex == "INF" || lex == "+INF") return std::string("INF");
  if (lex == "-INF") return std::string("-INF");
  if (lex == "NaN") return std::string("NaN");
  static const std::regex kPattern(R"([+-]?([0-9]+(\.[0-9]*)?|\.[0-9]+)([eE][+-]?[0-9]+)?)");
  if (!std::regex_match(lex, kPattern)) return std::nullopt;
  std::string_view view(lex);
  if (view.front() == '+') view.remove_prefix(1);
  double value = 0.0;
  auto [ptr, ec] = std::from_chars(view.data(), view.data() + view.size(), value);
  if (ec == std::errc::result_out_of_range) {
    // Overflow saturates; underflow flushes to zero.
    bool negative = view.front() == '-';
    bool tiny = view.find_first_of("eE") != std::string_view::npos &&
                view[view.find_first_of("eE") + 1] == '-';
    if (tiny) return std::string(negative ? "-0.0E0" : "0.0E0");
    return std::string(negative ? "-INF" : "INF");
  }
  if (ec != std::errc() || ptr != view.data() + view.size()) return std::nullopt;
  if (value == 0.0) return std::string(std::signbit(value) ? "-0.0E0" : "0.0E0");

  // Shortest round-trip digits, then reshaped to d.dddEx.
  char buffer[64];
  auto res = std::to_chars(buffer, buffer + sizeof buffer, value, std::chars_format::scientific);
  std::string sci(buffer, res.ptr);
  std::size_t e = sci.find('e');
  std::string mantissa = sci.substr(0, e);
  int exponent = std::stoi(sci.substr(e + 1));
  if (mantissa.find('.') == std::string::npos) mantissa += ".0";
  return mantissa + "E" + std::to_string(exponent);
}

std::optional<std::string> CanonicalBoolean(const std::string& lex) {
  if (lex == "true" || lex == "1") return std::string("true");
  if (lex == "false" || lex == "0") return std::string("false");
  return std::nullopt;
}

}  // namespace

Literal CanonicalizeLiteral(const Literal& literal) {
  if (literal.language) return literal;
  std::optional<std::string> canonical;
  if (literal.datatype == vocab::kXsdInteger) {
    canonical = CanonicalInteger(literal.lexical);
  } else if (literal.datatype == vocab::kXsdDecimal) {
    canonical = CanonicalDecimal(literal.lexical);
  } else if (literal.datatype == vocab::kXsdDouble) {
    canonical = CanonicalDouble(literal.lexical);
  } else if (literal.datatype == vocab::kXsdBoolean) {
    canonical = CanonicalBoolean(literal.lexical);
  }
  if (!canonical) return literal;
  return Literal{std::move(*canonical), literal.datatype, std::nullopt};
}

}  // namespace kgbench::rdf
