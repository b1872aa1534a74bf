#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <optional>
#include <regex>
#include <set>

#include <nlohmann/json.hpp>

#include "kgbench/rdf/normalize.hpp"
#include "kgbench/rdf/turtle.hpp"
#include "random_graphs.hpp"
#include "test_paths.hpp"

namespace kgbench::rdf {
namespace {

std::string Xsd(const std::string& local) { return std::string(vocab::kXsd) + local; }

TEST(NormalizeTest, BlankFreeGraphIsIdempotent) {
  Graph g = ParseTurtle("@prefix ex: <http://ex.org/> . ex:a ex:p ex:b .");
  NormalizedTripleSet once = Normalize(g);
  ASSERT_EQ(once.size(), 1u);
  EXPECT_EQ(once.lines()[0], "<http://ex.org/a> <http://ex.org/p> <http://ex.org/b> .");
  EXPECT_EQ(Normalize(once.ToGraph()), once);
}

TEST(NormalizeTest, InputBlankLabelsDoNotMatter) {
  Graph x = ParseTurtle("@prefix ex: <http://ex.org/> . _:x ex:p ex:o ; ex:q _:z .");
  Graph y = ParseTurtle("@prefix ex: <http://ex.org/> . _:y ex:p ex:o ; ex:q _:w .");
  EXPECT_EQ(Normalize(x), Normalize(y));
}

TEST(NormalizeTest, IntegerLiteralIsCanonicalized) {
  Graph g;
  g.Insert({MakeIri("http://ex.org/a"), MakeIri("http://ex.org/p"), MakeLiteral("01", vocab::kXsdInteger)});
  EXPECT_EQ(Normalize(g).lines()[0],
            "<http://ex.org/a> <http://ex.org/p> \"1\"^^<http://www.w3.org/2001/XMLSchema#integer> .");
}

// Values frozen from an independent datatype implementation by
// tests/oracle/literal_oracle.py.
TEST(NormalizeTest, LiteralCanonicalFormsAgreeWithOracle) {
  std::ifstream in(testing::TestDataDir() / "literals.json");
  nlohmann::json cases = nlohmann::json::parse(in);
  ASSERT_GE(cases.size(), 40u);
  const std::regex decimal_canonical(R"(-?(0|[1-9][0-9]*)\.(0|[0-9]*[1-9]))");
  const std::regex double_canonical(R"(-?[1-9]\.([0-9]*[1-9]|0)E-?(0|[1-9][0-9]*)|-?0\.0E0|INF|-INF|NaN)");
  for (const auto& c : cases) {
    std::string kind = c["datatype"], input = c["input"];
    Literal in_literal{input, Xsd(kind), std::nullopt};
    Literal out = CanonicalizeLiteral(in_literal);
    SCOPED_TRACE(kind + " '" + input + "' -> '" + out.lexical + "'");
    EXPECT_EQ(out.datatype, in_literal.datatype);
    if (!c["valid"].get<bool>()) {
      EXPECT_EQ(out.lexical, input);
      continue;
    }
    if (c.contains("lexical")) {
      EXPECT_EQ(out.lexical, c["lexical"].get<std::string>());
    } else if (kind == "decimal") {
      EXPECT_TRUE(std::regex_match(out.lexical, decimal_canonical));
      std::string value = out.lexical;
      value.erase(value.find_last_not_of('0') + 1);
      if (value.back() == '.') value.pop_back();
      if (value == "-0") value = "0";
      EXPECT_EQ(value, c["value"].get<std::string>());
    } else {
      EXPECT_TRUE(std::regex_match(out.lexical, double_canonical));
      double ours = std::strtod(out.lexical == "INF" ? "inf" : out.lexical == "-INF" ? "-inf" : out.lexical.c_str(), nullptr);
      double theirs = std::strtod(c["value"].get<std::string>().c_str(), nullptr);
      if (std::isnan(theirs)) {
        EXPECT_TRUE(std::isnan(ours));
      } else {
        EXPECT_EQ(ours, theirs);
        EXPECT_EQ(std::signbit(ours), std::signbit(theirs));
      }
    }
  }
}

TEST(NormalizeTest, NonNumericLiteralsComparedVerbatim) {
  Literal date{"2020-1-1", Xsd("date"), std::nullopt};
  EXPECT_EQ(CanonicalizeLiteral(date), date);
  Literal lang{"Hallo", std::string(vocab::kLangString), "de"};
  EXPECT_EQ(CanonicalizeLiteral(lang), lang);
}

TEST(CanonicalLabelsTest, NoBlanksGivesEmptyMap) {
  EXPECT_TRUE(CanonicalBlankLabels(ParseTurtle("<http://a> <http://p> <http://b> .")).empty());
}

TEST(CanonicalLabelsTest, SymmetricBlanksGetDeterministicLabels) {
  Graph g = ParseTurtle("_:x <http://p> <http://o> . _:y <http://p> <http://o> .");
  auto first = CanonicalBlankLabels(g);
  ASSERT_EQ(first.size(), 2u);
  for (int i = 0; i < 5; ++i) EXPECT_EQ(CanonicalBlankLabels(g), first);
  EXPECT_NE(first.at("x"), first.at("y"));
}

// Exhaustive check over all 6 assignments of input labels to the path.
TEST(CanonicalLabelsTest, PathGraphStableUnderAllRenamings) {
  std::vector<std::string> names = {"a", "b", "c"};
  std::optional<NormalizedTripleSet> expected;
  do {
    Graph g = ParseTurtle("_:" + names[0] + " <http://p> _:" + names[1] + " . _:" + names[1] +
                          " <http://p> _:" + names[2] + " .");
    auto labels = CanonicalBlankLabels(g);
    std::set<std::string> distinct;
    for (const auto& [from, to] : labels) distinct.insert(to);
    EXPECT_EQ(distinct.size(), 3u);
    NormalizedTripleSet n = Normalize(g);
    if (!expected) expected = n;
    EXPECT_EQ(n, *expected);
  } while (std::next_permutation(names.begin(), names.end()));
}

TEST(CanonicalLabelsTest, RegularGraphsStayInvariant) {
  // A 6-cycle and two disjoint triangles look alike to signature
  // refinement; the normal forms must still differ and be label-invariant.
  Graph cycle = ParseTurtle(
      "_:a <http://p> _:b . _:b <http://p> _:c . _:c <http://p> _:d . _:d <http://p> _:e . _:e <http://p> _:f . _:f <http://p> _:a .");
  Graph triangles = ParseTurtle(
      "_:a <http://p> _:b . _:b <http://p> _:c . _:c <http://p> _:a . _:d <http://p> _:e . _:e <http://p> _:f . _:f <http://p> _:d .");
  EXPECT_NE(Normalize(cycle), Normalize(triangles));
  SeededRandom rng(5);
  for (int i = 0; i < 20; ++i) {
    EXPECT_EQ(Normalize(testing::RelabelRandomly(cycle, rng)), Normalize(cycle));
    EXPECT_EQ(Normalize(testing::RelabelRandomly(triangles, rng)), Normalize(triangles));
  }
}

TEST(NormalizeTest, PropertyBlankInvarianceAndIdempotence) {
  SeededRandom rng(2024);
  for (int i = 0; i < 300; ++i) {
    Graph g = testing::RandomRichGraph(rng, 15);
    NormalizedTripleSet n = Normalize(g);
    EXPECT_EQ(Normalize(testing::RelabelRandomly(g, rng)), n);
    EXPECT_EQ(Normalize(n.ToGraph()), n);
    EXPECT_TRUE(std::is_sorted(n.lines().begin(), n.lines().end()));
    EXPECT_EQ(std::adjacent_find(n.lines().begin(), n.lines().end()), n.lines().end());
  }
}

}  // namespace
}  // namespace kgbench::rdf
