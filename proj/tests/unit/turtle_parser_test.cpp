#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "kgbench/error.hpp"
#include "kgbench/rdf/turtle.hpp"
#include "test_paths.hpp"

namespace kgbench::rdf {
namespace {

Triple T(std::string_view s, std::string_view p, Term o) { return {MakeIri(s), MakeIri(p), std::move(o)}; }

TEST(TurtleParserTest, PrefixedTriple) {
  Graph g = ParseTurtle("@prefix ex: <http://ex.org/> . ex:a ex:p ex:b .");
  ASSERT_EQ(g.size(), 1u);
  EXPECT_TRUE(g.Contains(T("http://ex.org/a", "http://ex.org/p", MakeIri("http://ex.org/b"))));
  EXPECT_EQ(g.prefixes().at("ex"), "http://ex.org/");
}

TEST(TurtleParserTest, EmptyDocumentIsEmptyGraph) {
  EXPECT_TRUE(ParseTurtle("").empty());
  EXPECT_TRUE(ParseTurtle("  # only a comment\n").empty());
}

TEST(TurtleParserTest, UndefinedPrefixReportsPosition) {
  try {
    ParseTurtle("ex:a ex:p ex:b .");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 1u);
    EXPECT_EQ(e.column(), 1u);
    EXPECT_NE(std::string(e.what()).find("undefined prefix"), std::string::npos);
    EXPECT_EQ(std::string(e.what()).rfind("1:1: ", 0), 0u);
  }
}

TEST(TurtleParserTest, ErrorLineAndColumnPointAtViolation) {
  try {
    ParseTurtle("@prefix ex: <http://ex.org/> .\nex:a ex:p \"x\" ex:b .\n");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2u);
    EXPECT_EQ(e.column(), 15u);
  }
}

TEST(TurtleParserTest, AbbreviationsExpand) {
  Graph g = ParseTurtle(
      "@prefix ex: <http://ex.org/> .\n"
      "ex:a a ex:C ; ex:p ex:b , ex:c .\n");
  EXPECT_EQ(g.size(), 3u);
  EXPECT_TRUE(g.Contains(T("http://ex.org/a", vocab::kRdfType, MakeIri("http://ex.org/C"))));
  EXPECT_TRUE(g.Contains(T("http://ex.org/a", "http://ex.org/p", MakeIri("http://ex.org/c"))));
}

TEST(TurtleParserTest, LiteralForms) {
  Graph g = ParseTurtle(
      "@prefix ex: <http://ex.org/> .\n"
      "@prefix xsd: <http://www.w3.org/2001/XMLSchema#> .\n"
      "ex:a ex:p \"plain\", \"chat\"@FR, \"2020-01-01\"^^xsd:date, 42, -1.5, 1e3, true,\n"
      "  \"\"\"long\n\"text\\\"\"\"\", 'single' .\n");
  EXPECT_TRUE(g.Contains(T("http://ex.org/a", "http://ex.org/p", MakeLiteral("plain"))));
  EXPECT_TRUE(g.Contains(T("http://ex.org/a", "http://ex.org/p", MakeLangLiteral("chat", "fr"))));
  EXPECT_TRUE(g.Contains(T("http://ex.org/a", "http://ex.org/p",
                           MakeLiteral("2020-01-01", "http://www.w3.org/2001/XMLSchema#date"))));
  EXPECT_TRUE(g.Contains(T("http://ex.org/a", "http://ex.org/p", MakeLiteral("42", vocab::kXsdInteger))));
  EXPECT_TRUE(g.Contains(T("http://ex.org/a", "http://ex.org/p", MakeLiteral("-1.5", vocab::kXsdDecimal))));
  EXPECT_TRUE(g.Contains(T("http://ex.org/a", "http://ex.org/p", MakeLiteral("1e3", vocab::kXsdDouble))));
  EXPECT_TRUE(g.Contains(T("http://ex.org/a", "http://ex.org/p", MakeLiteral("true", vocab::kXsdBoolean))));
  EXPECT_TRUE(g.Contains(T("http://ex.org/a", "http://ex.org/p", MakeLiteral("long\n\"text\""))));
  EXPECT_TRUE(g.Contains(T("http://ex.org/a", "http://ex.org/p", MakeLiteral("single"))));
  EXPECT_EQ(g.size(), 9u);
}

TEST(TurtleParserTest, EscapesDecode) {
  Graph g = ParseTurtle("<http://ex.org/a> <http://ex.org/p> \"t\\tq\\\"u\\u00e9\\U0001F600\" .");
  ASSERT_EQ(g.size(), 1u);
  EXPECT_EQ(std::get<Literal>(g.begin()->object).lexical, "t\tq\"u\xC3\xA9\xF0\x9F\x98\x80");
}

TEST(TurtleParserTest, BlankNodesAndCollections) {
  Graph g = ParseTurtle(
      "@prefix ex: <http://ex.org/> .\n"
      "ex:a ex:p [ ex:q ex:b ] ; ex:list ( 1 2 ) .\n");
  // 2 for the property list, 1 for ex:list, 4 for the two list cells
  EXPECT_EQ(g.size(), 7u);
  EXPECT_EQ(g.BlankLabels().size(), 3u);
}

TEST(TurtleParserTest, EmptyCollectionIsNil) {
  Graph g = ParseTurtle("@prefix ex: <http://ex.org/> . ex:a ex:p () .");
  EXPECT_TRUE(g.Contains(T("http://ex.org/a", "http://ex.org/p", MakeIri(vocab::kRdfNil))));
}

TEST(TurtleParserTest, BlankLabelsShareIdentityWithinDocument) {
  Graph g = ParseTurtle("@prefix ex: <http://ex.org/> . _:x ex:p _:y . _:y ex:p _:x .");
  EXPECT_EQ(g.BlankLabels().size(), 2u);
}

// RFC 3986 section 5.4 reference resolution examples.
TEST(TurtleParserTest, RelativeIrisResolveAgainstBase) {
  const std::pair<const char*, const char*> cases[] = {
      {"g", "http://a/b/c/g"},         {"./g", "http://a/b/c/g"},     {"g/", "http://a/b/c/g/"},
      {"/g", "http://a/g"},            {"//g", "http://g"},           {"?y", "http://a/b/c/d;p?y"},
      {"g?y", "http://a/b/c/g?y"},     {"#s", "http://a/b/c/d;p?q#s"}, {"g#s", "http://a/b/c/g#s"},
      {"..", "http://a/b/"},           {"../g", "http://a/b/g"},      {"../..", "http://a/"},
      {"../../../g", "http://a/g"},    {"/./g", "http://a/g"},        {"g.", "http://a/b/c/g."},
      {"./../g", "http://a/b/g"},      {"g;x=1/../y", "http://a/b/c/y"}, {"", "http://a/b/c/d;p?q"},
  };
  for (const auto& [ref, expected] : cases) {
    Graph g = ParseTurtle(std::string("@base <http://a/b/c/d;p?q> .\n<") + ref + "> <http://p> <http://o> .");
    ASSERT_EQ(g.size(), 1u) << ref;
    EXPECT_EQ(std::get<Iri>(g.begin()->subject).value, expected) << ref;
  }
}

TEST(TurtleParserTest, BaseOptionAppliesBeforeDirectives) {
  Graph g = ParseTurtle("<a> <p> <b> .", {.base_iri = "http://ex.org/x/"});
  EXPECT_TRUE(g.Contains(T("http://ex.org/x/a", "http://ex.org/x/p", MakeIri("http://ex.org/x/b"))));
}

TEST(TurtleParserTest, RejectsInvalidDocuments) {
  for (const char* doc : {"<http://a> <http://p> .", "<http://a> \"p\" <http://b> .",
                          "\"s\" <http://p> <http://b> .", "<http://a> <http://p> <http://b>",
                          "@prefix ex <http://ex.org/> .", "<http://a> <http://p> \"open ."}) {
    EXPECT_THROW(ParseTurtle(doc), ParseError) << doc;
  }
}

// The corpus verdicts were produced by an independent conformant parser
// (tests/oracle/turtle_oracle.py) and frozen in expected.json.
TEST(TurtleParserTest, MatchesFrozenCorpusVerdicts) {
  auto dir = testing::TestDataDir() / "turtle";
  std::ifstream in(dir / "expected.json");
  nlohmann::json expected = nlohmann::json::parse(in);
  ASSERT_GE(expected.size(), 40u);
  for (const auto& [name, verdict] : expected.items()) {
    std::ifstream file(dir / name, std::ios::binary);
    std::stringstream text;
    text << file.rdbuf();
    bool accepted = true;
    std::size_t triples = 0;
    try {
      triples = ParseTurtle(text.str(), {.base_iri = "http://corpus.invalid/"}).size();
    } catch (const ParseError&) {
      accepted = false;
    }
    EXPECT_EQ(accepted, verdict["accepted"].get<bool>()) << name;
    EXPECT_EQ(triples, verdict["triples"].get<std::size_t>()) << name;
  }
}

}  // namespace
}  // namespace kgbench::rdf
