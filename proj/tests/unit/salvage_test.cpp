#include <gtest/gtest.h>

#include "kgbench/rdf/normalize.hpp"
#include "kgbench/rdf/turtle.hpp"

namespace kgbench::rdf {
namespace {

constexpr std::string_view kValid =
    "@prefix ex: <http://ex.org/> .\n"
    "ex:a ex:p ex:b .\n"
    "ex:c ex:p \"x.y\" ; ex:q 1.5 .\n"
    "ex:d ex:p ex:e.f .\n";

TEST(SalvageTest, ValidDocumentMatchesStrictParse) {
  SalvageResult r = SalvageParseTurtle(kValid);
  EXPECT_EQ(r.failed_statements, 0u);
  EXPECT_EQ(r.total_statements, 4u);
  EXPECT_EQ(Normalize(r.graph), Normalize(ParseTurtle(kValid)));
}

// Corrupt the middle statement of a known-good fixture and compare with the
// parse of the fixture without that statement.
TEST(SalvageTest, UnclosedIriLosesOnlyItsStatement) {
  std::string doc =
      "@prefix ex: <http://ex.org/> .\n"
      "ex:a ex:p ex:b .\n"
      "ex:c ex:p <http://ex.org/broken .\n"
      "ex:d ex:p ex:e .\n";
  SalvageResult r = SalvageParseTurtle(doc);
  EXPECT_EQ(r.failed_statements, 1u);
  Graph expected = ParseTurtle("@prefix ex: <http://ex.org/> . ex:a ex:p ex:b . ex:d ex:p ex:e .");
  EXPECT_EQ(r.graph, expected);
}

TEST(SalvageTest, ProseYieldsNothing) {
  SalvageResult r = SalvageParseTurtle("hello, the file is correct.");
  EXPECT_TRUE(r.graph.empty());
  EXPECT_GE(r.failed_statements, 1u);
}

TEST(SalvageTest, PrefixDirectivesCarryForwardPastFailures) {
  SalvageResult r = SalvageParseTurtle(
      "@prefix ex: <http://ex.org/> .\n"
      "ex:a ex:p .\n"
      "@prefix ey: <http://ey.org/> .\n"
      "ey:a ex:p ex:b .\n");
  EXPECT_EQ(r.failed_statements, 1u);
  EXPECT_EQ(r.graph.size(), 1u);
}

TEST(SalvageTest, SplitIgnoresDotsInsideTokens) {
  auto spans = SplitStatements(kValid);
  ASSERT_EQ(spans.size(), 4u);
  for (const auto& s : spans) EXPECT_TRUE(s.terminated);
  EXPECT_EQ(kValid.substr(spans[2].offset, spans[2].length), "ex:c ex:p \"x.y\" ; ex:q 1.5 .");
}

TEST(SalvageTest, UnterminatedTailIsAUnit) {
  auto spans = SplitStatements("<http://a> <http://p> <http://b> . <http://a> <http://p> <http://c>");
  ASSERT_EQ(spans.size(), 2u);
  EXPECT_FALSE(spans[1].terminated);
  SalvageResult r = SalvageParseTurtle("<http://a> <http://p> <http://b> . <http://a> <http://p> <http://c>");
  EXPECT_EQ(r.graph.size(), 1u);
  EXPECT_EQ(r.failed_statements, 1u);
}

TEST(ExtractCandidateTest, SingleFencedBlock) {
  std::string response = "Here you go:\n```turtle\n<http://a> <http://p> <http://b> .\n```\nBye.";
  EXPECT_EQ(ExtractTurtleCandidate(response), "<http://a> <http://p> <http://b> .\n");
}

TEST(ExtractCandidateTest, ProseOnlyReturnsWholeResponse) {
  std::string response = "The file is already correct.";
  EXPECT_EQ(ExtractTurtleCandidate(response), response);
}

TEST(ExtractCandidateTest, PicksBlockWithMostTriples) {
  std::string second = "<http://a> <http://p> <http://b> .\n<http://a> <http://p> <http://c> .\n";
  std::string response = "```\n```\ntext\n```ttl\n" + second + "```\n";
  EXPECT_EQ(ExtractTurtleCandidate(response), second);
}

TEST(ExtractCandidateTest, TiesGoToFirstBlock) {
  std::string response = "```\n<http://a> <http://p> <http://b> .\n```\n```\n<http://x> <http://p> <http://y> .\n```";
  EXPECT_EQ(ExtractTurtleCandidate(response), "<http://a> <http://p> <http://b> .\n");
}

}  // namespace
}  // namespace kgbench::rdf
