#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include "kgbench/error.hpp"
#include "kgbench/rdf/normalize.hpp"
#include "kgbench/rdf/turtle.hpp"
#include "kgbench/tasks/turtle_fix.hpp"

namespace kgbench::tasks::turtle_fix {
namespace {

bool StrictlyParses(std::string_view text) {
  try {
    rdf::ParseTurtle(text);
    return true;
  } catch (const ParseError&) {
    return false;
  }
}

TEST(ReferenceGraphTest, HasExactSizeAndVariedTerms) {
  for (std::size_t n : {1u, 7u, 20u, 64u}) {
    rdf::Graph g = GenerateReferenceGraph(3, n);
    EXPECT_EQ(g.size(), n);
  }
  rdf::Graph g = GenerateReferenceGraph(3, 40);
  bool blank = false, lang = false, typed = false;
  for (const auto& t : g) {
    blank |= rdf::IsBlank(t.object);
    if (const auto* lit = std::get_if<rdf::Literal>(&t.object)) {
      lang |= lit->language.has_value();
      typed |= lit->datatype != rdf::vocab::kXsdString && !lit->language;
    }
  }
  EXPECT_TRUE(blank);
  EXPECT_TRUE(lang);
  EXPECT_TRUE(typed);
}

TEST(InstanceTest, SameSeedSameInstance) {
  Instance a = GenerateInstance(42, {20, 3});
  Instance b = GenerateInstance(42, {20, 3});
  EXPECT_EQ(a.corrupted_text, b.corrupted_text);
  EXPECT_EQ(a.error_log, b.error_log);
  EXPECT_EQ(a.prompt, b.prompt);
}

TEST(InstanceTest, DistinctSeedsGiveDistinctInstances) {
  std::set<std::string> corrupted;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    corrupted.insert(GenerateInstance(seed, {20, 3}).corrupted_text);
  }
  EXPECT_EQ(corrupted.size(), 100u);
}

TEST(InstanceTest, ZeroCountsAreSizeErrors) {
  EXPECT_THROW(GenerateInstance(1, {20, 0}), SizeError);
  EXPECT_THROW(GenerateInstance(1, {0, 3}), SizeError);
  EXPECT_THROW(GenerateInstance(1, {2, 50}), SizeError);
}

TEST(InstanceTest, PromptContainsCorruptedDocument) {
  Instance inst = GenerateInstance(5, {20, 3});
  EXPECT_NE(inst.prompt.find(inst.corrupted_text), std::string::npos);
  EXPECT_EQ(inst.prompt.find("{{"), std::string::npos);
}

TEST(InstanceTest, PromptAsksForTurtleOnly) {
  Instance inst = GenerateInstance(5, {20, 3});
  EXPECT_NE(inst.prompt.find("only the corrected Turtle document"), std::string::npos);
  EXPECT_EQ(BuildPrompt(inst), inst.prompt);
}

TEST(InjectionTest, ManipulationsAreLoggedAndRestorable) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    Instance inst = GenerateInstance(seed, {20, 3});
    ASSERT_EQ(inst.error_log.size(), 3u);
    std::set<std::size_t> statements;
    for (const auto& m : inst.error_log) {
      statements.insert(m.statement_index);
      EXPECT_EQ(inst.corrupted_text.substr(m.offset, m.replacement.size()), m.replacement);
    }
    EXPECT_EQ(statements.size(), 3u);
    EXPECT_NE(inst.corrupted_text, inst.reference_text);
    EXPECT_EQ(RestoreManipulations(inst.corrupted_text, inst.error_log), inst.reference_text);
    bool broken = !StrictlyParses(inst.corrupted_text) ||
                  rdf::Normalize(rdf::ParseTurtle(inst.corrupted_text)) != rdf::Normalize(inst.reference);
    EXPECT_TRUE(broken) << seed;
  }
}

TEST(InjectionTest, DroppedFinalDotBreaksStrictParse) {
  const std::string doc = "@prefix ex: <http://ex.org/> .\nex:a ex:p ex:b .\n";
  std::size_t found = 0;
  for (std::uint64_t seed = 0; seed < 64; ++seed) {
    Injection inj = InjectErrors(doc, 1, seed);
    ASSERT_EQ(inj.error_log.size(), 1u);
    if (inj.error_log[0].kind != ErrorKind::kDropFinalDot) continue;
    ++found;
    EXPECT_THROW(rdf::ParseTurtle(inj.corrupted), ParseError) << inj.corrupted;
    EXPECT_EQ(RestoreManipulations(inj.corrupted, inj.error_log), doc);
  }
  EXPECT_GT(found, 0u);
  EXPECT_THROW(InjectErrors(doc, 0, 1), SizeError);
}

TEST(InjectionTest, EveryKindOccurs) {
  std::set<ErrorKind> kinds;
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    for (const auto& m : GenerateInstance(seed, {20, 3}).error_log) kinds.insert(m.kind);
  }
  EXPECT_EQ(kinds.size(), 6u);
}

TEST(InjectionTest, KindNamesRoundTrip) {
  for (auto kind : {ErrorKind::kDropFinalDot, ErrorKind::kSwapSeparator,
                    ErrorKind::kBreakPrefixDirective, ErrorKind::kDeleteIriClose,
                    ErrorKind::kUnbalanceQuote, ErrorKind::kUndeclaredPrefix}) {
    EXPECT_EQ(ErrorKindFromString(ToString(kind)), kind);
  }
  EXPECT_FALSE(ErrorKindFromString("nope").has_value());
}

TEST(InjectionTest, ErrorLogJsonRoundTrips) {
  Instance inst = GenerateInstance(9, {30, 4});
  EXPECT_EQ(ErrorLogFromJson(ErrorLogToJson(inst.error_log)), inst.error_log);
}

TEST(EvaluateTest, ReferenceAnswerRestoresExactly) {
  Instance inst = GenerateInstance(1, {20, 3});
  Scores s = Evaluate("```turtle\n" + inst.reference_text + "```\n", inst);
  EXPECT_EQ(s.f1, 1.0);
  EXPECT_TRUE(s.exact_restore);
  EXPECT_TRUE(s.answer_parsable);
  EXPECT_EQ(s.failed_statements, 0u);
}

TEST(EvaluateTest, OneMissingTripleOfTwenty) {
  Instance inst = GenerateInstance(1, {20, 3});
  rdf::Graph partial = inst.reference;
  partial.Erase(*partial.begin());
  Scores s = Evaluate(rdf::SerializeTurtle(partial), inst);
  EXPECT_EQ(s.precision, 1.0);
  EXPECT_DOUBLE_EQ(s.recall, 0.95);
  EXPECT_NEAR(s.f1, 0.974358974358974, 1e-12);
  EXPECT_FALSE(s.exact_restore);
}

TEST(EvaluateTest, RefusalScoresZero) {
  Instance inst = GenerateInstance(1, {20, 3});
  Scores s = Evaluate("The file is correct.", inst);
  EXPECT_EQ(s.f1, 0.0);
  EXPECT_FALSE(s.answer_parsable);
}

TEST(EvaluateTest, EchoingCorruptedDocumentIsPartialCredit) {
  Instance inst = GenerateInstance(2, {20, 3});
  Scores s = Evaluate(inst.corrupted_text, inst);
  EXPECT_FALSE(s.exact_restore);
  EXPECT_LT(s.f1, 1.0);
}

TEST(ExportTest, WritesThreeFiles) {
  Instance inst = GenerateInstance(11, {20, 3});
  auto dir = std::filesystem::temp_directory_path() / "kgbench_turtle_fix_export";
  std::filesystem::remove_all(dir);
  ExportInstance(inst, dir);
  auto slurp = [](const std::filesystem::path& p) {
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
  };
  EXPECT_EQ(slurp(dir / "reference.ttl"), inst.reference_text);
  EXPECT_EQ(slurp(dir / "corrupted.ttl"), inst.corrupted_text);
  auto log = nlohmann::json::parse(slurp(dir / "errors.json"));
  EXPECT_EQ(log["seed"], 11);
  EXPECT_EQ(ErrorLogFromJson(log["errors"]), inst.error_log);
  std::filesystem::remove_all(dir);
}

TEST(TaskTest, SizeValidation) {
  auto task = MakeTask();
  EXPECT_NO_THROW(task->ValidateSize({{"triple_count", 10}}, "s"));
  try {
    task->ValidateSize({{"error_count", 0}}, "tasks[0].sizes[0]");
    FAIL();
  } catch (const ConfigError& e) {
    EXPECT_EQ(e.field_path(), "tasks[0].sizes[0].error_count");
  }
  EXPECT_THROW(task->ValidateSize({{"bogus", 1}}, "s"), ConfigError);
  EXPECT_THROW(task->Configure({{"x", 1}}, "tasks[0].options"), ConfigError);
}

TEST(TaskTest, OracleAnswerScoresOne) {
  auto task = MakeTask();
  auto c = task->MakeCase(task->DefaultSizes()[0], 77);
  auto scores = c->Evaluate(c->OracleAnswer());
  EXPECT_EQ(std::get<double>(scores.at("f1")), 1.0);
  EXPECT_EQ(c->SizeParams()["triple_count"], 20);
}

}  // namespace
}  // namespace kgbench::tasks::turtle_fix
