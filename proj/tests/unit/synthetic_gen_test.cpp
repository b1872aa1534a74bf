#include <gtest/gtest.h>

#include <cmath>

#include "kgbench/error.hpp"
#include "kgbench/rdf/turtle.hpp"
#include "kgbench/tasks/synthetic_gen.hpp"

namespace kgbench::tasks::synthetic_gen {
namespace {

TEST(ScheduleTest, DefaultScheduleDoubles) {
  auto schedule = DefaultSchedule();
  ASSERT_EQ(schedule.size(), 8u);
  EXPECT_EQ(schedule[0], (Size{5, 10, 1}));
  EXPECT_EQ(schedule[7], (Size{640, 1280, 8}));
  EXPECT_EQ(SizeSchedule(3).persons, 20u);
  EXPECT_THROW(SizeSchedule(0), RangeError);
  EXPECT_THROW(SizeSchedule(9), RangeError);
}

TEST(ScheduleTest, ValidateSize) {
  EXPECT_THROW(ValidateSize({0, 0, 1}), SizeError);
  EXPECT_THROW(ValidateSize({3, 7, 1}), SizeError);
  EXPECT_NO_THROW(ValidateSize({3, 6, 1}));
  EXPECT_NO_THROW(ValidateSize({1ULL << 40, UINT64_MAX, 1}));
  EXPECT_THROW(ValidateSize({1ULL << 31, UINT64_MAX, 1}), SizeError);
}

TEST(PromptTest, FillsCounts) {
  std::string prompt = BuildPrompt({40, 80, 4});
  EXPECT_NE(prompt.find("40"), std::string::npos);
  EXPECT_NE(prompt.find("80"), std::string::npos);
  EXPECT_EQ(prompt.find("{{"), std::string::npos);
}

TEST(PromptTest, NamesFoafTermsAndIsDeterministic) {
  std::string prompt = BuildPrompt({5, 10, 1});
  EXPECT_NE(prompt.find("foaf:Person"), std::string::npos);
  EXPECT_NE(prompt.find("foaf:knows"), std::string::npos);
  EXPECT_EQ(prompt, BuildPrompt({5, 10, 1}));
}

TEST(DatasetTest, GeneratesRequestedCounts) {
  for (const auto& size : DefaultSchedule()) {
    rdf::Graph g = GenerateFoafDataset(size.persons, size.links);
    EntityCounts counts = CountEntities(g);
    EXPECT_EQ(counts.persons, size.persons);
    EXPECT_EQ(counts.links, size.links);
  }
  EXPECT_EQ(CountEntities(GenerateFoafDataset(4, 12)).links, 12u);
  EXPECT_THROW(GenerateFoafDataset(4, 13), SizeError);
}

TEST(CountTest, UntypedAndDuplicateSubjectsDoNotCount) {
  rdf::Graph g = rdf::ParseTurtle(R"(
    @prefix foaf: <http://xmlns.com/foaf/0.1/> .
    @prefix ex: <http://ex.org/> .
    ex:a a foaf:Person ; foaf:name "A" ; foaf:knows ex:b .
    ex:a a foaf:Person .
    ex:b foaf:name "B" ; foaf:knows ex:a .
    _:c a foaf:Person .
  )");
  EntityCounts counts = CountEntities(g);
  EXPECT_EQ(counts.persons, 2u);
  EXPECT_EQ(counts.links, 2u);
}

TEST(CountTest, EmptyAndDuplicatedStatements) {
  EXPECT_EQ(CountEntities(rdf::Graph{}).persons, 0u);
  rdf::Graph g = rdf::ParseTurtle(R"(
    @prefix foaf: <http://xmlns.com/foaf/0.1/> .
    @prefix ex: <http://ex.org/> .
    ex:a a foaf:Person . ex:b a foaf:Person . ex:c a foaf:Person .
    ex:a foaf:knows ex:b . ex:b foaf:knows ex:c . ex:a foaf:knows ex:b .
  )");
  EntityCounts counts = CountEntities(g);
  EXPECT_EQ(counts.persons, 3u);
  EXPECT_EQ(counts.links, 2u);
}

TEST(EvaluateTest, RelativeErrors) {
  Size size{10, 20, 2};
  auto text = [](std::uint64_t p, std::uint64_t l) { return rdf::SerializeTurtle(GenerateFoafDataset(p, l)); };
  Scores exact = Evaluate(text(10, 20), size);
  EXPECT_EQ(exact.persons_relative_error, 0.0);
  EXPECT_EQ(exact.links_relative_error, 0.0);
  EXPECT_TRUE(exact.answer_parsable);
  Scores doubled = Evaluate(text(20, 40), size);
  EXPECT_EQ(doubled.persons_relative_error, 1.0);
  EXPECT_EQ(Evaluate(text(15, 20), size).persons_relative_error, 0.5);
  Scores half = Evaluate(text(5, 5), size);
  EXPECT_EQ(half.persons_relative_error, -0.5);
  EXPECT_EQ(half.links_relative_error, -0.75);
}

TEST(EvaluateTest, EmptyGraphIsMinusOne) {
  Scores s = Evaluate("I cannot do that.", {5, 10, 1});
  EXPECT_EQ(s.persons_relative_error, -1.0);
  EXPECT_EQ(s.links_relative_error, -1.0);
  EXPECT_EQ(s.persons_generated, 0u);
}

TEST(EvaluateTest, ZeroLinksRequestedUsesUnitDenominator) {
  Scores s = Evaluate(rdf::SerializeTurtle(GenerateFoafDataset(3, 2)), {3, 0, 1});
  EXPECT_EQ(s.links_relative_error, 2.0);
}

TEST(TaskTest, SizeForms) {
  auto task = MakeTask();
  EXPECT_EQ(task->DefaultSizes().size(), 8u);
  EXPECT_NO_THROW(task->ValidateSize({{"size_index", 8}}, "s"));
  EXPECT_THROW(task->ValidateSize({{"size_index", 9}}, "s"), ConfigError);
  EXPECT_NO_THROW(task->ValidateSize({{"persons", 3}, {"links", 2}}, "s"));
  EXPECT_THROW(task->ValidateSize({{"persons", 3}, {"links", 7}}, "s"), ConfigError);
  auto c = task->MakeCase({{"size_index", 2}}, 0);
  EXPECT_EQ(c->SizeParams()["persons"], 10);
  auto scores = c->Evaluate(c->OracleAnswer());
  EXPECT_EQ(std::get<double>(scores.at("persons_relative_error")), 0.0);
}

TEST(TaskTest, CustomSchedule) {
  auto task = MakeTask()->Configure({{"schedule", {{{"persons", 2}, {"links", 1}}}}}, "o");
  EXPECT_EQ(task->DefaultSizes().size(), 1u);
  EXPECT_THROW(task->ValidateSize({{"size_index", 2}}, "s"), ConfigError);
}

}  // namespace
}  // namespace kgbench::tasks::synthetic_gen
