#include <benchmark/benchmark.h>

#include "kgbench/rdf/normalize.hpp"
#include "kgbench/rdf/scores.hpp"
#include "kgbench/rdf/turtle.hpp"
#include "kgbench/tasks/synthetic_gen.hpp"
#include "kgbench/tasks/turtle_fix.hpp"

namespace {

using namespace kgbench;

std::string FoafDocument(std::int64_t persons) {
  return rdf::SerializeTurtle(tasks::synthetic_gen::GenerateFoafDataset(persons, 2 * persons));
}

void BM_ParseFoaf(benchmark::State& state) {
  const std::string text = FoafDocument(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(rdf::ParseTurtle(text));
  state.SetBytesProcessed(state.iterations() * static_cast<std::int64_t>(text.size()));
}
BENCHMARK(BM_ParseFoaf)->RangeMultiplier(4)->Range(5, 640);

void BM_SalvageCorrupted(benchmark::State& state) {
  auto inst = tasks::turtle_fix::GenerateInstance(1, {static_cast<std::size_t>(state.range(0)), 3});
  for (auto _ : state) benchmark::DoNotOptimize(rdf::SalvageParseTurtle(inst.corrupted_text));
}
BENCHMARK(BM_SalvageCorrupted)->Arg(20)->Arg(200);

void BM_NormalizeReference(benchmark::State& state) {
  rdf::Graph g = tasks::turtle_fix::GenerateReferenceGraph(1, state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(rdf::Normalize(g));
}
BENCHMARK(BM_NormalizeReference)->Arg(20)->Arg(200)->Arg(2000);

void BM_GraphScores(benchmark::State& state) {
  rdf::Graph reference = tasks::turtle_fix::GenerateReferenceGraph(1, state.range(0));
  rdf::Graph candidate = reference;
  candidate.Erase(*candidate.begin());
  for (auto _ : state) benchmark::DoNotOptimize(rdf::GraphScores(candidate, reference));
}
BENCHMARK(BM_GraphScores)->Arg(20)->Arg(200);

void BM_GenerateTurtleFixInstance(benchmark::State& state) {
  std::uint64_t seed = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(tasks::turtle_fix::GenerateInstance(seed++, {20, 3}));
  }
}
BENCHMARK(BM_GenerateTurtleFixInstance);

}  // namespace

BENCHMARK_MAIN();
