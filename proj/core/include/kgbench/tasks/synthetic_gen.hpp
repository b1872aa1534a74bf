#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "kgbench/rdf/term.hpp"
#include "kgbench/tasks/task.hpp"

// Fabricating a FOAF dataset with a requested number of persons and links.
namespace kgbench::tasks::synthetic_gen {

inline constexpr std::string_view kTaskId = "synthetic-gen";
inline constexpr std::string_view kTaskVersion = "1";
inline constexpr std::string_view kPromptTemplateId = "synthetic-gen.v1";
inline constexpr std::size_t kDefaultSizeCount = 8;

struct Size {
  std::uint64_t persons = 0;
  std::uint64_t links = 0;
  std::size_t size_index = 1;

  friend bool operator==(const Size&, const Size&) = default;
};

// persons = 5 * 2^(i-1), links = 2 * persons.
std::vector<Size> DefaultSchedule(std::size_t count = kDefaultSizeCount);

// Throws RangeError unless 1 <= size_index <= schedule.size().
Size SizeSchedule(std::size_t size_index, const std::vector<Size>& schedule);
Size SizeSchedule(std::size_t size_index);

// Throws SizeError when persons is 0 or links exceed persons * (persons - 1).
void ValidateSize(const Size& size);

std::string BuildPrompt(const Size& size);

struct EntityCounts {
  std::uint64_t persons = 0;
  std::uint64_t links = 0;
};

// Persons are distinct subjects typed foaf:Person; links are distinct
// foaf:knows triples.
EntityCounts CountEntities(const rdf::Graph& graph);

struct Scores {
  double persons_relative_error = -1.0;
  double links_relative_error = -1.0;
  std::uint64_t persons_generated = 0;
  std::uint64_t links_generated = 0;
  bool answer_parsable = false;

  ScoreSet ToScoreSet() const;
};

// (generated - requested) / requested. A request of zero links uses 1 as
// the denominator. Both errors are -1 when the salvaged graph has no
// triples.
Scores Evaluate(std::string_view response, const Size& size);

// n persons person0..person(n-1) with names, plus `links` distinct knows
// triples. Throws SizeError when links exceed n * (n - 1).
rdf::Graph GenerateFoafDataset(std::uint64_t persons, std::uint64_t links);

// Sizes in the config are either {"size_index": i} into the schedule or
// explicit {"persons": p, "links": l}. The option "schedule" replaces the
// default schedule with a list of explicit sizes.
std::unique_ptr<Task> MakeTask();

}  // namespace kgbench::tasks::synthetic_gen
