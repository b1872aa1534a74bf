#pragma once

#include <cstddef>
#include <filesystem>
#include <memory>
#include <string>
#include <string_view>

#include "kgbench/rdf/term.hpp"
#include "kgbench/tasks/task.hpp"

// Turning a key-value factsheet excerpt into Turtle.
namespace kgbench::tasks::fact_extract {

inline constexpr std::string_view kTaskId = "fact-extract";
inline constexpr std::string_view kTaskVersion = "1";
inline constexpr std::string_view kPromptTemplateId = "fact-extract.v1";

struct FactSheetAsset {
  std::string asset_id;
  std::string version;
  std::string description;
  std::string plaintext;
  std::string instructions;
  std::string reference_text;
  rdf::Graph reference;
};

// Reads plaintext.txt, reference.ttl, instructions.txt and meta.json from
// `directory`. Throws AssetError for missing files, unparsable reference or
// meta data, and instructions that omit a reference predicate.
FactSheetAsset LoadAsset(const std::filesystem::path& directory);

// $KGBENCH_ASSETS/factsheet/printer when set, else the source tree copy,
// else the installed copy.
std::filesystem::path DefaultAssetDir();

std::string BuildPrompt(const FactSheetAsset& asset);

struct Scores {
  double f1 = 0.0;
  double precision = 0.0;
  double recall = 0.0;
  bool answer_parsable = false;
  std::size_t failed_statements = 0;

  ScoreSet ToScoreSet() const;
};

Scores Evaluate(std::string_view response, const FactSheetAsset& asset);

// Uses the bundled asset. The only option is "asset_dir".
std::unique_ptr<Task> MakeTask();
std::unique_ptr<Task> MakeTask(FactSheetAsset asset);

}  // namespace kgbench::tasks::fact_extract
