#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "kgbench/rdf/term.hpp"
#include "kgbench/tasks/task.hpp"

// Repairing syntax errors injected into a generated Turtle document.
namespace kgbench::tasks::turtle_fix {

inline constexpr std::string_view kTaskId = "turtle-fix";
inline constexpr std::string_view kTaskVersion = "1";
inline constexpr std::string_view kPromptTemplateId = "turtle-fix.v1";
inline constexpr std::string_view kNamespace = "http://example.org/kgbench/";

struct Size {
  std::size_t triple_count = 20;
  std::size_t error_count = 3;
};

enum class ErrorKind {
  kDropFinalDot,
  kSwapSeparator,
  kBreakPrefixDirective,
  kDeleteIriClose,
  kUnbalanceQuote,
  kUndeclaredPrefix,
};

std::string_view ToString(ErrorKind kind);
std::optional<ErrorKind> ErrorKindFromString(std::string_view name);

// One applied manipulation. `offset` is the byte position in the corrupted
// document where `replacement` now stands in place of `original`.
struct Manipulation {
  ErrorKind kind;
  std::size_t statement_index = 0;
  std::size_t offset = 0;
  std::string original;
  std::string replacement;

  friend bool operator==(const Manipulation&, const Manipulation&) = default;
};

struct Injection {
  std::string corrupted;
  std::vector<Manipulation> error_log;
};

// Applies k manipulations, at most one per statement, chosen by `seed`.
// Throws SizeError when k is 0 or fewer than k statements can be
// manipulated.
Injection InjectErrors(std::string_view document, std::size_t k, std::uint64_t seed);

// Undoes the logged manipulations.
std::string RestoreManipulations(std::string_view corrupted,
                                 const std::vector<Manipulation>& error_log);

// A seeded graph of fictional people and devices with exactly triple_count
// triples, including typed and language-tagged literals and blank nodes.
rdf::Graph GenerateReferenceGraph(std::uint64_t seed, std::size_t triple_count);

struct Instance {
  std::uint64_t seed = 0;
  Size size;
  rdf::Graph reference;
  std::string reference_text;  // SerializeTurtle(reference)
  std::string corrupted_text;
  std::vector<Manipulation> error_log;
  std::string prompt;
};

// Throws SizeError for zero counts or when error_count exceeds the
// statements available.
Instance GenerateInstance(std::uint64_t seed, const Size& size);

std::string BuildPrompt(const Instance& instance);

struct Scores {
  double f1 = 0.0;
  double precision = 0.0;
  double recall = 0.0;
  bool answer_parsable = false;
  bool exact_restore = false;
  std::size_t failed_statements = 0;

  ScoreSet ToScoreSet() const;
};

Scores Evaluate(std::string_view response, const Instance& instance);

nlohmann::json ErrorLogToJson(const std::vector<Manipulation>& error_log);
std::vector<Manipulation> ErrorLogFromJson(const nlohmann::json& j);

// Writes reference.ttl, corrupted.ttl and errors.json into `directory`.
void ExportInstance(const Instance& instance, const std::filesystem::path& directory);

std::unique_ptr<Task> MakeTask();

}  // namespace kgbench::tasks::turtle_fix
