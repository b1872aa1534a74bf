#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "kgbench/error.hpp"
#include "kgbench/tasks/task.hpp"

namespace kgbench::harness {

struct RunRecord {
  std::string run_id;
  std::string timestamp_utc;
  std::string task_id;
  std::string task_version;
  std::string prompt_template_version;
  std::string model_id;
  std::size_t size_index = 1;  // 1-based position in the task's size list
  nlohmann::json size_params;
  std::uint32_t repetition = 1;  // 1-based
  std::uint64_t seed = 0;
  std::string prompt;
  std::string response;
  tasks::ScoreSet scores;
  std::int64_t duration_ms = 0;
  // generation settings, latency_ms, retries, calls, from_cache, usage and,
  // for dialogs, conversation
  nlohmann::json meta = nlohmann::json::object();
  std::optional<std::string> error;

  friend bool operator==(const RunRecord&, const RunRecord&) = default;
};

struct RecordKey {
  std::string task_id;
  std::string model_id;
  std::size_t size_index = 0;
  std::uint32_t repetition = 0;

  friend auto operator<=>(const RecordKey&, const RecordKey&) = default;
};

RecordKey KeyOf(const RunRecord& record);

nlohmann::json RecordToJson(const RunRecord& record);
// Throws RecordError(line) on missing or mistyped fields.
RunRecord RecordFromJson(const nlohmann::json& j, std::size_t line = 0);
std::string RecordToLine(const RunRecord& record);  // no trailing newline

struct RecordFile {
  std::vector<RunRecord> records;
  std::vector<std::size_t> lines;   // line number of each record
  std::vector<RecordError> errors;  // malformed lines, in file order
};

// Reads JSON Lines; malformed lines are reported and skipped. A missing
// file throws IoError.
RecordFile ReadRecords(const std::filesystem::path& path);

// Overwrites `path` with one line per record.
void WriteRecords(const std::filesystem::path& path, const std::vector<RunRecord>& records);

}  // namespace kgbench::harness
