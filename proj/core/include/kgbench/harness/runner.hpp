#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <ostream>
#include <string_view>
#include <vector>

#include "kgbench/connectors/connector.hpp"
#include "kgbench/harness/config.hpp"
#include "kgbench/harness/records.hpp"
#include "kgbench/tasks/registry.hpp"

namespace kgbench::harness {

// Seed of one benchmark cell; independent of the model so that every model
// sees the same instances.
std::uint64_t CellSeed(std::uint64_t seed_base, std::string_view task_id, std::size_t size_index,
                       std::uint32_t repetition);

struct RunOptions {
  // Replay mode on top of config.replay_mode.
  bool replay = false;
  // Append to this results file, skipping cells it already holds, instead
  // of starting config.output.results_path afresh.
  std::optional<std::filesystem::path> resume_path;
  connectors::Sleeper sleeper;
  std::ostream* log = nullptr;
  // Called after each record is written, from the writing thread.
  std::function<void(const RunRecord&)> on_record;
  // Replaces MakeConnector, e.g. to inject failing doubles in tests.
  std::function<std::unique_ptr<connectors::Connector>(const connectors::ConnectorSpec&)> connector_factory;
};

struct RunResult {
  std::filesystem::path results_path;
  std::vector<RunRecord> records;  // everything in the results file afterwards
  std::size_t executed = 0;
  std::size_t skipped = 0;
  std::size_t failed = 0;  // error records written in this run
};

// Runs every (model, task, size, repetition) cell, appending and flushing
// one record per cell. Connector and task failures become error records.
// Throws IoError when the results file cannot be written.
RunResult Run(const BenchmarkConfig& config, const tasks::TaskRegistry& registry,
              const RunOptions& options = {});

struct RescoreResult {
  std::vector<RunRecord> records;
  std::vector<RecordError> errors;
};

// Re-evaluates stored responses with the registered scorers. Error records
// and records of unknown tasks are passed through; the latter are reported.
RescoreResult Rescore(const std::filesystem::path& records_path, const tasks::TaskRegistry& registry,
                      const std::vector<TaskPlan>& plans = {});
RunRecord RescoreRecord(const RunRecord& record, const tasks::Task& task);

}  // namespace kgbench::harness
