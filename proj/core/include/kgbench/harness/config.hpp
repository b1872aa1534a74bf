#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "kgbench/connectors/connector.hpp"
#include "kgbench/tasks/registry.hpp"

namespace kgbench::harness {

struct TaskPlan {
  std::string task_id;
  std::vector<nlohmann::json> sizes;  // the task's defaults when omitted
  std::uint32_t repetitions = 1;
  nlohmann::json options = nlohmann::json::object();
};

struct OutputConfig {
  std::string results_path = "results/results.jsonl";
  std::string stats_path = "results/stats";  // directory for the CSV files
  std::string cache_path = "results/cache";  // replay cache
};

struct BenchmarkConfig {
  std::vector<connectors::ConnectorSpec> models;
  std::vector<TaskPlan> tasks;
  std::uint64_t seed_base = 0;
  OutputConfig output;
  bool replay_mode = false;
  bool parallel_models = false;
};

// Strict validation: unknown keys, duplicate ids, unregistered tasks and
// invalid sizes raise ConfigError naming the field path.
BenchmarkConfig ParseConfig(const nlohmann::json& j, const tasks::TaskRegistry& registry);
// Throws IoError when the file cannot be read and ConfigError for invalid
// JSON or content.
BenchmarkConfig LoadConfig(const std::filesystem::path& path, const tasks::TaskRegistry& registry);

nlohmann::json ConfigToJson(const BenchmarkConfig& config);

// The registry's task with the plan's options applied.
std::shared_ptr<const tasks::Task> ConfiguredTask(const TaskPlan& plan,
                                                  const tasks::TaskRegistry& registry,
                                                  const std::string& path = "tasks");

}  // namespace kgbench::harness
