#include "kgbench/harness/config.hpp"

#include <fstream>
#include <set>

#include "kgbench/error.hpp"
#include "kgbench/json_number.hpp"

namespace kgbench::harness {
namespace {

void RejectUnknown(const nlohmann::json& j, const std::set<std::string>& keys, const std::string& path) {
  for (const auto& [key, value] : j.items()) {
    if (!keys.contains(key)) throw ConfigError(path + "." + key, "unknown key '" + key + "'");
  }
}

const nlohmann::json& Required(const nlohmann::json& j, const std::string& key, const std::string& path) {
  auto it = j.find(key);
  if (it == j.end()) throw ConfigError(path + "." + key, "missing");
  return *it;
}

std::string String(const nlohmann::json& v, const std::string& path) {
  if (!v.is_string() || v.get<std::string>().empty()) throw ConfigError(path, "must be a non-empty string");
  return v.get<std::string>();
}

TaskPlan ParseTask(const nlohmann::json& j, const std::string& path,
                   const tasks::TaskRegistry& registry) {
  if (!j.is_object()) throw ConfigError(path, "must be an object");
  RejectUnknown(j, {"task_id", "sizes", "repetitions", "options"}, path);
  TaskPlan plan;
  plan.task_id = String(Required(j, "task_id", path), path + ".task_id");
  if (!registry.Find(plan.task_id)) {
    throw ConfigError(path + ".task_id", "unknown task_id '" + plan.task_id + "'");
  }
  const nlohmann::json& reps = Required(j, "repetitions", path);
  if (!IsNonNegativeInteger(reps) || reps.get<std::uint64_t>() == 0 ||
      reps.get<std::uint64_t>() > UINT32_MAX) {
    throw ConfigError(path + ".repetitions", "must be a positive integer");
  }
  plan.repetitions = reps.get<std::uint32_t>();
  if (j.contains("options")) {
    if (!j["options"].is_object()) throw ConfigError(path + ".options", "must be an object");
    plan.options = j["options"];
  }
  auto task = ConfiguredTask(plan, registry, path);
  if (j.contains("sizes")) {
    const nlohmann::json& sizes = j["sizes"];
    if (!sizes.is_array() || sizes.empty()) throw ConfigError(path + ".sizes", "must be a non-empty array");
    for (std::size_t i = 0; i < sizes.size(); ++i) {
      task->ValidateSize(sizes[i], path + ".sizes[" + std::to_string(i) + "]");
      plan.sizes.push_back(sizes[i]);
    }
  } else {
    plan.sizes = task->DefaultSizes();
  }
  return plan;
}

}  // namespace

std::shared_ptr<const tasks::Task> ConfiguredTask(const TaskPlan& plan,
                                                  const tasks::TaskRegistry& registry,
                                                  const std::string& path) {
  auto task = registry.Find(plan.task_id);
  if (!task) throw ConfigError(path + ".task_id", "unknown task_id '" + plan.task_id + "'");
  if (plan.options.empty()) return task;
  return task->Configure(plan.options, path + ".options");
}

BenchmarkConfig ParseConfig(const nlohmann::json& j, const tasks::TaskRegistry& registry) {
  const std::string root = "config";
  if (!j.is_object()) throw ConfigError(root, "must be a JSON object");
  RejectUnknown(j, {"models", "tasks", "seed_base", "output", "replay_mode", "parallel_models"}, root);
  BenchmarkConfig config;

  const nlohmann::json& models = Required(j, "models", root);
  if (!models.is_array() || models.empty()) throw ConfigError("models", "must be a non-empty array");
  std::set<std::string> model_ids;
  for (std::size_t i = 0; i < models.size(); ++i) {
    std::string path = "models[" + std::to_string(i) + "]";
    config.models.push_back(connectors::ConnectorSpecFromJson(models[i], path));
    if (!model_ids.insert(config.models.back().model_id).second) {
      throw ConfigError(path + ".model_id", "duplicate model_id '" + config.models.back().model_id + "'");
    }
  }

  const nlohmann::json& task_list = Required(j, "tasks", root);
  if (!task_list.is_array() || task_list.empty()) throw ConfigError("tasks", "must be a non-empty array");
  std::set<std::string> task_ids;
  for (std::size_t i = 0; i < task_list.size(); ++i) {
    std::string path = "tasks[" + std::to_string(i) + "]";
    config.tasks.push_back(ParseTask(task_list[i], path, registry));
    if (!task_ids.insert(config.tasks.back().task_id).second) {
      throw ConfigError(path + ".task_id", "duplicate task_id '" + config.tasks.back().task_id + "'");
    }
  }

  if (j.contains("seed_base")) {
    if (!IsNonNegativeInteger(j["seed_base"])) {
      throw ConfigError("seed_base", "must be an unsigned 64-bit integer");
    }
    config.seed_base = j["seed_base"].get<std::uint64_t>();
  }
  if (j.contains("output")) {
    const nlohmann::json& out = j["output"];
    if (!out.is_object()) throw ConfigError("output", "must be an object");
    RejectUnknown(out, {"results_path", "stats_path", "cache_path"}, "output");
    if (out.contains("results_path")) config.output.results_path = String(out["results_path"], "output.results_path");
    if (out.contains("stats_path")) config.output.stats_path = String(out["stats_path"], "output.stats_path");
    if (out.contains("cache_path")) config.output.cache_path = String(out["cache_path"], "output.cache_path");
  }
  for (const char* key : {"replay_mode", "parallel_models"}) {
    if (!j.contains(key)) continue;
    if (!j[key].is_boolean()) throw ConfigError(key, "must be a boolean");
    (std::string_view(key) == "replay_mode" ? config.replay_mode : config.parallel_models) = j[key].get<bool>();
  }
  return config;
}

BenchmarkConfig LoadConfig(const std::filesystem::path& path, const tasks::TaskRegistry& registry) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read config " + path.string());
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ConfigError("config", std::string("invalid JSON: ") + e.what());
  }
  return ParseConfig(j, registry);
}

nlohmann::json ConfigToJson(const BenchmarkConfig& config) {
  nlohmann::json models = nlohmann::json::array();
  for (const auto& spec : config.models) models.push_back(connectors::ConnectorSpecToJson(spec));
  nlohmann::json task_list = nlohmann::json::array();
  for (const auto& plan : config.tasks) {
    nlohmann::json t = {{"task_id", plan.task_id}, {"sizes", plan.sizes}, {"repetitions", plan.repetitions}};
    if (!plan.options.empty()) t["options"] = plan.options;
    task_list.push_back(t);
  }
  return {{"models", models},
          {"tasks", task_list},
          {"seed_base", config.seed_base},
          {"output",
           {{"results_path", config.output.results_path},
            {"stats_path", config.output.stats_path},
            {"cache_path", config.output.cache_path}}},
          {"replay_mode", config.replay_mode},
          {"parallel_models", config.parallel_models}};
}

}  // namespace kgbench::harness
