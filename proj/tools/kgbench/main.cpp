#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "kgbench/connectors/connector.hpp"
#include "kgbench/error.hpp"
#include "kgbench/harness/config.hpp"
#include "kgbench/harness/csv.hpp"
#include "kgbench/harness/runner.hpp"
#include "kgbench/harness/stats.hpp"
#include "kgbench/tasks/registry.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfig = 1;
constexpr int kExitIo = 2;
constexpr int kExitProbe = 3;

using kgbench::connectors::ConnectorKind;
namespace harness = kgbench::harness;

int CmdRun(const std::string& config_path, bool replay, const std::string& resume) {
  auto registry = kgbench::tasks::TaskRegistry::Default();
  harness::BenchmarkConfig config = harness::LoadConfig(config_path, registry);
  harness::RunOptions options;
  options.replay = replay;
  options.log = &std::cerr;
  if (!resume.empty()) options.resume_path = resume;
  harness::RunResult result = harness::Run(config, registry, options);
  auto stats = harness::AggregateStats(result.records);
  harness::EmitPlotData(stats, result.records, config.output.stats_path);
  std::cout << "executed " << result.executed << ", skipped " << result.skipped << ", errors "
            << result.failed << "\n"
            << "results: " << result.results_path.string() << "\n"
            << "stats:   " << config.output.stats_path << "\n";
  return kExitOk;
}

int CmdRescore(const std::string& in, const std::string& out, const std::string& config_path) {
  auto registry = kgbench::tasks::TaskRegistry::Default();
  std::vector<harness::TaskPlan> plans;
  if (!config_path.empty()) plans = harness::LoadConfig(config_path, registry).tasks;
  harness::RescoreResult result = harness::Rescore(in, registry, plans);
  for (const auto& error : result.errors) std::cerr << in << ": " << error.what() << "\n";
  harness::WriteRecords(out, result.records);
  std::cout << "rescored " << result.records.size() << " records, " << result.errors.size()
            << " problems reported\n";
  return kExitOk;
}

int CmdStats(const std::string& in, const std::string& out_dir) {
  harness::RecordFile file = harness::ReadRecords(in);
  for (const auto& error : file.errors) std::cerr << in << ": " << error.what() << "\n";
  auto stats = harness::AggregateStats(file.records);
  harness::EmitPlotData(stats, file.records, out_dir);
  std::cout << stats.size() << " stat rows from " << file.records.size() << " records written to "
            << out_dir << "\n";
  return kExitOk;
}

int CmdTasksList() {
  const auto registry = kgbench::tasks::TaskRegistry::Default();
  for (const auto& task : registry.All()) {
    std::cout << task->id() << " (version " << task->version() << ", prompt "
              << task->prompt_template_version() << ")\n  " << task->description()
              << "\n  default sizes:";
    for (const auto& size : task->DefaultSizes()) std::cout << " " << size.dump();
    std::cout << "\n";
  }
  return kExitOk;
}

int CmdProbe(const std::string& config_path) {
  auto registry = kgbench::tasks::TaskRegistry::Default();
  harness::BenchmarkConfig config = harness::LoadConfig(config_path, registry);
  bool all_ok = true;
  const kgbench::connectors::Conversation probe = {
      {kgbench::connectors::Role::kUser, "Reply with the single word OK."}};
  for (const auto& spec : config.models) {
    std::cout << spec.model_id << " [" << ToString(spec.kind) << "]: ";
    if (spec.kind == ConnectorKind::kOracle || spec.kind == ConnectorKind::kScripted) {
      std::cout << "ok (local test double)\n";
      continue;
    }
    try {
      auto connector = kgbench::connectors::MakeConnector(spec, {config.output.cache_path, {}});
      auto generation = connector->GenerateText(probe);
      std::string excerpt = generation.text.substr(0, 60);
      std::cout << "ok in " << generation.latency.count() << " ms: \"" << excerpt << "\"\n";
    } catch (const kgbench::ConnectorError& e) {
      all_ok = false;
      std::cout << "FAILED: " << e.what() << "\n";
    }
  }
  return all_ok ? kExitOk : kExitProbe;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Knowledge graph engineering benchmark for text-generation models"};
  app.require_subcommand(1);

  std::string config_path, resume, results, out, out_dir;
  bool replay = false;

  auto* run = app.add_subcommand("run", "run a benchmark configuration");
  run->add_option("--config", config_path, "benchmark configuration (JSON)")->required();
  run->add_flag("--replay", replay, "answer from the replay cache and record misses");
  run->add_option("--resume", resume, "results file to continue, skipping finished cells");

  auto* rescore = app.add_subcommand("rescore", "re-evaluate stored responses");
  rescore->add_option("--results", results, "input JSON Lines file")->required();
  rescore->add_option("--out", out, "output JSON Lines file")->required();
  rescore->add_option("--config", config_path, "configuration supplying task options");

  auto* stats = app.add_subcommand("stats", "aggregate results into stats.csv and points.csv");
  stats->add_option("--results", results, "input JSON Lines file")->required();
  stats->add_option("--out-dir", out_dir, "output directory")->required();

  auto* tasks = app.add_subcommand("tasks", "inspect registered tasks");
  tasks->require_subcommand(1);
  auto* tasks_list = tasks->add_subcommand("list", "list registered tasks");

  auto* models = app.add_subcommand("models", "inspect configured models");
  models->require_subcommand(1);
  auto* probe = models->add_subcommand("probe", "send one tiny prompt to each model");
  probe->add_option("--config", config_path, "benchmark configuration (JSON)")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitConfig;
  }

  try {
    if (*run) return CmdRun(config_path, replay, resume);
    if (*rescore) return CmdRescore(results, out, config_path);
    if (*stats) return CmdStats(results, out_dir);
    if (*tasks_list) return CmdTasksList();
    if (*probe) return CmdProbe(config_path);
  } catch (const kgbench::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  }
  return kExitOk;
}
