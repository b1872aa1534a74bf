#include "kgbench/harness/runner.hpp"

#include <chrono>
#include <fstream>
#include <mutex>
#include <random>
#include <set>
#include <thread>

#include "kgbench/connectors/replay_cache.hpp"
#include "kgbench/error.hpp"
#include "kgbench/hash.hpp"
#include "kgbench/time.hpp"

namespace kgbench::harness {
namespace {

using Clock = std::chrono::steady_clock;

std::string NewRunId() {
  std::random_device device;
  std::uint64_t entropy = (std::uint64_t{device()} << 32) ^ device();
  entropy ^= static_cast<std::uint64_t>(std::chrono::system_clock::now().time_since_epoch().count());
  return ToHex(Mix64(entropy));
}

// Drops a partial last line left behind by an interrupted run.
void TruncatePartialLine(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return;
  std::string content((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  if (content.empty() || content.back() == '\n') return;
  std::size_t keep = content.rfind('\n');
  keep = keep == std::string::npos ? 0 : keep + 1;
  in.close();
  std::error_code ec;
  std::filesystem::resize_file(path, keep, ec);
  if (ec) throw IoError("cannot repair " + path.string() + ": " + ec.message());
}

struct Cell {
  const TaskPlan* plan;
  std::shared_ptr<const tasks::Task> task;
  std::size_t size_index;
  std::uint32_t repetition;
};

class ResultsWriter {
 public:
  ResultsWriter(const std::filesystem::path& path, bool append) : path_(path) {
    std::error_code ec;
    if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path(), ec);
    out_.open(path, std::ios::binary | (append ? std::ios::app : std::ios::trunc));
    if (!out_) throw IoError("cannot open results file " + path.string());
  }

  void Append(const RunRecord& record) {
    out_ << RecordToLine(record) << '\n';
    out_.flush();
    if (!out_) throw IoError("cannot append to " + path_.string());
  }

 private:
  std::filesystem::path path_;
  std::ofstream out_;
};

RunRecord ExecuteCell(const Cell& cell, connectors::Connector& connector, std::uint64_t seed,
                      const std::string& run_id) {
  const tasks::Task& task = *cell.task;
  RunRecord record;
  record.run_id = run_id;
  record.task_id = std::string(task.id());
  record.task_version = std::string(task.version());
  record.prompt_template_version = std::string(task.prompt_template_version());
  record.model_id = connector.spec().model_id;
  record.size_index = cell.size_index;
  record.size_params = cell.plan->sizes[cell.size_index - 1];
  record.repetition = cell.repetition;
  record.seed = seed;

  auto start = Clock::now();
  std::int64_t latency_ms = 0;
  std::uint32_t retries = 0;
  std::size_t calls = 0;
  std::size_t cache_hits = 0;
  nlohmann::json usage = nlohmann::json::array();
  try {
    std::unique_ptr<tasks::TaskCase> task_case = task.MakeCase(record.size_params, seed);
    record.size_params = task_case->SizeParams();
    record.prompt = task_case->Prompt();
    connectors::GenerationContext context{task_case.get(), task.id()};
    tasks::DialogResult dialog = task_case->Converse([&](const connectors::Conversation& conversation) {
      connectors::Generation g = connector.GenerateText(conversation, context);
      ++calls;
      latency_ms += g.latency.count();
      retries += g.retries;
      if (g.from_cache) ++cache_hits;
      if (!g.usage.is_null()) usage.push_back(g.usage);
      return g.text;
    });
    record.response = dialog.response;
    record.scores = dialog.scores;
    if (dialog.conversation.size() > 2) {
      record.meta["conversation"] = connectors::ConversationToJson(dialog.conversation);
    }
  } catch (const Error& e) {
    record.scores = {{"error", true}};
    record.error = e.what();
  }
  const connectors::ConnectorSpec& spec = connector.spec();
  record.meta["generation"] = {{"kind", connectors::ToString(spec.kind)},
                               {"model_name", spec.model_name},
                               {"temperature", spec.temperature},
                               {"max_tokens", spec.max_tokens},
                               {"system_prompt", spec.system_prompt}};
  record.meta["latency_ms"] = latency_ms;
  record.meta["retries"] = retries;
  record.meta["calls"] = calls;
  record.meta["from_cache"] = calls > 0 && cache_hits == calls;
  if (!usage.empty()) record.meta["usage"] = usage;
  record.duration_ms =
      std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
  record.timestamp_utc = UtcTimestamp();
  return record;
}

}  // namespace

std::uint64_t CellSeed(std::uint64_t seed_base, std::string_view task_id, std::size_t size_index,
                       std::uint32_t repetition) {
  std::uint64_t h = Mix64(seed_base);
  h = HashCombine(h, Fnv1a64(task_id));
  h = HashCombine(h, static_cast<std::uint64_t>(size_index));
  h = HashCombine(h, static_cast<std::uint64_t>(repetition));
  return Mix64(h);
}

RunResult Run(const BenchmarkConfig& config, const tasks::TaskRegistry& registry,
              const RunOptions& options) {
  RunResult result;
  const bool resume = options.resume_path.has_value();
  result.results_path = resume ? *options.resume_path : std::filesystem::path(config.output.results_path);

  std::set<RecordKey> done;
  if (resume && std::filesystem::exists(result.results_path)) {
    TruncatePartialLine(result.results_path);
    RecordFile existing = ReadRecords(result.results_path);
    for (const RecordError& e : existing.errors) {
      if (options.log) *options.log << "warning: " << result.results_path.string() << ": " << e.what() << "\n";
    }
    for (const RunRecord& r : existing.records) done.insert(KeyOf(r));
    result.records = std::move(existing.records);
  }

  std::vector<Cell> cells;
  for (std::size_t t = 0; t < config.tasks.size(); ++t) {
    const TaskPlan& plan = config.tasks[t];
    auto task = ConfiguredTask(plan, registry, "tasks[" + std::to_string(t) + "]");
    for (std::size_t s = 1; s <= plan.sizes.size(); ++s) {
      for (std::uint32_t rep = 1; rep <= plan.repetitions; ++rep) cells.push_back({&plan, task, s, rep});
    }
  }

  const bool replay = options.replay || config.replay_mode;
  auto cache = std::make_shared<connectors::ReplayCache>(config.output.cache_path);
  std::vector<std::unique_ptr<connectors::Connector>> models;
  for (const connectors::ConnectorSpec& spec : config.models) {
    std::unique_ptr<connectors::Connector> connector =
        options.connector_factory
            ? options.connector_factory(spec)
            : connectors::MakeConnector(spec, {config.output.cache_path, options.sleeper});
    if (replay && spec.kind != connectors::ConnectorKind::kReplay) {
      connector = connectors::MakeReplayingConnector(std::move(connector), cache, spec);
    }
    models.push_back(std::move(connector));
  }

  ResultsWriter writer(result.results_path, resume);
  const std::string run_id = NewRunId();
  const std::size_t total = models.size() * cells.size();
  std::mutex mutex;
  std::size_t position = 0;

  auto run_model = [&](connectors::Connector& connector) {
    for (const Cell& cell : cells) {
      std::uint64_t seed =
          CellSeed(config.seed_base, cell.task->id(), cell.size_index, cell.repetition);
      RecordKey key{std::string(cell.task->id()), connector.spec().model_id, cell.size_index,
                    cell.repetition};
      if (done.contains(key)) {
        std::lock_guard lock(mutex);
        ++result.skipped;
        ++position;
        continue;
      }
      RunRecord record = ExecuteCell(cell, connector, seed, run_id);
      std::lock_guard lock(mutex);
      writer.Append(record);
      ++result.executed;
      ++position;
      if (record.error) ++result.failed;
      if (options.log) {
        *options.log << "[" << position << "/" << total << "] " << key.task_id << " " << key.model_id
                     << " size " << key.size_index << " rep " << key.repetition << ": "
                     << (record.error ? "error: " + *record.error : "ok") << "\n";
      }
      if (options.on_record) options.on_record(record);
      result.records.push_back(std::move(record));
    }
  };

  if (config.parallel_models && models.size() > 1) {
    std::vector<std::thread> threads;
    std::exception_ptr failure;
    for (auto& connector : models) {
      threads.emplace_back([&, c = connector.get()] {
        try {
          run_model(*c);
        } catch (...) {
          std::lock_guard lock(mutex);
          if (!failure) failure = std::current_exception();
        }
      });
    }
    for (auto& thread : threads) thread.join();
    if (failure) std::rethrow_exception(failure);
  } else {
    for (auto& connector : models) run_model(*connector);
  }
  return result;
}

RunRecord RescoreRecord(const RunRecord& record, const tasks::Task& task) {
  RunRecord out = record;
  if (record.error) return out;
  std::unique_ptr<tasks::TaskCase> task_case = task.MakeCase(record.size_params, record.seed);
  out.scores = task_case->Evaluate(record.response);
  out.task_version = std::string(task.version());
  return out;
}

RescoreResult Rescore(const std::filesystem::path& records_path, const tasks::TaskRegistry& registry,
                      const std::vector<TaskPlan>& plans) {
  RecordFile file = ReadRecords(records_path);
  RescoreResult result;
  result.errors = std::move(file.errors);
  std::map<std::string, std::shared_ptr<const tasks::Task>> tasks;
  for (const auto& task : registry.All()) tasks[std::string(task->id())] = task;
  for (std::size_t i = 0; i < plans.size(); ++i) {
    tasks[plans[i].task_id] = ConfiguredTask(plans[i], registry, "tasks[" + std::to_string(i) + "]");
  }
  for (std::size_t i = 0; i < file.records.size(); ++i) {
    const RunRecord& record = file.records[i];
    const std::size_t line = file.lines[i];
    auto it = tasks.find(record.task_id);
    if (it == tasks.end()) {
      result.errors.emplace_back(line, "unknown task '" + record.task_id + "'");
      result.records.push_back(record);
      continue;
    }
    try {
      result.records.push_back(RescoreRecord(record, *it->second));
    } catch (const Error& e) {
      result.errors.emplace_back(line, std::string("cannot rescore: ") + e.what());
      result.records.push_back(record);
    }
  }
  return result;
}

}  // namespace kgbench::harness
