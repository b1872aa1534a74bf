#include "kgbench/harness/records.hpp"

#include <fstream>

namespace kgbench::harness {
namespace {

template <typename T>
T Get(const nlohmann::json& j, const char* key, std::size_t line) {
  auto it = j.find(key);
  if (it == j.end()) throw RecordError(line, std::string("missing field '") + key + "'");
  try {
    return it->get<T>();
  } catch (const nlohmann::json::exception&) {
    throw RecordError(line, std::string("field '") + key + "' has the wrong type");
  }
}

}  // namespace

RecordKey KeyOf(const RunRecord& record) {
  return {record.task_id, record.model_id, record.size_index, record.repetition};
}

nlohmann::json RecordToJson(const RunRecord& r) {
  nlohmann::json j = {{"run_id", r.run_id},
                      {"timestamp_utc", r.timestamp_utc},
                      {"task_id", r.task_id},
                      {"task_version", r.task_version},
                      {"prompt_template_version", r.prompt_template_version},
                      {"model_id", r.model_id},
                      {"size_index", r.size_index},
                      {"size_params", r.size_params},
                      {"repetition", r.repetition},
                      {"seed", r.seed},
                      {"prompt", r.prompt},
                      {"response", r.response},
                      {"scores", tasks::ScoreSetToJson(r.scores)},
                      {"duration_ms", r.duration_ms},
                      {"meta", r.meta}};
  if (r.error) j["error"] = *r.error;
  return j;
}

RunRecord RecordFromJson(const nlohmann::json& j, std::size_t line) {
  if (!j.is_object()) throw RecordError(line, "record is not a JSON object");
  RunRecord r;
  r.run_id = Get<std::string>(j, "run_id", line);
  r.timestamp_utc = Get<std::string>(j, "timestamp_utc", line);
  r.task_id = Get<std::string>(j, "task_id", line);
  r.task_version = Get<std::string>(j, "task_version", line);
  r.prompt_template_version = Get<std::string>(j, "prompt_template_version", line);
  r.model_id = Get<std::string>(j, "model_id", line);
  r.size_index = Get<std::size_t>(j, "size_index", line);
  r.size_params = Get<nlohmann::json>(j, "size_params", line);
  r.repetition = Get<std::uint32_t>(j, "repetition", line);
  r.seed = Get<std::uint64_t>(j, "seed", line);
  r.prompt = Get<std::string>(j, "prompt", line);
  r.response = Get<std::string>(j, "response", line);
  try {
    r.scores = tasks::ScoreSetFromJson(Get<nlohmann::json>(j, "scores", line));
  } catch (const RecordError&) {
    throw;
  } catch (const Error& e) {
    throw RecordError(line, e.what());
  }
  if (r.scores.empty()) throw RecordError(line, "scores must not be empty");
  r.duration_ms = Get<std::int64_t>(j, "duration_ms", line);
  if (j.contains("meta")) r.meta = j["meta"];
  if (j.contains("error")) r.error = Get<std::string>(j, "error", line);
  return r;
}

std::string RecordToLine(const RunRecord& record) {
  return RecordToJson(record).dump(-1, ' ', false, nlohmann::json::error_handler_t::replace);
}

RecordFile ReadRecords(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read " + path.string());
  RecordFile file;
  std::string text;
  std::size_t line_number = 0;
  while (std::getline(in, text)) {
    ++line_number;
    if (text.empty()) continue;
    try {
      nlohmann::json j = nlohmann::json::parse(text);
      file.records.push_back(RecordFromJson(j, line_number));
      file.lines.push_back(line_number);
    } catch (const nlohmann::json::parse_error&) {
      file.errors.emplace_back(line_number, "not valid JSON");
    } catch (const RecordError& e) {
      file.errors.push_back(e);
    }
  }
  return file;
}

void WriteRecords(const std::filesystem::path& path, const std::vector<RunRecord>& records) {
  std::error_code ec;
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path(), ec);
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write " + path.string());
  for (const RunRecord& r : records) out << RecordToLine(r) << '\n';
  if (!out.flush()) throw IoError("cannot write " + path.string());
}

}  // namespace kgbench::harness
