#include "kgbench/tasks/fact_extract.hpp"

#include <cstdlib>
#include <fstream>
#include <mutex>
#include <set>
#include <sstream>

#include "kgbench/error.hpp"
#include "kgbench/rdf/scores.hpp"
#include "kgbench/rdf/turtle.hpp"
#include "kgbench/tasks/prompts.hpp"

namespace kgbench::tasks::fact_extract {
namespace {

std::string ReadFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw AssetError("missing asset file " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

std::string MetaString(const nlohmann::json& meta, const char* key, const std::filesystem::path& path) {
  auto it = meta.find(key);
  if (it == meta.end() || !it->is_string()) {
    throw AssetError(path.string() + ": field '" + key + "' must be a string");
  }
  return it->get<std::string>();
}

class FactExtractCase : public TaskCase {
 public:
  explicit FactExtractCase(std::shared_ptr<const FactSheetAsset> asset)
      : asset_(std::move(asset)), prompt_(BuildPrompt(*asset_)) {}

  std::string Prompt() const override { return prompt_; }
  std::string OracleAnswer() const override { return asset_->reference_text; }
  ScoreSet Evaluate(std::string_view response) const override {
    return fact_extract::Evaluate(response, *asset_).ToScoreSet();
  }
  nlohmann::json SizeParams() const override {
    return {{"size", 1}, {"asset_id", asset_->asset_id}, {"asset_version", asset_->version}};
  }

 private:
  std::shared_ptr<const FactSheetAsset> asset_;
  std::string prompt_;
};

class FactExtractTask : public Task {
 public:
  FactExtractTask() : state_(std::make_shared<LazyAsset>()) {}
  explicit FactExtractTask(FactSheetAsset asset) : FactExtractTask() {
    std::call_once(state_->once, [&] {
      state_->asset = std::make_shared<const FactSheetAsset>(std::move(asset));
    });
  }

  std::string_view id() const override { return kTaskId; }
  std::string_view version() const override { return kTaskVersion; }
  std::string_view prompt_template_version() const override { return kPromptTemplateId; }
  std::string_view description() const override {
    return "convert a plaintext factsheet into Turtle (F1 vs. curated reference)";
  }

  std::vector<nlohmann::json> DefaultSizes() const override { return {{{"size", 1}}}; }

  void ValidateSize(const nlohmann::json& size, const std::string& path) const override {
    if (!size.is_object()) throw ConfigError(path, "size must be an object");
    for (const auto& [key, value] : size.items()) {
      if (key != "size") throw ConfigError(path + "." + key, "unknown key '" + key + "'");
      if (value != 1) throw ConfigError(path + ".size", "this task has the single size 1");
    }
  }

  std::unique_ptr<TaskCase> MakeCase(const nlohmann::json&, std::uint64_t) const override {
    return std::make_unique<FactExtractCase>(Asset());
  }

  std::unique_ptr<Task> Configure(const nlohmann::json& options,
                                  const std::string& path) const override {
    if (!options.is_object()) throw ConfigError(path, "options must be an object");
    std::unique_ptr<FactExtractTask> task;
    for (const auto& [key, value] : options.items()) {
      if (key != "asset_dir") throw ConfigError(path + "." + key, "unknown option '" + key + "'");
      if (!value.is_string()) throw ConfigError(path + ".asset_dir", "must be a string");
      try {
        task = std::make_unique<FactExtractTask>(LoadAsset(value.get<std::string>()));
      } catch (const AssetError& e) {
        throw ConfigError(path + ".asset_dir", e.what());
      }
    }
    if (!task) task = std::make_unique<FactExtractTask>(*this);
    return task;
  }

 private:
  std::shared_ptr<const FactSheetAsset> Asset() const {
    // Loaded on first use so listing tasks works without the asset files.
    std::call_once(state_->once, [this] {
      state_->asset = std::make_shared<const FactSheetAsset>(LoadAsset(DefaultAssetDir()));
    });
    return state_->asset;
  }

  struct LazyAsset {
    std::once_flag once;
    std::shared_ptr<const FactSheetAsset> asset;
  };
  std::shared_ptr<LazyAsset> state_;
};

}  // namespace

FactSheetAsset LoadAsset(const std::filesystem::path& directory) {
  FactSheetAsset asset;
  asset.plaintext = ReadFile(directory / "plaintext.txt");
  asset.instructions = ReadFile(directory / "instructions.txt");
  asset.reference_text = ReadFile(directory / "reference.ttl");

  std::filesystem::path meta_path = directory / "meta.json";
  nlohmann::json meta;
  try {
    meta = nlohmann::json::parse(ReadFile(meta_path));
  } catch (const nlohmann::json::parse_error& e) {
    throw AssetError(meta_path.string() + ": " + e.what());
  }
  asset.asset_id = MetaString(meta, "asset_id", meta_path);
  asset.version = MetaString(meta, "version", meta_path);
  asset.description = MetaString(meta, "description", meta_path);

  try {
    asset.reference = rdf::ParseTurtle(asset.reference_text);
  } catch (const ParseError& e) {
    throw AssetError((directory / "reference.ttl").string() + ":" + e.what());
  }
  if (asset.reference.empty()) throw AssetError("reference.ttl contains no triples");

  std::set<std::string> predicates;
  for (const rdf::Triple& t : asset.reference) predicates.insert(std::get<rdf::Iri>(t.predicate).value);
  for (const std::string& p : predicates) {
    if (asset.instructions.find(p) == std::string::npos) {
      throw AssetError("instructions.txt does not mention predicate <" + p + ">");
    }
  }
  return asset;
}

std::filesystem::path DefaultAssetDir() {
  if (const char* env = std::getenv("KGBENCH_ASSETS"); env && *env) {
    return std::filesystem::path(env) / "factsheet" / "printer";
  }
  std::filesystem::path source = std::filesystem::path(KGBENCH_DEFAULT_ASSET_DIR) / "factsheet" / "printer";
  if (std::filesystem::exists(source / "meta.json")) return source;
  return std::filesystem::path(KGBENCH_INSTALLED_ASSET_DIR) / "factsheet" / "printer";
}

std::string BuildPrompt(const FactSheetAsset& asset) {
  return RenderTemplate(GetPromptTemplate(kPromptTemplateId).text,
                        {{"instructions", asset.instructions}, {"plaintext", asset.plaintext}});
}

ScoreSet Scores::ToScoreSet() const {
  return {{"f1", f1},
          {"precision", precision},
          {"recall", recall},
          {"answer_parsable", answer_parsable},
          {"failed_statements", static_cast<std::int64_t>(failed_statements)}};
}

Scores Evaluate(std::string_view response, const FactSheetAsset& asset) {
  std::string candidate = rdf::ExtractTurtleCandidate(response);
  rdf::SalvageResult salvage = rdf::SalvageParseTurtle(candidate);
  rdf::DiffScores diff = rdf::GraphScores(salvage.graph, asset.reference);
  Scores scores;
  scores.f1 = diff.f1;
  scores.precision = diff.precision;
  scores.recall = diff.recall;
  scores.failed_statements = salvage.failed_statements;
  try {
    rdf::ParseTurtle(candidate);
    scores.answer_parsable = true;
  } catch (const ParseError&) {
  }
  return scores;
}

std::unique_ptr<Task> MakeTask() { return std::make_unique<FactExtractTask>(); }

std::unique_ptr<Task> MakeTask(FactSheetAsset asset) {
  return std::make_unique<FactExtractTask>(std::move(asset));
}

}  // namespace kgbench::tasks::fact_extract
