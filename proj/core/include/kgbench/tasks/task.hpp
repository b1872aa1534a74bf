#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <nlohmann/json.hpp>

#include "kgbench/connectors/exchange.hpp"

namespace kgbench::tasks {

using ScoreValue = std::variant<bool, std::int64_t, double>;
// Task-specific named scores for one evaluation.
using ScoreSet = std::map<std::string, ScoreValue>;

// Booleans count as 0/1.
double ScoreAsNumber(const ScoreValue& value);
nlohmann::json ScoreSetToJson(const ScoreSet& scores);
ScoreSet ScoreSetFromJson(const nlohmann::json& j);

// Sends the conversation so far and returns the assistant's reply.
using GenerateFn = std::function<std::string(const connectors::Conversation&)>;

struct DialogResult {
  connectors::Conversation conversation;
  std::string response;  // the final assistant reply
  ScoreSet scores;
};

// One generated challenge: prompt, reference material and scorer.
class TaskCase {
 public:
  virtual ~TaskCase() = default;

  virtual std::string Prompt() const = 0;
  // The answer a perfect model would give. Oracle connectors receive it
  // out-of-band; it is never parsed back out of the prompt.
  virtual std::string OracleAnswer() const = 0;
  virtual ScoreSet Evaluate(std::string_view response) const = 0;
  virtual nlohmann::json SizeParams() const = 0;

  // Runs the exchange with a model. The default asks once and scores the
  // reply; tasks that want follow-up turns override this and grow the
  // conversation.
  virtual DialogResult Converse(const GenerateFn& generate) const;
};

class Task {
 public:
  virtual ~Task() = default;

  virtual std::string_view id() const = 0;
  virtual std::string_view version() const = 0;
  virtual std::string_view prompt_template_version() const = 0;
  virtual std::string_view description() const = 0;

  virtual std::vector<nlohmann::json> DefaultSizes() const = 0;
  // Throws ConfigError naming the offending field under `path`.
  virtual void ValidateSize(const nlohmann::json& size, const std::string& path) const = 0;
  virtual std::unique_ptr<TaskCase> MakeCase(const nlohmann::json& size,
                                             std::uint64_t seed) const = 0;

  // A copy of this task with per-run options applied. Tasks without options
  // reject any key.
  virtual std::unique_ptr<Task> Configure(const nlohmann::json& options,
                                          const std::string& path) const = 0;
};

}  // namespace kgbench::tasks
