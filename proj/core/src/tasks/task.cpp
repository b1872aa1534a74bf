#include "kgbench/tasks/task.hpp"

#include "kgbench/error.hpp"

namespace kgbench::tasks {

double ScoreAsNumber(const ScoreValue& value) {
  return std::visit(
      [](auto v) -> double {
        if constexpr (std::is_same_v<decltype(v), bool>) {
          return v ? 1.0 : 0.0;
        } else {
          return static_cast<double>(v);
        }
      },
      value);
}

nlohmann::json ScoreSetToJson(const ScoreSet& scores) {
  nlohmann::json j = nlohmann::json::object();
  for (const auto& [name, value] : scores) {
    std::visit([&](auto v) { j[name] = v; }, value);
  }
  return j;
}

ScoreSet ScoreSetFromJson(const nlohmann::json& j) {
  if (!j.is_object()) throw Error("scores must be a JSON object");
  ScoreSet scores;
  for (const auto& [name, value] : j.items()) {
    if (value.is_boolean()) {
      scores[name] = value.get<bool>();
    } else if (value.is_number_integer()) {
      scores[name] = value.get<std::int64_t>();
    } else if (value.is_number()) {
      scores[name] = value.get<double>();
    } else {
      throw Error("score '" + name + "' is not a number or boolean");
    }
  }
  return scores;
}

DialogResult TaskCase::Converse(const GenerateFn& generate) const {
  DialogResult result;
  result.conversation.push_back({connectors::Role::kUser, Prompt()});
  result.response = generate(result.conversation);
  result.conversation.push_back({connectors::Role::kAssistant, result.response});
  result.scores = Evaluate(result.response);
  return result;
}

}  // namespace kgbench::tasks
