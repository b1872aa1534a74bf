#include "kgbench/connectors/mock.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <iterator>
#include <vector>

#include "kgbench/error.hpp"
#include "kgbench/json_number.hpp"
#include "kgbench/rdf/turtle.hpp"
#include "kgbench/tasks/synthetic_gen.hpp"
#include "kgbench/tasks/task.hpp"

namespace kgbench::connectors {
namespace {

class MockConnector : public Connector {
 public:
  explicit MockConnector(ConnectorSpec spec) : spec_(std::move(spec)) {}

  const ConnectorSpec& spec() const override { return spec_; }

  Generation GenerateText(const Conversation& conversation,
                          const GenerationContext& context) override {
    try {
      ValidateConversation(conversation);
    } catch (const Error& e) {
      throw ProtocolError(e.what());
    }
    auto start = std::chrono::steady_clock::now();
    Generation g;
    g.text = Answer(conversation, context);
    g.latency = std::chrono::duration_cast<std::chrono::milliseconds>(
        std::chrono::steady_clock::now() - start);
    return g;
  }

 protected:
  virtual std::string Answer(const Conversation& conversation,
                             const GenerationContext& context) const = 0;

  const tasks::TaskCase& RequireCase(const GenerationContext& context) const {
    if (!context.task_case) {
      throw ConnectorError("connector '" + spec_.model_id + "' needs the task case");
    }
    return *context.task_case;
  }

  ConnectorSpec spec_;
};

class OracleConnector : public MockConnector {
 public:
  using MockConnector::MockConnector;

 private:
  std::string Answer(const Conversation&, const GenerationContext& context) const override {
    return RequireCase(context).OracleAnswer();
  }
};

class ConstantConnector : public MockConnector {
 public:
  using MockConnector::MockConnector;

 private:
  std::string Answer(const Conversation&, const GenerationContext&) const override {
    return spec_.text;
  }
};

struct Rule {
  enum class Type { kResponses, kFoaf, kOracleDrop };
  Type type = Type::kResponses;
  std::string task;
  std::vector<std::string> responses;
  double persons_factor = 1.0;
  double links_factor = 1.0;
  std::size_t drop = 0;
};

double Factor(const nlohmann::json& rule, const char* key, const std::string& path) {
  if (!rule.contains(key)) return 1.0;
  const nlohmann::json& v = rule[key];
  if (!v.is_number() || v.get<double>() < 0.0) {
    throw ConfigError(path + "." + key, "must be a number >= 0");
  }
  return v.get<double>();
}

Rule ParseRule(const nlohmann::json& j, const std::string& path) {
  if (!j.is_object()) throw ConfigError(path, "rule must be an object");
  if (!j.contains("type") || !j["type"].is_string()) throw ConfigError(path + ".type", "missing");
  Rule rule;
  std::string type = j["type"];
  std::vector<std::string> allowed = {"type", "task"};
  if (type == "responses") {
    rule.type = Rule::Type::kResponses;
    allowed.push_back("responses");
    const auto it = j.find("responses");
    if (it == j.end() || !it->is_array() || it->empty()) {
      throw ConfigError(path + ".responses", "must be a non-empty array of strings");
    }
    for (const auto& r : *it) {
      if (!r.is_string()) throw ConfigError(path + ".responses", "must be a non-empty array of strings");
      rule.responses.push_back(r);
    }
  } else if (type == "foaf") {
    rule.type = Rule::Type::kFoaf;
    allowed.insert(allowed.end(), {"persons_factor", "links_factor"});
    rule.persons_factor = Factor(j, "persons_factor", path);
    rule.links_factor = Factor(j, "links_factor", path);
  } else if (type == "oracle-drop") {
    rule.type = Rule::Type::kOracleDrop;
    allowed.push_back("drop");
    if (j.contains("drop")) {
      if (!IsNonNegativeInteger(j["drop"])) throw ConfigError(path + ".drop", "must be a non-negative integer");
      rule.drop = j["drop"];
    }
  } else {
    throw ConfigError(path + ".type", "unknown rule type '" + type + "'");
  }
  for (const auto& [key, value] : j.items()) {
    if (std::find(allowed.begin(), allowed.end(), key) == allowed.end()) {
      throw ConfigError(path + "." + key, "unknown key '" + key + "'");
    }
  }
  if (j.contains("task")) {
    if (!j["task"].is_string()) throw ConfigError(path + ".task", "must be a string");
    rule.task = j["task"];
  }
  return rule;
}

std::uint64_t Scaled(std::uint64_t n, double factor) {
  return static_cast<std::uint64_t>(std::ceil(static_cast<double>(n) * factor));
}

class ScriptedConnector : public MockConnector {
 public:
  explicit ScriptedConnector(ConnectorSpec spec) : MockConnector(std::move(spec)) {
    if (!spec_.script.is_array() || spec_.script.empty()) {
      throw ConfigError("", "must be a non-empty array of rules");
    }
    for (std::size_t i = 0; i < spec_.script.size(); ++i) {
      rules_.push_back(ParseRule(spec_.script[i], "[" + std::to_string(i) + "]"));
    }
  }

 private:
  std::string Answer(const Conversation& conversation,
                     const GenerationContext& context) const override {
    for (const Rule& rule : rules_) {
      if (!rule.task.empty() && rule.task != context.task_id) continue;
      switch (rule.type) {
        case Rule::Type::kResponses: {
          auto turns = std::count_if(conversation.begin(), conversation.end(),
                                     [](const Exchange& e) { return e.role == Role::kAssistant; });
          return rule.responses[static_cast<std::size_t>(turns) % rule.responses.size()];
        }
        case Rule::Type::kFoaf:
          return Foaf(rule, RequireCase(context));
        case Rule::Type::kOracleDrop:
          return OracleDrop(rule, RequireCase(context));
      }
    }
    throw ConnectorError("no script rule of '" + spec_.model_id + "' matches task '" +
                         std::string(context.task_id) + "'");
  }

  static std::string Foaf(const Rule& rule, const tasks::TaskCase& task_case) {
    nlohmann::json size = task_case.SizeParams();
    if (!size.contains("persons") || !size.contains("links")) {
      throw ConnectorError("foaf rule needs a case sized by persons and links");
    }
    std::uint64_t persons = Scaled(size["persons"].get<std::uint64_t>(), rule.persons_factor);
    std::uint64_t links = Scaled(size["links"].get<std::uint64_t>(), rule.links_factor);
    links = std::min(links, persons == 0 ? 0 : persons * (persons - 1));
    return rdf::SerializeTurtle(tasks::synthetic_gen::GenerateFoafDataset(persons, links));
  }

  static std::string OracleDrop(const Rule& rule, const tasks::TaskCase& task_case) {
    rdf::Graph oracle = rdf::ParseTurtle(task_case.OracleAnswer());
    std::vector<rdf::Triple> triples(oracle.begin(), oracle.end());
    std::size_t keep = triples.size() - std::min(rule.drop, triples.size());
    rdf::Graph reduced;
    for (const auto& [prefix, iri] : oracle.prefixes()) reduced.SetPrefix(prefix, iri);
    for (std::size_t i = 0; i < keep; ++i) reduced.Insert(triples[i]);
    return rdf::SerializeTurtle(reduced);
  }

  std::vector<Rule> rules_;
};

}  // namespace

std::unique_ptr<Connector> MakeOracleConnector(ConnectorSpec spec) {
  return std::make_unique<OracleConnector>(std::move(spec));
}

std::unique_ptr<Connector> MakeConstantConnector(ConnectorSpec spec) {
  return std::make_unique<ConstantConnector>(std::move(spec));
}

std::unique_ptr<Connector> MakeScriptedConnector(ConnectorSpec spec) {
  return std::make_unique<ScriptedConnector>(std::move(spec));
}

}  // namespace kgbench::connectors
