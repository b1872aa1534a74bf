#include "kgbench/connectors/connector.hpp"

#include <set>

#include "kgbench/connectors/http_chat.hpp"
#include "kgbench/connectors/mock.hpp"
#include "kgbench/connectors/replay_cache.hpp"
#include "kgbench/error.hpp"
#include "kgbench/json_number.hpp"

namespace kgbench::connectors {

std::string_view ToString(Role role) {
  switch (role) {
    case Role::kSystem:
      return "system";
    case Role::kUser:
      return "user";
    case Role::kAssistant:
      return "assistant";
  }
  return "user";
}

Role RoleFromString(std::string_view name) {
  if (name == "system") return Role::kSystem;
  if (name == "user") return Role::kUser;
  if (name == "assistant") return Role::kAssistant;
  throw Error("unknown role '" + std::string(name) + "'");
}

void ValidateConversation(std::span<const Exchange> conversation) {
  for (const Exchange& e : conversation) {
    if (e.role == Role::kSystem) continue;
    if (e.role != Role::kUser) throw Error("the first non-system turn must be a user turn");
    return;
  }
  throw Error("conversation has no user turn");
}

namespace {

constexpr std::pair<ConnectorKind, std::string_view> kKindNames[] = {
    {ConnectorKind::kHttpChat, "http-chat"}, {ConnectorKind::kOracle, "oracle"},
    {ConnectorKind::kScripted, "scripted"},  {ConnectorKind::kConstant, "constant"},
    {ConnectorKind::kReplay, "replay"}};

template <typename T>
T Field(const nlohmann::json& j, const std::string& key, const std::string& path) {
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception&) {
    throw ConfigError(path + "." + key, "has the wrong type");
  }
}

std::uint32_t Count(const nlohmann::json& j, const std::string& key, const std::string& path,
                    bool allow_zero) {
  const nlohmann::json& v = j.at(key);
  if (!IsNonNegativeInteger(v) || v.get<std::uint64_t>() > UINT32_MAX ||
      (!allow_zero && v.get<std::uint64_t>() == 0)) {
    throw ConfigError(path + "." + key,
                      allow_zero ? "must be a non-negative integer" : "must be a positive integer");
  }
  return v.get<std::uint32_t>();
}

}  // namespace

std::string_view ToString(ConnectorKind kind) {
  for (const auto& [k, name] : kKindNames) {
    if (k == kind) return name;
  }
  return "constant";
}

std::optional<ConnectorKind> ConnectorKindFromString(std::string_view name) {
  for (const auto& [k, n] : kKindNames) {
    if (n == name) return k;
  }
  return std::nullopt;
}

ConnectorSpec ConnectorSpecFromJson(const nlohmann::json& j, const std::string& path) {
  if (!j.is_object()) throw ConfigError(path, "must be an object");
  static const std::set<std::string> kKeys = {
      "model_id",    "kind",       "model_name",       "endpoint",          "api_key_env",
      "temperature", "max_tokens", "request_timeout_s", "max_retries",       "system_prompt",
      "text",        "script",     "cache_dir",         "serialize_requests"};
  for (const auto& [key, value] : j.items()) {
    if (!kKeys.contains(key)) throw ConfigError(path + "." + key, "unknown key '" + key + "'");
  }
  ConnectorSpec spec;
  if (!j.contains("model_id")) throw ConfigError(path + ".model_id", "missing");
  spec.model_id = Field<std::string>(j, "model_id", path);
  if (spec.model_id.empty()) throw ConfigError(path + ".model_id", "must not be empty");
  if (!j.contains("kind")) throw ConfigError(path + ".kind", "missing");
  std::string kind = Field<std::string>(j, "kind", path);
  auto parsed = ConnectorKindFromString(kind);
  if (!parsed) throw ConfigError(path + ".kind", "unknown connector kind '" + kind + "'");
  spec.kind = *parsed;
  spec.model_name = j.contains("model_name") ? Field<std::string>(j, "model_name", path) : spec.model_id;

  const bool http = spec.kind == ConnectorKind::kHttpChat;
  for (const char* key : {"endpoint", "api_key_env", "temperature", "max_tokens", "request_timeout_s",
                          "max_retries", "system_prompt", "serialize_requests"}) {
    if (!http && j.contains(key)) {
      throw ConfigError(path + "." + key, "only applies to http-chat connectors");
    }
  }
  if (http) {
    for (const char* key : {"endpoint", "api_key_env"}) {
      if (!j.contains(key)) throw ConfigError(path + "." + key, "required for http-chat");
    }
    spec.endpoint = Field<std::string>(j, "endpoint", path);
    if (spec.endpoint.rfind("http://", 0) != 0 && spec.endpoint.rfind("https://", 0) != 0) {
      throw ConfigError(path + ".endpoint", "must be an http:// or https:// URL");
    }
    spec.api_key_env = Field<std::string>(j, "api_key_env", path);
    if (spec.api_key_env.empty()) throw ConfigError(path + ".api_key_env", "must not be empty");
    if (j.contains("temperature")) {
      if (!j["temperature"].is_number() || j["temperature"].get<double>() < 0.0) {
        throw ConfigError(path + ".temperature", "must be a number >= 0");
      }
      spec.temperature = j["temperature"].get<double>();
    }
    if (j.contains("max_tokens")) spec.max_tokens = Count(j, "max_tokens", path, false);
    if (j.contains("request_timeout_s")) {
      spec.request_timeout_s = Count(j, "request_timeout_s", path, false);
    }
    if (j.contains("max_retries")) spec.max_retries = Count(j, "max_retries", path, true);
    if (j.contains("system_prompt")) spec.system_prompt = Field<std::string>(j, "system_prompt", path);
    if (j.contains("serialize_requests")) {
      spec.serialize_requests = Field<bool>(j, "serialize_requests", path);
    }
  }

  if (j.contains("text") && spec.kind != ConnectorKind::kConstant) {
    throw ConfigError(path + ".text", "only applies to constant connectors");
  }
  if (spec.kind == ConnectorKind::kConstant) {
    if (!j.contains("text")) throw ConfigError(path + ".text", "required for constant connectors");
    spec.text = Field<std::string>(j, "text", path);
  }
  if (j.contains("script") && spec.kind != ConnectorKind::kScripted) {
    throw ConfigError(path + ".script", "only applies to scripted connectors");
  }
  if (spec.kind == ConnectorKind::kScripted) {
    if (!j.contains("script")) throw ConfigError(path + ".script", "required for scripted connectors");
    spec.script = j["script"];
    try {
      MakeScriptedConnector(spec);
    } catch (const ConfigError& e) {
      throw ConfigError(path + ".script" + e.field_path(), e.what());
    }
  }
  if (j.contains("cache_dir")) {
    if (spec.kind != ConnectorKind::kReplay) {
      throw ConfigError(path + ".cache_dir", "only applies to replay connectors");
    }
    spec.cache_dir = Field<std::string>(j, "cache_dir", path);
  }
  return spec;
}

nlohmann::json ConnectorSpecToJson(const ConnectorSpec& spec) {
  nlohmann::json j = {{"model_id", spec.model_id}, {"kind", ToString(spec.kind)}};
  if (spec.model_name != spec.model_id) j["model_name"] = spec.model_name;
  switch (spec.kind) {
    case ConnectorKind::kHttpChat:
      j["endpoint"] = spec.endpoint;
      j["api_key_env"] = spec.api_key_env;
      j["temperature"] = spec.temperature;
      j["max_tokens"] = spec.max_tokens;
      j["request_timeout_s"] = spec.request_timeout_s;
      j["max_retries"] = spec.max_retries;
      if (!spec.system_prompt.empty()) j["system_prompt"] = spec.system_prompt;
      j["serialize_requests"] = spec.serialize_requests;
      break;
    case ConnectorKind::kConstant:
      j["text"] = spec.text;
      break;
    case ConnectorKind::kScripted:
      j["script"] = spec.script;
      break;
    case ConnectorKind::kReplay:
      if (!spec.cache_dir.empty()) j["cache_dir"] = spec.cache_dir;
      break;
    case ConnectorKind::kOracle:
      break;
  }
  return j;
}

std::unique_ptr<Connector> MakeConnector(const ConnectorSpec& spec, const ConnectorOptions& options) {
  switch (spec.kind) {
    case ConnectorKind::kHttpChat:
      return MakeHttpChatConnector(spec, options.sleeper);
    case ConnectorKind::kOracle:
      return MakeOracleConnector(spec);
    case ConnectorKind::kScripted:
      return MakeScriptedConnector(spec);
    case ConnectorKind::kConstant:
      return MakeConstantConnector(spec);
    case ConnectorKind::kReplay: {
      std::filesystem::path dir = spec.cache_dir.empty() ? options.cache_dir : std::filesystem::path(spec.cache_dir);
      if (dir.empty()) throw ConfigError("cache_dir", "replay connector '" + spec.model_id + "' needs a cache");
      return MakeReplayingConnector(nullptr, std::make_shared<ReplayCache>(dir), spec);
    }
  }
  throw Error("unknown connector kind");
}

}  // namespace kgbench::connectors
