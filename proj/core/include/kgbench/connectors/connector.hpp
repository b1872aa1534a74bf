#pragma once

#include <chrono>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "kgbench/connectors/exchange.hpp"

namespace kgbench::tasks {
class TaskCase;
}

namespace kgbench::connectors {

enum class ConnectorKind { kHttpChat, kOracle, kScripted, kConstant, kReplay };

std::string_view ToString(ConnectorKind kind);
std::optional<ConnectorKind> ConnectorKindFromString(std::string_view name);

struct ConnectorSpec {
  std::string model_id;
  ConnectorKind kind = ConnectorKind::kConstant;
  std::string model_name;  // defaults to model_id
  // http-chat
  std::string endpoint;
  std::string api_key_env;
  double temperature = 0.0;
  std::uint32_t max_tokens = 2048;
  std::uint32_t request_timeout_s = 120;
  std::uint32_t max_retries = 3;
  std::string system_prompt;
  bool serialize_requests = true;
  // constant
  std::string text;
  // scripted: an array of rules, see MakeScriptedConnector
  nlohmann::json script = nlohmann::json::array();
  // replay: directory of the cache to answer from
  std::string cache_dir;

  friend bool operator==(const ConnectorSpec&, const ConnectorSpec&) = default;
};

// Strict: unknown keys and kind-inappropriate fields raise ConfigError with
// a field path under `path`.
ConnectorSpec ConnectorSpecFromJson(const nlohmann::json& j, const std::string& path = "model");
nlohmann::json ConnectorSpecToJson(const ConnectorSpec& spec);

struct Generation {
  std::string text;
  std::chrono::milliseconds latency{0};
  std::uint32_t retries = 0;
  nlohmann::json usage;  // as reported by the endpoint, null otherwise
  bool from_cache = false;
};

// Out-of-band information the harness hands to connectors. Only test
// doubles look at it.
struct GenerationContext {
  const tasks::TaskCase* task_case = nullptr;
  std::string_view task_id;
};

class Connector {
 public:
  virtual ~Connector() = default;

  virtual const ConnectorSpec& spec() const = 0;
  // Throws ConnectorError subclasses. The conversation must satisfy
  // ValidateConversation.
  virtual Generation GenerateText(const Conversation& conversation,
                                  const GenerationContext& context = {}) = 0;
};

using Sleeper = std::function<void(std::chrono::milliseconds)>;

struct ConnectorOptions {
  // Cache for the replay kind when the spec gives no cache_dir.
  std::filesystem::path cache_dir;
  // Used between retries; std::this_thread::sleep_for when empty.
  Sleeper sleeper;
};

std::unique_ptr<Connector> MakeConnector(const ConnectorSpec& spec,
                                         const ConnectorOptions& options = {});

}  // namespace kgbench::connectors
