#pragma once

#include <filesystem>
#include <memory>
#include <optional>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "kgbench/connectors/connector.hpp"

namespace kgbench::connectors {

struct CacheEntry {
  std::string model_id;
  std::string prompt_hash;
  Conversation conversation;
  std::string response;
  std::string recorded_at;  // ISO-8601 UTC
};

nlohmann::json ConversationToJson(const Conversation& conversation);
Conversation ConversationFromJson(const nlohmann::json& j);

// SHA-256 of the compact JSON rendering of the conversation.
std::string ConversationHash(const Conversation& conversation);

// One JSON file per entry under <root>/<model dir>/<prompt_hash>.json.
class ReplayCache {
 public:
  explicit ReplayCache(std::filesystem::path root);

  const std::filesystem::path& root() const { return root_; }

  std::optional<CacheEntry> Lookup(std::string_view model_id, const Conversation& conversation) const;
  // Throws CacheError when the store cannot be written.
  CacheEntry Record(std::string_view model_id, const Conversation& conversation,
                    std::string_view response);

  std::filesystem::path EntryPath(std::string_view model_id, std::string_view prompt_hash) const;

 private:
  std::filesystem::path root_;
};

// Answers from the cache when possible and records what `inner` produces
// otherwise. With a null `inner`, misses throw CacheError.
std::unique_ptr<Connector> MakeReplayingConnector(std::unique_ptr<Connector> inner,
                                                  std::shared_ptr<ReplayCache> cache,
                                                  ConnectorSpec spec);

}  // namespace kgbench::connectors
