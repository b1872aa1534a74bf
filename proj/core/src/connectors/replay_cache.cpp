#include "kgbench/connectors/replay_cache.hpp"

#include <chrono>
#include <fstream>
#include <sstream>

#include "kgbench/error.hpp"
#include "kgbench/hash.hpp"
#include "kgbench/time.hpp"

namespace kgbench::connectors {
namespace {

// Readable but collision-free directory name for a model id.
std::string ModelDirectory(std::string_view model_id) {
  std::string dir;
  for (char c : model_id) {
    bool safe = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') ||
                c == '.' || c == '-' || c == '_';
    dir += safe ? c : '_';
  }
  return dir + "-" + Sha256Hex(model_id).substr(0, 8);
}

class ReplayingConnector : public Connector {
 public:
  ReplayingConnector(std::unique_ptr<Connector> inner, std::shared_ptr<ReplayCache> cache,
                     ConnectorSpec spec)
      : inner_(std::move(inner)), cache_(std::move(cache)), spec_(std::move(spec)) {}

  const ConnectorSpec& spec() const override { return spec_; }

  Generation GenerateText(const Conversation& conversation,
                          const GenerationContext& context) override {
    if (auto entry = cache_->Lookup(spec_.model_id, conversation)) {
      Generation g;
      g.text = std::move(entry->response);
      g.from_cache = true;
      return g;
    }
    if (!inner_) {
      throw CacheError("no cached response for model '" + spec_.model_id + "' and prompt " +
                       ConversationHash(conversation));
    }
    Generation g = inner_->GenerateText(conversation, context);
    cache_->Record(spec_.model_id, conversation, g.text);
    return g;
  }

 private:
  std::unique_ptr<Connector> inner_;
  std::shared_ptr<ReplayCache> cache_;
  ConnectorSpec spec_;
};

}  // namespace

nlohmann::json ConversationToJson(const Conversation& conversation) {
  nlohmann::json j = nlohmann::json::array();
  for (const Exchange& e : conversation) {
    j.push_back({{"role", ToString(e.role)}, {"content", e.content}});
  }
  return j;
}

Conversation ConversationFromJson(const nlohmann::json& j) {
  Conversation conversation;
  for (const auto& item : j) {
    conversation.push_back({RoleFromString(item.at("role").get<std::string>()),
                            item.at("content").get<std::string>()});
  }
  return conversation;
}

std::string ConversationHash(const Conversation& conversation) {
  return Sha256Hex(ConversationToJson(conversation).dump());
}

ReplayCache::ReplayCache(std::filesystem::path root) : root_(std::move(root)) {}

std::filesystem::path ReplayCache::EntryPath(std::string_view model_id,
                                             std::string_view prompt_hash) const {
  return root_ / ModelDirectory(model_id) / (std::string(prompt_hash) + ".json");
}

std::optional<CacheEntry> ReplayCache::Lookup(std::string_view model_id,
                                              const Conversation& conversation) const {
  std::string hash = ConversationHash(conversation);
  std::ifstream in(EntryPath(model_id, hash), std::ios::binary);
  if (!in) return std::nullopt;
  try {
    nlohmann::json j = nlohmann::json::parse(in);
    CacheEntry entry{j.at("model_id"), j.at("prompt_hash"), ConversationFromJson(j.at("conversation")),
                     j.at("response"), j.value("recorded_at", "")};
    if (entry.model_id != model_id || entry.conversation != conversation) return std::nullopt;
    return entry;
  } catch (const std::exception& e) {
    throw CacheError("corrupt cache entry " + EntryPath(model_id, hash).string() + ": " + e.what());
  }
}

CacheEntry ReplayCache::Record(std::string_view model_id, const Conversation& conversation,
                               std::string_view response) {
  CacheEntry entry{std::string(model_id), ConversationHash(conversation), conversation,
                   std::string(response), UtcTimestamp()};
  std::filesystem::path path = EntryPath(model_id, entry.prompt_hash);
  std::error_code ec;
  std::filesystem::create_directories(path.parent_path(), ec);
  if (ec) throw CacheError("cannot create " + path.parent_path().string() + ": " + ec.message());
  nlohmann::json j = {{"model_id", entry.model_id},
                      {"prompt_hash", entry.prompt_hash},
                      {"conversation", ConversationToJson(conversation)},
                      {"response", entry.response},
                      {"recorded_at", entry.recorded_at}};
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    out << j.dump(2) << '\n';
    if (!out) throw CacheError("cannot write " + tmp.string());
  }
  std::filesystem::rename(tmp, path, ec);
  if (ec) throw CacheError("cannot write " + path.string() + ": " + ec.message());
  return entry;
}

std::unique_ptr<Connector> MakeReplayingConnector(std::unique_ptr<Connector> inner,
                                                  std::shared_ptr<ReplayCache> cache,
                                                  ConnectorSpec spec) {
  return std::make_unique<ReplayingConnector>(std::move(inner), std::move(cache), std::move(spec));
}

}  // namespace kgbench::connectors
