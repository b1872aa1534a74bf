#include "kgbench/connectors/http_chat.hpp"

#include <cstdlib>
#include <mutex>

#include <httplib.h>

#include "kgbench/connectors/retry.hpp"
#include "kgbench/error.hpp"

namespace kgbench::connectors {
namespace {

struct Endpoint {
  std::string origin;  // scheme://host[:port]
  std::string path;
};

Endpoint SplitEndpoint(const std::string& url) {
  std::size_t scheme_end = url.find("://");
  std::size_t path_start = url.find('/', scheme_end == std::string::npos ? 0 : scheme_end + 3);
  if (path_start == std::string::npos) return {url, "/"};
  return {url.substr(0, path_start), url.substr(path_start)};
}

std::string Excerpt(const std::string& body) {
  return body.size() <= 200 ? body : body.substr(0, 200) + "...";
}

class HttpChatConnector : public Connector {
 public:
  HttpChatConnector(ConnectorSpec spec, Sleeper sleeper)
      : spec_(std::move(spec)), sleeper_(std::move(sleeper)), endpoint_(SplitEndpoint(spec_.endpoint)) {}

  const ConnectorSpec& spec() const override { return spec_; }

  Generation GenerateText(const Conversation& conversation, const GenerationContext&) override {
    try {
      ValidateConversation(conversation);
    } catch (const Error& e) {
      throw ProtocolError(e.what());
    }
    const char* key = std::getenv(spec_.api_key_env.c_str());
    if (!key || !*key) {
      throw AuthError("environment variable " + spec_.api_key_env + " is not set");
    }
    std::unique_lock<std::mutex> lock(mutex_, std::defer_lock);
    if (spec_.serialize_requests) lock.lock();

    std::string body = BuildChatRequest(spec_, conversation).dump();
    Generation g;
    auto start = std::chrono::steady_clock::now();
    g.text = CallWithRetries([&] { return Attempt(body, key, g.usage); }, spec_.max_retries,
                             sleeper_, g.retries);
    g.latency = std::chrono::duration_cast<std::chrono::milliseconds>(
        std::chrono::steady_clock::now() - start);
    return g;
  }

 private:
  std::string Attempt(const std::string& body, const char* key, nlohmann::json& usage) {
    httplib::Client client(endpoint_.origin);
    auto timeout = std::chrono::seconds(spec_.request_timeout_s);
    client.set_connection_timeout(timeout);
    client.set_read_timeout(timeout);
    client.set_write_timeout(timeout);
    client.set_bearer_token_auth(key);

    httplib::Result result = client.Post(endpoint_.path, body, "application/json");
    if (!result) {
      httplib::Error error = result.error();
      std::string what = "request to " + spec_.endpoint + " failed: " + httplib::to_string(error);
      if (error == httplib::Error::ConnectionTimeout || error == httplib::Error::Read ||
          error == httplib::Error::Write) {
        throw TimeoutError(what);
      }
      throw ConnectorError(what);
    }
    const int status = result->status;
    if (status == 401 || status == 403) {
      throw AuthError("endpoint rejected the key (" + std::to_string(status) + ")");
    }
    if (status == 429) throw RateLimitError("rate limited: " + Excerpt(result->body));
    if (status == 408) throw TimeoutError("endpoint timed out (408)");
    if (status >= 500) throw UnavailableError("endpoint returned " + std::to_string(status));
    if (status != 200) {
      throw ProtocolError("unexpected status " + std::to_string(status) + ": " + Excerpt(result->body));
    }
    nlohmann::json reply = nlohmann::json::parse(result->body, nullptr, false);
    if (reply.is_discarded()) throw ProtocolError("reply is not JSON: " + Excerpt(result->body));
    return ParseChatResponse(reply, &usage);
  }

  ConnectorSpec spec_;
  Sleeper sleeper_;
  Endpoint endpoint_;
  std::mutex mutex_;
};

}  // namespace

nlohmann::json BuildChatRequest(const ConnectorSpec& spec, const Conversation& conversation) {
  nlohmann::json messages = nlohmann::json::array();
  bool has_system = std::any_of(conversation.begin(), conversation.end(),
                                [](const Exchange& e) { return e.role == Role::kSystem; });
  if (!has_system && !spec.system_prompt.empty()) {
    messages.push_back({{"role", "system"}, {"content", spec.system_prompt}});
  }
  for (const Exchange& e : conversation) {
    messages.push_back({{"role", ToString(e.role)}, {"content", e.content}});
  }
  return {{"model", spec.model_name},
          {"messages", messages},
          {"temperature", spec.temperature},
          {"max_tokens", spec.max_tokens}};
}

std::string ParseChatResponse(const nlohmann::json& body, nlohmann::json* usage) {
  const nlohmann::json* content = nullptr;
  if (body.is_object() && body.contains("choices") && body["choices"].is_array() &&
      !body["choices"].empty()) {
    const nlohmann::json& choice = body["choices"][0];
    if (choice.is_object() && choice.contains("message") && choice["message"].is_object() &&
        choice["message"].contains("content")) {
      content = &choice["message"]["content"];
    }
  }
  if (!content || !content->is_string()) {
    throw ProtocolError("reply lacks choices[0].message.content");
  }
  if (usage && body.contains("usage")) *usage = body["usage"];
  return content->get<std::string>();
}

std::unique_ptr<Connector> MakeHttpChatConnector(ConnectorSpec spec, Sleeper sleeper) {
  return std::make_unique<HttpChatConnector>(std::move(spec), std::move(sleeper));
}

}  // namespace kgbench::connectors
