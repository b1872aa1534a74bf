#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

#include "kgbench/connectors/connector.hpp"
#include "kgbench/connectors/mock.hpp"
#include "kgbench/connectors/replay_cache.hpp"
#include "kgbench/connectors/retry.hpp"
#include "kgbench/error.hpp"
#include "kgbench/tasks/synthetic_gen.hpp"
#include "kgbench/tasks/turtle_fix.hpp"

namespace kgbench::connectors {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;

const Conversation kHello = {{Role::kUser, "hello"}};

ConnectorSpec Spec(const json& j) { return ConnectorSpecFromJson(j, "models[0]"); }

std::string ConfigPath(const json& j) {
  try {
    Spec(j);
  } catch (const ConfigError& e) {
    return e.field_path();
  }
  return "<accepted>";
}

TEST(ConnectorSpecTest, ParsesHttpChat) {
  ConnectorSpec spec = Spec({{"model_id", "m"},
                             {"kind", "http-chat"},
                             {"endpoint", "https://api.example.com/v1/chat/completions"},
                             {"api_key_env", "KEY"},
                             {"max_retries", 5}});
  EXPECT_EQ(spec.kind, ConnectorKind::kHttpChat);
  EXPECT_EQ(spec.model_name, "m");
  EXPECT_EQ(spec.max_retries, 5u);
  EXPECT_EQ(spec.temperature, 0.0);
  EXPECT_EQ(ConnectorSpecFromJson(ConnectorSpecToJson(spec)), spec);
}

TEST(ConnectorSpecTest, RejectsBadFieldsWithPaths) {
  EXPECT_EQ(ConfigPath({{"model_id", "m"}, {"kind", "constant"}, {"text", "x"}, {"extra", 1}}),
            "models[0].extra");
  EXPECT_EQ(ConfigPath({{"model_id", "m"}, {"kind", "warp"}}), "models[0].kind");
  EXPECT_EQ(ConfigPath({{"model_id", "m"}, {"kind", "http-chat"}, {"api_key_env", "K"}}),
            "models[0].endpoint");
  EXPECT_EQ(ConfigPath({{"model_id", "m"}, {"kind", "http-chat"}, {"endpoint", "ftp://x"}, {"api_key_env", "K"}}),
            "models[0].endpoint");
  EXPECT_EQ(ConfigPath({{"model_id", "m"}, {"kind", "constant"}, {"text", "x"}, {"endpoint", "http://x"}}),
            "models[0].endpoint");
  EXPECT_EQ(ConfigPath({{"model_id", "m"}, {"kind", "scripted"}, {"script", {{{"type", "nope"}}}}}),
            "models[0].script[0].type");
  EXPECT_EQ(ConfigPath({{"kind", "oracle"}}), "models[0].model_id");
}

TEST(MockConnectorTest, ConstantAnswersEverything) {
  auto c = MakeConnector(Spec({{"model_id", "refusal"}, {"kind", "constant"}, {"text", "The file is correct."}}));
  EXPECT_EQ(c->GenerateText(kHello).text, "The file is correct.");
}

TEST(MockConnectorTest, OracleNeedsCase) {
  auto c = MakeConnector(Spec({{"model_id", "o"}, {"kind", "oracle"}}));
  EXPECT_THROW(c->GenerateText(kHello), ConnectorError);
  auto task = tasks::turtle_fix::MakeTask();
  auto tc = task->MakeCase(task->DefaultSizes()[0], 1);
  EXPECT_EQ(c->GenerateText(kHello, {tc.get(), task->id()}).text, tc->OracleAnswer());
}

TEST(MockConnectorTest, ScriptedResponsesCycleByTurn) {
  auto c = MakeConnector(Spec({{"model_id", "s"},
                               {"kind", "scripted"},
                               {"script", {{{"type", "responses"}, {"responses", {"a", "b"}}}}}}));
  Conversation conv = kHello;
  EXPECT_EQ(c->GenerateText(conv).text, "a");
  conv.push_back({Role::kAssistant, "a"});
  conv.push_back({Role::kUser, "again"});
  EXPECT_EQ(c->GenerateText(conv).text, "b");
}

TEST(MockConnectorTest, ScriptedRulesFilterByTask) {
  auto c = MakeConnector(Spec({{"model_id", "s"},
                               {"kind", "scripted"},
                               {"script",
                                {{{"type", "responses"}, {"task", "turtle-fix"}, {"responses", {"fix"}}},
                                 {{"type", "responses"}, {"responses", {"other"}}}}}}));
  EXPECT_EQ(c->GenerateText(kHello, {nullptr, "turtle-fix"}).text, "fix");
  EXPECT_EQ(c->GenerateText(kHello, {nullptr, "synthetic-gen"}).text, "other");
}

TEST(MockConnectorTest, FoafRuleScalesCounts) {
  auto c = MakeConnector(Spec({{"model_id", "s"},
                               {"kind", "scripted"},
                               {"script", {{{"type", "foaf"}, {"persons_factor", 0.5}, {"links_factor", 2}}}}}));
  auto task = tasks::synthetic_gen::MakeTask();
  auto tc = task->MakeCase({{"persons", 5}, {"links", 4}}, 0);
  auto scores = tc->Evaluate(c->GenerateText(kHello, {tc.get(), task->id()}).text);
  EXPECT_EQ(std::get<std::int64_t>(scores.at("persons_generated")), 3);
  EXPECT_EQ(std::get<std::int64_t>(scores.at("links_generated")), 6);
}

TEST(MockConnectorTest, OracleDropRemovesTriples) {
  auto c = MakeConnector(Spec({{"model_id", "s"},
                               {"kind", "scripted"},
                               {"script", {{{"type", "oracle-drop"}, {"drop", 2}}}}}));
  auto task = tasks::turtle_fix::MakeTask();
  auto tc = task->MakeCase(task->DefaultSizes()[0], 3);
  auto scores = tc->Evaluate(c->GenerateText(kHello, {tc.get(), task->id()}).text);
  EXPECT_DOUBLE_EQ(std::get<double>(scores.at("recall")), 0.9);
  EXPECT_EQ(std::get<double>(scores.at("precision")), 1.0);
}

TEST(MockConnectorTest, UnmatchedScriptIsConnectorError) {
  auto c = MakeConnector(Spec({{"model_id", "s"},
                               {"kind", "scripted"},
                               {"script", {{{"type", "responses"}, {"task", "x"}, {"responses", {"r"}}}}}}));
  EXPECT_THROW(c->GenerateText(kHello, {nullptr, "y"}), ConnectorError);
}

TEST(ConversationTest, Validation) {
  EXPECT_THROW(ValidateConversation({}), Error);
  Conversation assistant_first = {{Role::kAssistant, "x"}};
  EXPECT_THROW(ValidateConversation(assistant_first), Error);
  Conversation ok = {{Role::kSystem, "s"}, {Role::kUser, "u"}};
  EXPECT_NO_THROW(ValidateConversation(ok));
  EXPECT_EQ(RoleFromString("assistant"), Role::kAssistant);
  EXPECT_THROW(RoleFromString("robot"), Error);
}

class ReplayCacheTest : public ::testing::Test {
 protected:
  void SetUp() override {
    root_ = fs::temp_directory_path() /
            ("kgbench_cache_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(root_);
  }
  void TearDown() override { fs::remove_all(root_); }
  fs::path root_;
};

TEST_F(ReplayCacheTest, RecordThenLookup) {
  ReplayCache cache(root_);
  EXPECT_FALSE(cache.Lookup("m/1", kHello).has_value());
  CacheEntry written = cache.Record("m/1", kHello, "hi there");
  EXPECT_EQ(written.prompt_hash, ConversationHash(kHello));
  EXPECT_EQ(written.prompt_hash.size(), 64u);
  auto found = cache.Lookup("m/1", kHello);
  ASSERT_TRUE(found.has_value());
  EXPECT_EQ(found->response, "hi there");
  EXPECT_FALSE(cache.Lookup("m/2", kHello).has_value());
  EXPECT_EQ(ConversationFromJson(ConversationToJson(kHello)), kHello);
}

TEST_F(ReplayCacheTest, IdenticalConversationsShareAKey) {
  ReplayCache cache(root_);
  cache.Record("m", {{Role::kUser, "same text"}}, "x");
  Conversation rebuilt;
  rebuilt.push_back({Role::kUser, std::string("same ") + "text"});
  EXPECT_TRUE(cache.Lookup("m", rebuilt).has_value());
  EXPECT_FALSE(cache.Lookup("m", {{Role::kUser, "same text "}}).has_value());
}

TEST_F(ReplayCacheTest, CorruptEntryIsCacheError) {
  ReplayCache cache(root_);
  cache.Record("m", kHello, "x");
  std::ofstream(cache.EntryPath("m", ConversationHash(kHello))) << "{not json";
  EXPECT_THROW(cache.Lookup("m", kHello), CacheError);
}

TEST_F(ReplayCacheTest, ReplayingConnectorRecordsOnceThenServesFromCache) {
  auto cache = std::make_shared<ReplayCache>(root_);
  ConnectorSpec spec = Spec({{"model_id", "live"}, {"kind", "constant"}, {"text", "answer"}});
  auto recording = MakeReplayingConnector(MakeConnector(spec), cache, spec);
  Generation first = recording->GenerateText(kHello);
  EXPECT_FALSE(first.from_cache);
  Generation second = recording->GenerateText(kHello);
  EXPECT_TRUE(second.from_cache);
  EXPECT_EQ(second.text, "answer");

  auto offline = MakeReplayingConnector(nullptr, cache, spec);
  EXPECT_EQ(offline->GenerateText(kHello).text, "answer");
  EXPECT_THROW(offline->GenerateText({{Role::kUser, "unseen"}}), CacheError);
}

TEST_F(ReplayCacheTest, ReplayKindReadsCacheDir) {
  ReplayCache(root_).Record("gpt", kHello, "cached");
  auto c = MakeConnector(Spec({{"model_id", "gpt"}, {"kind", "replay"}, {"cache_dir", root_.string()}}));
  EXPECT_EQ(c->GenerateText(kHello).text, "cached");
}

TEST(RetryTest, BackoffDoubles) {
  EXPECT_EQ(BackoffDelay(0), std::chrono::seconds(1));
  EXPECT_EQ(BackoffDelay(3), std::chrono::seconds(8));
  EXPECT_EQ(BackoffDelay(2, std::chrono::milliseconds(10)), std::chrono::milliseconds(40));
}

TEST(RetryTest, RetriesTransientFailures) {
  std::vector<std::chrono::milliseconds> sleeps;
  Sleeper sleeper = [&](std::chrono::milliseconds d) { sleeps.push_back(d); };
  int calls = 0;
  std::uint32_t retries = 0;
  std::string out = CallWithRetries(
      [&]() -> std::string {
        ++calls;
        if (calls == 1) throw RateLimitError("slow down");
        if (calls == 2) throw UnavailableError("503");
        return "ok";
      },
      3, sleeper, retries);
  EXPECT_EQ(out, "ok");
  EXPECT_EQ(retries, 2u);
  EXPECT_EQ(sleeps, (std::vector<std::chrono::milliseconds>{std::chrono::seconds(1), std::chrono::seconds(2)}));
}

TEST(RetryTest, GivesUpAfterMaxRetries) {
  int calls = 0;
  std::uint32_t retries = 0;
  Sleeper none = [](std::chrono::milliseconds) {};
  EXPECT_THROW(CallWithRetries([&]() -> std::string { ++calls; throw TimeoutError("t"); }, 2, none, retries),
               TimeoutError);
  EXPECT_EQ(calls, 3);
  calls = 0;
  EXPECT_THROW(CallWithRetries([&]() -> std::string { ++calls; throw AuthError("no"); }, 2, none, retries),
               AuthError);
  EXPECT_EQ(calls, 1);
}

}  // namespace
}  // namespace kgbench::connectors
