#pragma once

#include <memory>
#include <string>

#include <nlohmann/json.hpp>

#include "kgbench/connectors/connector.hpp"

namespace kgbench::connectors {

// The chat-completion request body for `conversation`. The spec's system
// prompt is prepended when the conversation has no system turn.
nlohmann::json BuildChatRequest(const ConnectorSpec& spec, const Conversation& conversation);

// Extracts choices[0].message.content. Throws ProtocolError.
std::string ParseChatResponse(const nlohmann::json& body, nlohmann::json* usage = nullptr);

std::unique_ptr<Connector> MakeHttpChatConnector(ConnectorSpec spec, Sleeper sleeper = {});

}  // namespace kgbench::connectors
