#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace kgbench::connectors {

enum class Role { kSystem, kUser, kAssistant };

std::string_view ToString(Role role);
// Throws kgbench::Error for unknown role names.
Role RoleFromString(std::string_view name);

struct Exchange {
  Role role = Role::kUser;
  std::string content;

  friend bool operator==(const Exchange&, const Exchange&) = default;
};

using Conversation = std::vector<Exchange>;

// Non-empty, and the first non-system turn is a user turn.
void ValidateConversation(std::span<const Exchange> conversation);

}  // namespace kgbench::connectors
