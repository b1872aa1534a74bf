#pragma once

#include <cstdint>

#include <nlohmann/json.hpp>

namespace kgbench {

// Integers >= 0, whether parsed from text (unsigned) or built in code (signed).
inline bool IsNonNegativeInteger(const nlohmann::json& v) {
  return v.is_number_unsigned() || (v.is_number_integer() && v.get<std::int64_t>() >= 0);
}

}  // namespace kgbench
