#pragma once

#include <chrono>
#include <string>

namespace kgbench {

// ISO-8601 UTC with millisecond precision, e.g. 2024-05-01T12:00:00.123Z.
std::string UtcTimestamp(std::chrono::system_clock::time_point when = std::chrono::system_clock::now());

}  // namespace kgbench
