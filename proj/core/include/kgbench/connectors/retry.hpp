#pragma once

#include <chrono>
#include <cstdint>
#include <functional>

#include "kgbench/connectors/connector.hpp"

namespace kgbench::connectors {

// Delay before retry number `retry` (0-based): initial * 2^retry.
std::chrono::milliseconds BackoffDelay(std::uint32_t retry,
                                       std::chrono::milliseconds initial = std::chrono::seconds(1));

// Calls `attempt` up to max_retries + 1 times, sleeping between attempts
// that fail with RateLimitError, TimeoutError or UnavailableError. Other
// errors and the last failure propagate. `retries` receives the number of
// retries made.
std::string CallWithRetries(const std::function<std::string()>& attempt, std::uint32_t max_retries,
                            const Sleeper& sleeper, std::uint32_t& retries);

}  // namespace kgbench::connectors
