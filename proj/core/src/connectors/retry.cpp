#include "kgbench/connectors/retry.hpp"

#include <thread>

#include "kgbench/error.hpp"

namespace kgbench::connectors {

std::chrono::milliseconds BackoffDelay(std::uint32_t retry, std::chrono::milliseconds initial) {
  return initial * (std::int64_t{1} << std::min<std::uint32_t>(retry, 20));
}

std::string CallWithRetries(const std::function<std::string()>& attempt, std::uint32_t max_retries,
                            const Sleeper& sleeper, std::uint32_t& retries) {
  retries = 0;
  while (true) {
    try {
      return attempt();
    } catch (const RateLimitError&) {
      if (retries >= max_retries) throw;
    } catch (const TimeoutError&) {
      if (retries >= max_retries) throw;
    } catch (const UnavailableError&) {
      if (retries >= max_retries) throw;
    }
    std::chrono::milliseconds delay = BackoffDelay(retries);
    if (sleeper) {
      sleeper(delay);
    } else {
      std::this_thread::sleep_for(delay);
    }
    ++retries;
  }
}

}  // namespace kgbench::connectors
