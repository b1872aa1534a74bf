#include "kgbench/time.hpp"

#include <cstdio>
#include <ctime>

namespace kgbench {

std::string UtcTimestamp(std::chrono::system_clock::time_point when) {
  auto millis = std::chrono::duration_cast<std::chrono::milliseconds>(when.time_since_epoch()).count();
  std::time_t seconds = static_cast<std::time_t>(millis / 1000);
  std::tm utc{};
  gmtime_r(&seconds, &utc);
  char date_time[32];
  std::strftime(date_time, sizeof date_time, "%Y-%m-%dT%H:%M:%S", &utc);
  char fraction[8];
  std::snprintf(fraction, sizeof fraction, ".%03uZ", static_cast<unsigned>(millis % 1000) % 1000u);
  return std::string(date_time) + fraction;
}

}  // namespace kgbench
