#pragma once

#include <cstdint>
#include <random>
#include <utility>
#include <string>
#include <string_view>

namespace kgbench {

// FNV-1a over the bytes of `data`, continuing from `seed`. Stable across
// platforms and runs, unlike std::hash.
std::uint64_t Fnv1a64(std::string_view data,
                      std::uint64_t seed = 0xcbf29ce484222325ULL) noexcept;

// SplitMix64 finalizer; a bijective 64-bit mixer.
std::uint64_t Mix64(std::uint64_t x) noexcept;

// Order-sensitive combination of two 64-bit values.
std::uint64_t HashCombine(std::uint64_t seed, std::uint64_t value) noexcept;

// Lowercase hex SHA-256 digest.
std::string Sha256Hex(std::string_view data);

std::string ToHex(std::uint64_t value);

// Platform-independent draws from a 64-bit engine. The standard
// distributions are implementation-defined, which would make generated task
// instances differ between standard libraries.
class SeededRandom {
 public:
  explicit SeededRandom(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t Next() { return engine_(); }

  // Uniform in [0, bound). bound must be > 0.
  std::uint64_t Below(std::uint64_t bound);

  // Uniform in [lo, hi].
  std::int64_t Between(std::int64_t lo, std::int64_t hi);

  bool Chance(double probability);

  template <typename Container>
  const auto& Pick(const Container& items) {
    return items[Below(items.size())];
  }

  template <typename Container>
  void Shuffle(Container& items) {
    for (std::size_t i = items.size(); i > 1; --i) {
      std::swap(items[i - 1], items[Below(i)]);
    }
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace kgbench
