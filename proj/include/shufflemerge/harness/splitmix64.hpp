#pragma once

#include <cstdint>

namespace shufflemerge::harness {

/// splitmix64 generator. Output is fixed bit-for-bit so generated instances
/// are reproducible on any platform.
class SplitMix64 {
 public:
  explicit constexpr SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

  constexpr std::uint64_t next() noexcept {
    state_ += 0x9E3779B97F4A7C15ULL;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  // Value in [0, bound) by plain reduction; bound must be nonzero.
  constexpr std::uint64_t below(std::uint64_t bound) noexcept { return next() % bound; }

 private:
  std::uint64_t state_;
};

/// Per-record seed for benchmark repetitions.
constexpr std::uint64_t derive_seed(std::uint64_t base, std::uint64_t n, std::uint64_t rep) noexcept {
  return SplitMix64(base ^ (n << 32) ^ rep).next();
}

}  // namespace shufflemerge::harness
