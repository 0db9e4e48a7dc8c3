#pragma once

#include <cstdint>

namespace ffdg {

/// SplitMix64, pinned as the project-wide seeded stream so that sampled
/// sets and lengths are reproducible across implementations and platforms.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  /// Uniform double in [0, 1) using the top 53 bits.
  double next_double() {
    return double(next() >> 11) * 0x1.0p-53;
  }

  /// Uniform integer in [0, bound) by rejection-free scaling; bound >= 1.
  std::uint64_t next_below(std::uint64_t bound) {
    return std::uint64_t(next_double() * double(bound));
  }

 private:
  std::uint64_t state_;
};

}  // namespace ffdg
