#pragma once

#include <cstdint>
#include <limits>

namespace teachlab {

// All randomness is SplitMix64 (Steele, Lea, Flood 2014). A stream is named by
// a 64-bit seed; its i-th output (i = 0, 1, ...) is
//     mix64(seed + (i + 1) * 0x9E3779B97F4A7C15)
// so any output can be computed directly without stepping through the others.

inline constexpr std::uint64_t kGoldenGamma = 0x9E3779B97F4A7C15ULL;

/// SplitMix64 finalizer (variant 13 of Stafford's mixers).
constexpr std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

/// The index-th output of the SplitMix64 stream seeded with `seed`.
constexpr std::uint64_t splitmix_at(std::uint64_t seed, std::uint64_t index) {
  return mix64(seed + (index + 1) * kGoldenGamma);
}

/// Seed of trial `trial` in an experiment driven by `master`.
constexpr std::uint64_t derive_seed(std::uint64_t master, std::uint64_t trial) { return splitmix_at(master, trial); }

/// Sequential SplitMix64; satisfies UniformRandomBitGenerator.
class SplitMix64 {
 public:
  using result_type = std::uint64_t;

  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

  result_type operator()() {
    state_ += kGoldenGamma;
    return mix64(state_);
  }

  /// Uniform double in [0, 1) from the top 53 bits.
  double uniform() { return static_cast<double>((*this)() >> 11) * 0x1.0p-53; }

 private:
  std::uint64_t state_;
};

}  // namespace teachlab
