#pragma once

#include <cstdint>
#include <random>

namespace pachner {

/// SplitMix64 finalizer (Steele, Lea, Flood 2014). Bijective on 64 bits.
constexpr std::uint64_t splitmix64_mix(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

inline constexpr std::uint64_t kGoldenGamma = 0x9E3779B97F4A7C15ULL;

/**
 * Seed of an independent stream: the (trial + 1)-th SplitMix64 output for
 * state `master`, remixed with `salt` so that one trial can own several
 * streams (configuration, perturbation, R^4 experiment).
 */
constexpr std::uint64_t stream_seed(std::uint64_t master, std::uint64_t trial, std::uint64_t salt = 0) {
  const std::uint64_t base = splitmix64_mix(master + (trial + 1) * kGoldenGamma);
  return splitmix64_mix(base ^ splitmix64_mix(salt + kGoldenGamma));
}

/// std::mt19937_64 (its output sequence is fixed by the standard) with
/// portable integer and real draws; std distributions are
/// implementation-defined and are avoided.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  /// Uniform on [lo, hi], by rejection; requires lo <= hi.
  std::int64_t uniform_int(std::int64_t lo, std::int64_t hi);

  /// Uniform on [0, 1) with 53 random bits.
  double uniform01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

 private:
  std::mt19937_64 engine_;
};

}  // namespace pachner
