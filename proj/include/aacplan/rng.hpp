#pragma once

#include <cstdint>

namespace aacplan {

/// Counter-based deterministic pseudo-random stream (SplitMix64). Streams for
/// independent simulation trials are derived from a (master seed, index) pair
/// so results do not depend on execution order or thread count.
class RngStream {
 public:
  explicit RngStream(std::uint64_t seed) : state_(seed) {}

  /// Stream for trial `index` under `master_seed`. Distinct pairs map to
  /// well-separated states.
  static RngStream derive(std::uint64_t master_seed, std::uint64_t index) {
    return RngStream(mix(mix(master_seed) ^ mix(index + 0x9E3779B97F4A7C15ull)));
  }

  std::uint64_t next_u64() {
    state_ += 0x9E3779B97F4A7C15ull;
    return mix(state_);
  }

  /// Uniform double in [0, 1).
  double next_double() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  /// One draw with success probability p. Always true at p = 1, never at p = 0.
  bool bernoulli(double p) { return next_double() < p; }

 private:
  static std::uint64_t mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  std::uint64_t state_;
};

}  // namespace aacplan
