#pragma once

#include <cstdint>
#include <random>

namespace tug {

/// Deterministic random source with derivable child streams, so parallel
/// and serial trial orders see identical draws. The engine is std::mt19937_64
/// (bit-exact across platforms); the value mappings below avoid the
/// implementation-defined standard distributions.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : seed_(seed), engine_(mix(seed)) {}

  /// Child stream for trial/index `idx`; independent of draws made here.
  Rng stream(std::uint64_t idx) const { return Rng(mix(seed_ ^ mix(idx + 0x9e3779b97f4a7c15ULL))); }

  std::uint64_t next_u64() { return engine_(); }

  /// Uniform double in [0, 1) with 53 random bits.
  double next_unit() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * next_unit(); }

  /// Uniform integer in [lo, hi] inclusive.
  long long uniform_int(long long lo, long long hi) {
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<long long>(next_u64() % span);
  }

  static std::uint64_t mix(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
};

}  // namespace tug
