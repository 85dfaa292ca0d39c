#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace physarum {

// All randomness flows through this wrapper so seeded runs reproduce
// bit-for-bit. The engine is std::mt19937_64, whose output sequence is fully
// specified by the standard; std::*_distribution adaptors are NOT used because
// their mapping from engine output to variates is implementation-defined.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  // Uniform in [0, 1) with 53 random mantissa bits.
  double uniform01() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  // Uniform index in [0, n). n must be > 0.
  std::size_t uniform_index(std::size_t n) {
    return static_cast<std::size_t>(uniform01() * static_cast<double>(n)) % n;
  }

  // Box-Muller (cosine branch). Consumes exactly two engine outputs per call;
  // no cached second variate, so the draw count per call is constant.
  double normal(double mean, double sd) {
    const double u1 = uniform01();
    const double u2 = uniform01();
    const double r = std::sqrt(-2.0 * std::log1p(-u1));
    return mean + sd * r * std::cos(2.0 * kPi * u2);
  }

 private:
  static constexpr double kPi = 3.14159265358979323846;
  std::mt19937_64 engine_;
};

// splitmix64 finalizer over (seed, index). Used to derive independent
// per-trace / per-shard streams so batches can be generated in any order or
// in parallel without changing results.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ull * (index + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

}  // namespace physarum
