#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace oppnet {

// splitmix64 finalizer; stable across platforms.
inline std::uint64_t mix64(std::uint64_t z) {
  z += 0x9E3779B97F4A7C15ull;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

// Derives an independent stream seed from a run seed plus up to two indices.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t s0, std::uint64_t s1 = 0) {
  std::uint64_t h = mix64(seed ^ 0xD1B54A32D192ED03ull);
  h = mix64(h ^ s0);
  h = mix64(h ^ s1);
  return h;
}

// Deterministic RNG wrapper. Only the raw mt19937_64 stream is consumed;
// all distributions are built by hand so results are identical across
// standard library implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t next_u64() { return gen_(); }

  // Uniform in [0, 1), 53-bit resolution.
  double uniform01() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  // Uniform in [0, n). Rejection sampling, unbiased.
  std::uint64_t uniform_int(std::uint64_t n) {
    if (n == 0) return 0;
    const std::uint64_t rem = std::uint64_t(-1) % n;
    const std::uint64_t limit = std::uint64_t(-1) - rem;
    std::uint64_t x;
    do {
      x = gen_();
    } while (x > limit);
    return x % n;
  }

  // Uniform in [lo, hi] inclusive.
  std::uint64_t uniform_int(std::uint64_t lo, std::uint64_t hi) {
    return lo + uniform_int(hi - lo + 1);
  }

  // Exponential with the given mean; inversion of the CDF.
  double exponential(double mean) {
    double u = uniform01();
    while (u == 0.0) u = uniform01();
    return -mean * std::log(u);
  }

 private:
  std::mt19937_64 gen_;
};

}  // namespace oppnet
