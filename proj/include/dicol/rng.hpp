#pragma once

#include <cstdint>
#include <random>

namespace dicol {

// Reproducible random source: std::mt19937_64 seeded through the SplitMix64
// finaliser. split(i) derives an independent stream for sub-task i, so
// parallel trials replicate regardless of scheduling. Doubles come from the
// top 53 bits of one draw.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : seed_(seed), engine_(mix(seed)) {}

  static std::uint64_t mix(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
  }

  Rng split(std::uint64_t stream) const { return Rng(mix(seed_ ^ mix(stream + 1))); }

  std::uint64_t next() { return engine_(); }
  std::mt19937_64& engine() { return engine_; }
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  bool bernoulli(double p) { return uniform() < p; }
  bool coin() { return (engine_() >> 63) != 0; }
  // Uniform in [0, bound).
  std::uint64_t below(std::uint64_t bound) {
    std::uint64_t limit = ~0ULL - (~0ULL % bound);
    std::uint64_t x;
    do x = engine_();
    while (x >= limit);
    return x % bound;
  }
  std::uint64_t seed() const { return seed_; }

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
};

}  // namespace dicol
