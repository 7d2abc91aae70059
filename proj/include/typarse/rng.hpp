#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace typarse {

// Deterministic random source. All randomness in the project flows through
// this wrapper so that a seed pins the exact stream, independent of the
// standard library's distribution implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t bits() { return gen_(); }

  // Uniform double in [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(bits() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // Uniform integer in [0, n), rejection sampled to avoid modulo bias.
  int below(int n) {
    std::uint64_t limit = UINT64_MAX - UINT64_MAX % static_cast<std::uint64_t>(n);
    std::uint64_t x = bits();
    while (x >= limit) x = bits();
    return static_cast<int>(x % static_cast<std::uint64_t>(n));
  }

  bool coin(double p) { return uniform() < p; }

  // Stable per-purpose seed derivation (FNV-1a over the tag, mixed with the base seed).
  static std::uint64_t derive(std::uint64_t base, std::string_view tag) {
    std::uint64_t h = 1469598103934665603ULL;
    for (char c : tag) {
      h ^= static_cast<unsigned char>(c);
      h *= 1099511628211ULL;
    }
    return h ^ (base * 0x9e3779b97f4a7c15ULL + 0x2545f4914f6cdd1dULL);
  }

  std::mt19937_64& engine() { return gen_; }

 private:
  std::mt19937_64 gen_;
};

}  // namespace typarse
