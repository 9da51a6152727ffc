#pragma once

#include <cstdint>

#include "linf/rational.hpp"

namespace linf {

/// Deterministic splitmix64 stream. The report records the algorithm name and
/// seed so any sampled input can be replayed.
class Prng {
  uint64_t state_;

public:
  static constexpr const char *kAlgorithm = "splitmix64";

  explicit Prng(uint64_t seed) : state_(seed) {}

  uint64_t next() {
    uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform in [lo, hi], both inclusive. Deterministic across platforms.
  long uniform(long lo, long hi) {
    return lo + static_cast<long>(next() % static_cast<uint64_t>(hi - lo + 1));
  }

  /// Small integer coefficient in [-5, 5], the default sampling range.
  Rational smallInt() { return Rational(uniform(-5, 5)); }

  /// Derive an independent per-trial stream from a base seed and index.
  static Prng forTrial(uint64_t seed, uint64_t index) {
    Prng mix(seed ^ (0x6a09e667f3bcc909ULL * (index + 1)));
    mix.next();
    return Prng(mix.next());
  }
};

} // namespace linf
