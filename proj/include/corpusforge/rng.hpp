#pragma once

#include <cstdint>

namespace corpusforge {

// SplitMix64: deterministic across platforms, unlike the stdlib
// distributions. Used wherever reproducibility is part of the contract
// (media synthesis, split sampling, world generation).
struct SplitMix64 {
  uint64_t state;

  explicit SplitMix64(uint64_t seed) : state(seed) {}

  uint64_t next() {
    state += 0x9E3779B97F4A7C15ULL;
    uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  uint64_t below(uint64_t bound) { return next() % bound; }

  // Uniform in [0, 1).
  double next_unit() {
    return static_cast<double>(next() >> 11) * (1.0 / 9007199254740992.0);
  }

  // Uniform in [-1, 1).
  double next_signal() { return next_unit() * 2.0 - 1.0; }
};

}  // namespace corpusforge
