#pragma once

#include <cstdint>

namespace germ::testing {

/// splitmix64: tiny, platform-stable generator for reproducible test inputs.
struct TestRng {
  uint64_t state;
  explicit TestRng(uint64_t seed) : state(seed) {}

  uint64_t next() {
    uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform-ish value in [lo, hi]; fine for test-case generation.
  long range(long lo, long hi) {
    return lo + static_cast<long>(next() % static_cast<uint64_t>(hi - lo + 1));
  }
};

}  // namespace germ::testing
