#pragma once

#include <cstdint>

#include "bfp/rational.hpp"

namespace bfp {

// splitmix64: tiny, deterministic across platforms. All test/CLI sampling
// goes through this so artifacts are reproducible from a seed.
class Rng {
public:
  explicit Rng(uint64_t seed) : state_(seed) {}

  uint64_t next() {
    uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  // uniform in [0, n) without modulo bias
  uint64_t below(uint64_t n) {
    uint64_t threshold = (0 - n) % n;
    for (;;) {
      uint64_t r = next();
      if (r >= threshold) return r % n;
    }
  }

  // dyadic rational k/2^res with k uniform in [0, 2^res]
  Rat dyadic(int res) {
    uint64_t k = below((1ull << res) + 1);
    return Rat(BigInt(k), BigInt(1) << res);
  }

  Point2 dyadic_point(int res) {
    Rat x = dyadic(res);
    Rat y = dyadic(res);
    return {x, y};
  }

private:
  uint64_t state_;
};

}  // namespace bfp
