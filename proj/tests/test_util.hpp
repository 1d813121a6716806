#pragma once

#include <cstdint>

#include "heckekit/laurent.hpp"

namespace hktest {

// Small deterministic PRNG so property sweeps are reproducible.
struct Rng {
  std::uint64_t state;
  explicit Rng(std::uint64_t seed) : state(seed ? seed : 0x9e3779b97f4a7c15ULL) {}
  std::uint64_t next() {
    state ^= state << 13;
    state ^= state >> 7;
    state ^= state << 17;
    return state;
  }
  // uniform in [lo, hi]
  int range(int lo, int hi) { return lo + static_cast<int>(next() % static_cast<std::uint64_t>(hi - lo + 1)); }
};

inline heckekit::LaurentPoly random_laurent(Rng& rng, int max_terms = 5, int max_exp = 6, int max_coeff = 9) {
  heckekit::LaurentPoly p;
  int terms = rng.range(0, max_terms);
  for (int t = 0; t < terms; ++t) {
    int c = rng.range(-max_coeff, max_coeff);
    int e = rng.range(-max_exp, max_exp);
    p += heckekit::LaurentPoly::monomial(c, e);
  }
  return p;
}

}  // namespace hktest
