#pragma once

#include <cstdint>
#include <random>

#include "braidlab/word.hpp"

namespace braidlab {

/// Deterministic source for the randomized sweeps; everything downstream of a
/// fixed seed is reproducible.
struct Rng {
  std::mt19937_64 eng;
  explicit Rng(uint64_t seed) : eng(seed) {}

  uint64_t next(uint64_t bound) {  // uniform in [0, bound)
    std::uniform_int_distribution<uint64_t> d(0, bound - 1);
    return d(eng);
  }
  int64_t pick_sign() { return next(2) ? 1 : -1; }

  /// Freely reduced word of exactly `len` letters over x_1..x_rank.
  Word word(uint32_t rank, uint32_t len) {
    Word w;
    while (w.length() < len)
      word_push(w, uint32_t(1 + next(rank)), pick_sign());
    return w;
  }
};

}  // namespace braidlab
