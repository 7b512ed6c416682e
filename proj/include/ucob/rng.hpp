#pragma once

#include <cstdint>

#include "ucob/rational.hpp"

namespace ucob {

// splitmix64; tiny, seedable, identical across platforms.  Used everywhere a
// reproducible stream is needed (sampled determinants, property tests).
class SplitMix64 {
 public:
  explicit SplitMix64(uint64_t seed = 0) : state_(seed) {}

  uint64_t next() {
    uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, bound).
  uint64_t below(uint64_t bound) { return next() % bound; }

  // Small nonzero rational with numerator in [-range, range] and denominator
  // in [1, den_range].
  Rational rational(long range = 20, long den_range = 6) {
    long num = 0;
    while (num == 0) num = static_cast<long>(below(2 * range + 1)) - range;
    long den = 1 + static_cast<long>(below(den_range));
    return Rational(num, den);
  }

 private:
  uint64_t state_;
};

}  // namespace ucob
