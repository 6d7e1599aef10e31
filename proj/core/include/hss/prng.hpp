#pragma once

#include "hss/rational.hpp"

#include <cstdint>

namespace hss {

/// SplitMix64 (Steele–Lea–Flood). Chosen as the report PRNG because its
/// output stream is fully specified by the algorithm, so seeded runs are
/// byte-identical across platforms (standard-library distributions are not).
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform in [lo, hi] (inclusive), lo <= hi.
  std::int64_t range(std::int64_t lo, std::int64_t hi) {
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<std::int64_t>(next() % span);
  }

  // Small nonzero integer in [-bound, bound] \ {0}.
  Rat nonzero_int(std::int64_t bound = 3) {
    std::int64_t v = range(1, bound);
    if (next() & 1) v = -v;
    return Rat(v);
  }

  // Small integer in [-bound, bound].
  Rat small_int(std::int64_t bound = 3) { return Rat(range(-bound, bound)); }

  // Small rational with numerator in [-bound, bound], denominator in [1, den_bound].
  Rat small_rat(std::int64_t bound = 3, std::int64_t den_bound = 3) {
    return Rat(range(-bound, bound), range(1, den_bound));
  }

 private:
  std::uint64_t state_;
};

}  // namespace hss
