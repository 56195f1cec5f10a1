#pragma once

#include <cstdint>

namespace binmom {

// SplitMix64: the 64-bit mix/finalizer generator of Steele, Lea and Flood.
// Fully deterministic for a given seed, and splittable: split() seeds an
// independent child stream from the parent's next output.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, 1) with 53 random bits.
  double next_unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  // Uniform in [0, bound) by the multiply-shift reduction; the bias is
  // below bound / 2^64.
  std::uint64_t next_below(std::uint64_t bound) {
    return static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(next()) * bound) >> 64);
  }

  SplitMix64 split() { return SplitMix64(next()); }

 private:
  std::uint64_t state_;
};

struct McEstimate {
  double estimate = 0.0;
  double std_error = 0.0;
  std::uint64_t hits = 0;
  std::uint64_t samples = 0;
};

// Simulates the two-stage experiment: paint n balls red with probability p,
// draw k balls with replacement, record whether the sample was all red.
// Identical (n, p, k, samples, seed) always reproduce the same estimate.
McEstimate mc_all_red(long n, double p, long k, std::uint64_t samples, std::uint64_t seed);

}  // namespace binmom
