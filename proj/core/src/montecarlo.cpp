#include "binmom/montecarlo.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace binmom {

McEstimate mc_all_red(long n, double p, long k, std::uint64_t samples, std::uint64_t seed) {
  if (n < 1 || k < 1) throw std::domain_error("mc_all_red: n and k must be >= 1");
  if (samples < 1) throw std::domain_error("mc_all_red: samples must be >= 1");
  if (!(p >= 0.0) || !(p <= 1.0)) throw std::domain_error("mc_all_red: p must lie in [0, 1]");

  SplitMix64 rng(seed);
  std::vector<std::uint8_t> red(static_cast<size_t>(n));
  std::uint64_t hits = 0;
  for (std::uint64_t s = 0; s < samples; ++s) {
    for (auto& ball : red) ball = rng.next_unit() < p;
    bool all_red = true;
    // draw all k regardless, so each sample consumes exactly n + k variates
    for (long d = 0; d < k; ++d) {
      all_red &= red[rng.next_below(static_cast<std::uint64_t>(n))] != 0;
    }
    hits += all_red;
  }

  McEstimate result;
  result.hits = hits;
  result.samples = samples;
  result.estimate = static_cast<double>(hits) / static_cast<double>(samples);
  result.std_error =
      std::sqrt(result.estimate * (1.0 - result.estimate) / static_cast<double>(samples));
  return result;
}

}  // namespace binmom
