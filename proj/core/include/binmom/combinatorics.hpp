#pragma once

#include <vector>

#include "binmom/rational.hpp"

namespace binmom {

// Row k of the Stirling numbers of the second kind, entries[j] = {k j} for
// j = 0..k. For k >= 1: entries[0] = 0, entries[1] = entries[k] = 1, and
// sum_j entries[j] * (x)_j == x^k for every integer x >= 0.
struct StirlingRow {
  int k = 0;
  std::vector<Natural> entries;
};

// Builds row k by the recurrence {k+1 j} = {k j-1} + j {k j}, keeping only
// one row in memory. Throws std::domain_error for k < 1.
StirlingRow stirling_row(int k);

// (n)_j = n (n-1) ... (n-j+1). Empty product 1 at j = 0; 0 when j > n.
Natural falling_factorial(const Natural& n, const Natural& j);

Natural binomial_coefficient(unsigned long n, unsigned long i);

}  // namespace binmom
