#pragma once

#include <vector>

#include "binmom/rational.hpp"
#include "binmom/saddle.hpp"

namespace binmom {

// One row of the E(R^k) = k^k (Psi + o(1))^k convergence experiment:
// n = round(beta k), normalized_log_moment = (log E(R^k) - k log k)/k,
// gap = |normalized_log_moment - log Psi|.
struct ConvergenceRow {
  long k = 0;
  long n = 0;
  double normalized_log_moment = 0.0;
  double log_psi = 0.0;
  double gap = 0.0;
};

// Exact-arithmetic convergence study toward the saddle-point asymptote.
// p enters the moments exactly and the asymptote as a double. Requires
// beta > 0, p in (0, 1) and every k >= 2 with round(beta k) >= 1; rows are
// emitted in ascending k.
std::vector<ConvergenceRow> converge_table(double beta, const Rational& p,
                                           std::vector<long> k_values);

}  // namespace binmom
