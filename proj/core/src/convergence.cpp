#include "binmom/convergence.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "binmom/logspace.hpp"
#include "binmom/moments.hpp"

namespace binmom {

std::vector<ConvergenceRow> converge_table(double beta, const Rational& p,
                                           std::vector<long> k_values) {
  if (p <= 0 || p >= 1) throw std::domain_error("converge_table: p must lie in (0, 1)");
  const AsymptoteInputs inputs{beta, p.get_d()};
  const SaddleSolution solution = solve_asymptote(inputs);

  std::sort(k_values.begin(), k_values.end());
  std::vector<ConvergenceRow> rows;
  rows.reserve(k_values.size());
  for (long k : k_values) {
    if (k < 2) throw std::domain_error("converge_table: every k must be >= 2");
    const long n = std::lround(beta * static_cast<double>(k));
    if (n < 1) throw std::domain_error("converge_table: round(beta k) must be >= 1");
    const Rational moment = raw_moment_stirling(MomentQuery{n, p, k});
    const double normalized =
        (log_of_rational(moment) - k * std::log(static_cast<double>(k))) / k;
    rows.push_back(ConvergenceRow{k, n, normalized, solution.log_psi,
                                  std::abs(normalized - solution.log_psi)});
  }
  return rows;
}

}  // namespace binmom
