#include "binmom/combinatorics.hpp"

#include <stdexcept>
#include <utility>

namespace binmom {

StirlingRow stirling_row(int k) {
  if (k < 1) throw std::domain_error("stirling_row: k must be >= 1");

  std::vector<Natural> row(static_cast<size_t>(k) + 1);
  row[0] = 1;  // row for k = 0: {0 0} = 1
  std::vector<Natural> next(static_cast<size_t>(k) + 1);
  for (int kk = 1; kk <= k; ++kk) {
    next[0] = 0;
    for (int j = 1; j <= kk; ++j) {
      // {kk j} = {kk-1 j-1} + j {kk-1 j}
      mpz_mul_ui(next[j].get_mpz_t(), row[j].get_mpz_t(), static_cast<unsigned long>(j));
      next[j] += row[j - 1];
    }
    std::swap(row, next);
  }
  return StirlingRow{k, std::move(row)};
}

Natural falling_factorial(const Natural& n, const Natural& j) {
  if (j == 0) return 1;
  if (j > n) return 0;
  if (!j.fits_ulong_p()) throw std::domain_error("falling_factorial: j too large to enumerate");
  unsigned long steps = j.get_ui();
  Natural result = n;
  Natural factor = n;
  for (unsigned long t = 1; t < steps; ++t) {
    factor -= 1;
    result *= factor;
  }
  return result;
}

Natural binomial_coefficient(unsigned long n, unsigned long i) {
  Natural result;
  mpz_bin_uiui(result.get_mpz_t(), n, i);
  return result;
}

}  // namespace binmom
