#include "binmom/moments.hpp"

#include <algorithm>
#include <stdexcept>

#include "binmom/combinatorics.hpp"

namespace binmom {

void validate(const MomentQuery& q) {
  if (q.n < 1) throw std::domain_error("moment query: n must be >= 1");
  if (q.k < 1) throw std::domain_error("moment query: k must be >= 1");
  if (q.p < 0 || q.p > 1) throw std::domain_error("moment query: p must lie in [0, 1]");
}

Rational raw_moment_direct(const MomentQuery& q) {
  validate(q);
  const unsigned long n = static_cast<unsigned long>(q.n);
  const unsigned long k = static_cast<unsigned long>(q.k);
  const Rational one_minus_p = Rational(1) - q.p;

  // Run p^i up and (1-p)^{n-i} down to keep each term a single multiply.
  Rational p_pow = 1;
  Rational sum = 0;
  for (unsigned long i = 0; i <= n; ++i) {
    if (i > 0) p_pow *= q.p;
    if (i == 0) continue;  // i^k = 0 for k >= 1
    Rational term(binomial_coefficient(n, i));
    term *= p_pow;
    term *= rational_pow(one_minus_p, n - i);
    term *= Rational(natural_pow(Natural(static_cast<long>(i)), k));
    sum += term;
  }
  return sum;
}

Rational raw_moment_stirling(const MomentQuery& q) {
  validate(q);
  const StirlingRow row = stirling_row(static_cast<int>(q.k));
  const long jmax = std::min(q.k, q.n);

  Natural falling = 1;
  Rational p_pow = 1;
  Rational sum = 0;
  for (long j = 1; j <= jmax; ++j) {
    falling *= Natural(q.n - j + 1);
    p_pow *= q.p;
    Rational term(row.entries[static_cast<size_t>(j)] * falling);
    term *= p_pow;
    sum += term;
  }
  return sum;
}

std::vector<Rational> sample_size_pmf(long k, long n) {
  if (k < 1 || n < 1) throw std::domain_error("sample_size_pmf: k and n must be >= 1");
  const StirlingRow row = stirling_row(static_cast<int>(k));
  const Natural n_to_k = natural_pow(Natural(n), static_cast<unsigned long>(k));
  const long jmax = std::min(k, n);

  std::vector<Rational> pmf;
  pmf.reserve(static_cast<size_t>(jmax));
  Natural falling = 1;
  for (long j = 1; j <= jmax; ++j) {
    falling *= Natural(n - j + 1);
    Rational mass(row.entries[static_cast<size_t>(j)] * falling, n_to_k);
    mass.canonicalize();
    pmf.push_back(std::move(mass));
  }
  return pmf;
}

Rational all_red_probability(const MomentQuery& q) {
  Rational prob = raw_moment_stirling(q);
  prob /= Rational(natural_pow(Natural(q.n), static_cast<unsigned long>(q.k)));
  return prob;
}

}  // namespace binmom
