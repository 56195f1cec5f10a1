#pragma once

#include <vector>

#include "binmom/rational.hpp"

namespace binmom {

// One raw-moment instance: R ~ B(n, p), moment order k.
// Valid when n >= 1, k >= 1 and 0 <= p <= 1 (p = 0 and p = 1 are allowed
// here; only the asymptote requires p strictly inside (0, 1)).
struct MomentQuery {
  long n = 1;
  Rational p;
  long k = 1;
};

// Throws std::domain_error when the query violates its invariants.
void validate(const MomentQuery& q);

// E(R^k) = sum_{i=0}^{n} C(n,i) p^i (1-p)^{n-i} i^k, exact.
Rational raw_moment_direct(const MomentQuery& q);

// E(R^k) = sum_{j=1}^{min(k,n)} {k j} (n)_j p^j, exact. Agrees with
// raw_moment_direct on every valid query.
Rational raw_moment_stirling(const MomentQuery& q);

// P(S = j) = {k j} (n)_j / n^k for j = 1..min(k,n), where S is the number
// of distinct balls hit by k draws with replacement from n. Sums to 1.
std::vector<Rational> sample_size_pmf(long k, long n);

// P("sample of k draws is all red") = E(R^k) / n^k.
Rational all_red_probability(const MomentQuery& q);

}  // namespace binmom
