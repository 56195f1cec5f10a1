#pragma once

#include "binmom/logspace.hpp"
#include "binmom/moments.hpp"

namespace binmom {

// Log-space comparison of the exact moment against every bound for one query.
// Whenever p is in (0, 1) and k >= 1:
//   trivial_lower <= jensen_lower <= exact <= min(trivial_upper_p, ahle_upper)
// and trivial_upper_p <= trivial_upper_n.
struct BoundReport {
  MomentQuery query;
  LogValue log_exact;
  LogValue log_trivial_lower;
  LogValue log_jensen_lower;
  LogValue log_trivial_upper_n;
  LogValue log_trivial_upper_p;
  LogValue log_ahle_upper;
};

// E(R^k) >= (np)^k, as k log(np). Log-zero marker at p = 0.
LogValue log_trivial_lower(const MomentQuery& q);

// E(R^k) <= n^k, as k log n.
LogValue log_trivial_upper_n(const MomentQuery& q);

// E(R^k) <= n^k p, as k log n + log p. Log-zero marker at p = 0.
LogValue log_trivial_upper_p(const MomentQuery& q);

// E(R^k) >= n^k p^{n(1 - (1 - 1/n)^k)}. Log-zero marker at p = 0.
LogValue log_jensen_lower(const MomentQuery& q);

// E(R^k) <= (k / log(1 + k/(np)))^k. Throws std::domain_error at p = 0.
LogValue log_ahle_upper(const MomentQuery& q);

BoundReport bound_report(const MomentQuery& q);

// Saddle-point approximation of log {k j}:
//   log C(k,j) + (k-j) log((k-j)/e) + j log(e^chi - 1) - k log chi
//   + (1/2) log((k-j) / (k (chi - k/j + 1)))
// with chi the saddle point for tau = j/k. Requires 1 <= j <= k-1; the
// square-root factor degenerates to 0/0 at j = k.
LogValue temme_stirling(int k, int j);

}  // namespace binmom
