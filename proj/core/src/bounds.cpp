#include "binmom/bounds.hpp"

#include <cmath>
#include <stdexcept>

#include "binmom/lambert.hpp"

namespace binmom {

namespace {

double log_n(const MomentQuery& q) { return std::log(static_cast<double>(q.n)); }

double k_d(const MomentQuery& q) { return static_cast<double>(q.k); }

}  // namespace

LogValue log_trivial_lower(const MomentQuery& q) {
  validate(q);
  if (q.p == 0) return LogValue::log_of_zero("trivial_lower");
  return LogValue::of(k_d(q) * log_of_rational(Rational(q.n) * q.p), "trivial_lower");
}

LogValue log_trivial_upper_n(const MomentQuery& q) {
  validate(q);
  return LogValue::of(k_d(q) * log_n(q), "trivial_upper_n");
}

LogValue log_trivial_upper_p(const MomentQuery& q) {
  validate(q);
  if (q.p == 0) return LogValue::log_of_zero("trivial_upper_p");
  return LogValue::of(k_d(q) * log_n(q) + log_of_rational(q.p), "trivial_upper_p");
}

LogValue log_jensen_lower(const MomentQuery& q) {
  validate(q);
  if (q.p == 0) return LogValue::log_of_zero("jensen_lower");
  // E(S) = n (1 - (1 - 1/n)^k), evaluated as -n expm1(k log1p(-1/n)).
  const double n = static_cast<double>(q.n);
  const double mean_sample_size = -n * std::expm1(k_d(q) * std::log1p(-1.0 / n));
  return LogValue::of(k_d(q) * log_n(q) + mean_sample_size * log_of_rational(q.p),
                      "jensen_lower");
}

LogValue log_ahle_upper(const MomentQuery& q) {
  validate(q);
  if (q.p == 0) throw std::domain_error("log_ahle_upper: p must be positive");
  const double np = static_cast<double>(q.n) * q.p.get_d();
  // Inner log argument is 1 + k/(np) > 1; the max() guards rounding only.
  const double inner = std::log1p(std::max(k_d(q) / np, 1e-15));
  return LogValue::of(k_d(q) * (std::log(k_d(q)) - std::log(inner)), "ahle_upper");
}

BoundReport bound_report(const MomentQuery& q) {
  validate(q);
  return BoundReport{
      q,
      log_of_exact(raw_moment_stirling(q), "exact"),
      log_trivial_lower(q),
      log_jensen_lower(q),
      log_trivial_upper_n(q),
      log_trivial_upper_p(q),
      log_ahle_upper(q),
  };
}

LogValue temme_stirling(int k, int j) {
  if (k < 2 || j < 1 || j > k - 1) {
    throw std::domain_error("temme_stirling: requires 1 <= j <= k-1");
  }
  const double kd = k;
  const double jd = j;
  const double tau = jd / kd;
  const double inv_tau = 1.0 / tau;
  const double w = lambert_w0(-std::exp(-inv_tau) * inv_tau);
  const double chi = w + inv_tau;
  // chi - k/j + 1 = w + 1, positive for j < k.
  const double log_binom =
      std::lgamma(kd + 1.0) - std::lgamma(jd + 1.0) - std::lgamma(kd - jd + 1.0);
  const double log_value = log_binom + (kd - jd) * (std::log(kd - jd) - 1.0) +
                           jd * (chi + std::log1p(-std::exp(-chi))) - kd * std::log(chi) +
                           0.5 * (std::log(kd - jd) - std::log(kd) - std::log(w + 1.0));
  return LogValue::of(log_value, "temme");
}

}  // namespace binmom
