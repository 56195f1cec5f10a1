#pragma once

#include <limits>
#include <string>

#include "binmom/rational.hpp"

namespace binmom {

// A positive quantity represented by its natural log, so that values like
// n^k p with k in the hundreds never leave double range. log 0 is carried
// as a distinguished -infinity marker.
struct LogValue {
  double log_e = 0.0;
  std::string descriptor;

  static LogValue of(double log_e, std::string descriptor) {
    return LogValue{log_e, std::move(descriptor)};
  }
  static LogValue log_of_zero(std::string descriptor) {
    return LogValue{-std::numeric_limits<double>::infinity(), std::move(descriptor)};
  }
  bool is_log_of_zero() const {
    return log_e == -std::numeric_limits<double>::infinity();
  }
};

// Natural log of a nonnegative exact rational, computed from the scaled
// mantissas and bit lengths of numerator and denominator; no overflow for
// thousand-digit integers. Accurate to ~1e-9 relative away from log x = 0.
// x = 0 maps to the log-zero marker; x < 0 throws std::domain_error.
LogValue log_of_exact(const Rational& x, std::string descriptor = "exact");

// Plain double version of the above.
double log_of_rational(const Rational& x);

}  // namespace binmom
