#include "binmom/logspace.hpp"

#include <cmath>
#include <stdexcept>

namespace binmom {

double log_of_rational(const Rational& x) {
  const int sign = sgn(x);
  if (sign < 0) throw std::domain_error("log_of_rational: negative argument");
  if (sign == 0) return -std::numeric_limits<double>::infinity();

  // mantissa * 2^exponent with mantissa in [0.5, 1) for each side.
  signed long num_exp = 0;
  signed long den_exp = 0;
  const double num_mant = mpz_get_d_2exp(&num_exp, mpq_numref(x.get_mpq_t()));
  const double den_mant = mpz_get_d_2exp(&den_exp, mpq_denref(x.get_mpq_t()));
  return std::log(num_mant) - std::log(den_mant) +
         (static_cast<double>(num_exp) - static_cast<double>(den_exp)) * M_LN2;
}

LogValue log_of_exact(const Rational& x, std::string descriptor) {
  const double value = log_of_rational(x);
  if (value == -std::numeric_limits<double>::infinity()) {
    return LogValue::log_of_zero(std::move(descriptor));
  }
  return LogValue::of(value, std::move(descriptor));
}

}  // namespace binmom
