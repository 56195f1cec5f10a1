#include "binmom/rational.hpp"

#include <cctype>

namespace binmom {

Natural natural_pow(const Natural& base, unsigned long exponent) {
  Natural result;
  mpz_pow_ui(result.get_mpz_t(), base.get_mpz_t(), exponent);
  return result;
}

Rational rational_pow(const Rational& base, unsigned long exponent) {
  Rational result;
  mpz_pow_ui(mpq_numref(result.get_mpq_t()), mpq_numref(base.get_mpq_t()), exponent);
  mpz_pow_ui(mpq_denref(result.get_mpq_t()), mpq_denref(base.get_mpq_t()), exponent);
  // base is canonical, so num^e / den^e is already in lowest terms
  return result;
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

std::optional<Rational> parse_rational(std::string_view text) {
  if (text.empty()) return std::nullopt;

  bool negative = false;
  if (text.front() == '+' || text.front() == '-') {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }

  Rational magnitude;
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    std::string_view num = text.substr(0, slash);
    std::string_view den = text.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) return std::nullopt;
    Integer n(std::string(num), 10);
    Integer d(std::string(den), 10);
    if (d == 0) return std::nullopt;
    magnitude = Rational(n, d);
    magnitude.canonicalize();
  } else if (auto dot = text.find('.'); dot != std::string_view::npos) {
    std::string_view whole = text.substr(0, dot);
    std::string_view frac = text.substr(dot + 1);
    if (whole.empty() && frac.empty()) return std::nullopt;
    if (!whole.empty() && !all_digits(whole)) return std::nullopt;
    if (!frac.empty() && !all_digits(frac)) return std::nullopt;
    std::string digits;
    digits.append(whole);
    digits.append(frac);
    Integer n(digits.empty() ? "0" : digits, 10);
    Integer d = natural_pow(10, frac.size());
    magnitude = Rational(n, d);
    magnitude.canonicalize();
  } else {
    if (!all_digits(text)) return std::nullopt;
    magnitude = Rational(Integer(std::string(text), 10));
  }

  return negative ? Rational(-magnitude) : magnitude;
}

std::string to_string(const Rational& value) {
  return value.get_str();
}

}  // namespace binmom
