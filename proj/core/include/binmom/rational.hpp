#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>

namespace binmom {

// Arbitrary-precision integer. Natural marks call sites whose values are
// nonnegative by construction (counts, Stirling numbers, falling factorials).
using Integer = mpz_class;
using Natural = mpz_class;

// Exact ratio of arbitrary-precision integers. mpq_class keeps the canonical
// form this library relies on: lowest terms, positive denominator, exact
// decidable equality.
using Rational = mpq_class;

Natural natural_pow(const Natural& base, unsigned long exponent);
Rational rational_pow(const Rational& base, unsigned long exponent);

// Parses "3/4", "7", "-2/5" or a decimal literal such as "0.25" into the
// exact ratio of the literal ("0.25" -> 1/4, not the nearest double).
// Returns nullopt on malformed input or a zero denominator.
std::optional<Rational> parse_rational(std::string_view text);

// "num/den" in lowest terms; the "/den" part is omitted when den == 1.
std::string to_string(const Rational& value);

}  // namespace binmom
