#include <doctest.h>

#include "binmom/rational.hpp"

using namespace binmom;

TEST_CASE("parse_rational accepts fractions, integers and decimals") {
  CHECK(*parse_rational("1/2") == Rational(1, 2));
  CHECK(*parse_rational("9/12") == Rational(3, 4));  // canonicalized
  CHECK(*parse_rational("7") == Rational(7));
  CHECK(*parse_rational("0.25") == Rational(1, 4));
  CHECK(*parse_rational("0.1") == Rational(1, 10));  // exact ratio of the literal
  CHECK(*parse_rational("2.5") == Rational(5, 2));
  CHECK(*parse_rational(".5") == Rational(1, 2));
  CHECK(*parse_rational("3.") == Rational(3));
  CHECK(*parse_rational("-2/5") == Rational(-2, 5));
  CHECK(*parse_rational("+0.75") == Rational(3, 4));
  CHECK(*parse_rational("0") == Rational(0));
}

TEST_CASE("parse_rational rejects malformed input") {
  CHECK(!parse_rational(""));
  CHECK(!parse_rational("abc"));
  CHECK(!parse_rational("1/0"));
  CHECK(!parse_rational("1.2.3"));
  CHECK(!parse_rational("1/2/3"));
  CHECK(!parse_rational("1e3"));
  CHECK(!parse_rational("-"));
  CHECK(!parse_rational("."));
  CHECK(!parse_rational("2 /3"));
}

TEST_CASE("to_string uses num/den, dropping the unit denominator") {
  CHECK(to_string(Rational(3, 2)) == "3/2");
  CHECK(to_string(Rational(78125)) == "78125");
  CHECK(to_string(Rational(-1, 3)) == "-1/3");
  CHECK(to_string(Rational(4, 2)) == "2");
}

TEST_CASE("exact powers") {
  CHECK(natural_pow(5, 10) == 9765625);
  CHECK(natural_pow(2, 0) == 1);
  CHECK(natural_pow(0, 0) == 1);
  CHECK(natural_pow(0, 3) == 0);
  CHECK(rational_pow(Rational(2, 3), 3) == Rational(8, 27));
  CHECK(rational_pow(Rational(0), 0) == Rational(1));
  CHECK(rational_pow(Rational(-1, 2), 2) == Rational(1, 4));
}

TEST_CASE("rationals stay canonical through arithmetic") {
  Rational a(6, 4);
  a.canonicalize();
  CHECK(a.get_num() == 3);
  CHECK(a.get_den() == 2);
  const Rational b = a * Rational(2, 3);
  CHECK(b.get_num() == 1);
  CHECK(b.get_den() == 1);
  CHECK(Rational(1, 2) + Rational(1, 2) == Rational(1));
}
