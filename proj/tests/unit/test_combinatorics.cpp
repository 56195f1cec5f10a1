#include <doctest.h>

#include <stdexcept>

#include "binmom/combinatorics.hpp"

using namespace binmom;

TEST_CASE("small Stirling rows") {
  const StirlingRow r3 = stirling_row(3);
  REQUIRE(r3.entries.size() == 4);
  CHECK(r3.entries[0] == 0);
  CHECK(r3.entries[1] == 1);
  CHECK(r3.entries[2] == 3);
  CHECK(r3.entries[3] == 1);

  const StirlingRow r1 = stirling_row(1);
  REQUIRE(r1.entries.size() == 2);
  CHECK(r1.entries[0] == 0);
  CHECK(r1.entries[1] == 1);

  const StirlingRow r4 = stirling_row(4);
  CHECK(r4.entries[2] == 7);
  CHECK(r4.entries[3] == 6);
}

TEST_CASE("stirling_row rejects k < 1") {
  CHECK_THROWS_AS(stirling_row(0), std::domain_error);
  CHECK_THROWS_AS(stirling_row(-3), std::domain_error);
}

TEST_CASE("row edges hold for sampled k") {
  for (int k : {1, 2, 5, 17, 64}) {
    const StirlingRow row = stirling_row(k);
    CHECK(row.entries[0] == 0);
    CHECK(row.entries[1] == 1);
    CHECK(row.entries[static_cast<size_t>(k)] == 1);
  }
}

// sum_j {k j} (x)_j must reproduce x^k; the oracle side is a plain integer
// power, fully independent of the recurrence.
TEST_CASE("partition identity against direct powers") {
  const StirlingRow r10 = stirling_row(10);
  Natural sum = 0;
  for (int j = 0; j <= 10; ++j) {
    sum += r10.entries[static_cast<size_t>(j)] * falling_factorial(5, j);
  }
  CHECK(sum == natural_pow(5, 10));
  CHECK(sum == 9765625);

  for (int k : {1, 2, 3, 7, 19, 40, 60}) {
    const StirlingRow row = stirling_row(k);
    for (int x = 0; x <= 12; ++x) {
      Natural total = 0;
      for (int j = 0; j <= k; ++j) {
        total += row.entries[static_cast<size_t>(j)] * falling_factorial(x, j);
      }
      CHECK(total == natural_pow(Natural(x), static_cast<unsigned long>(k)));
    }
  }
}

TEST_CASE("falling factorial") {
  CHECK(falling_factorial(5, 2) == 20);
  CHECK(falling_factorial(7, 0) == 1);
  CHECK(falling_factorial(0, 0) == 1);
  CHECK(falling_factorial(3, 4) == 0);  // factor (3 - 3) = 0
  CHECK(falling_factorial(3, 3) == 6);
  CHECK(falling_factorial(100, 1) == 100);
}

TEST_CASE("binomial coefficients") {
  CHECK(binomial_coefficient(10, 3) == 120);
  CHECK(binomial_coefficient(10, 0) == 1);
  CHECK(binomial_coefficient(3, 5) == 0);
  CHECK(binomial_coefficient(60, 30) == Natural("118264581564861424"));
}
