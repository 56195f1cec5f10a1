#include "binmom/properties.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace binmom {

namespace {

// Log-concavity a_j^2 >= a_{j-1} a_{j+1} for every interior index, plus a
// rise-then-fall scan. Works for any exactly comparable positive sequence.
template <typename T>
bool log_concave_and_unimodal(const std::vector<T>& a) {
  for (size_t i = 1; i + 1 < a.size(); ++i) {
    if (a[i] * a[i] < a[i - 1] * a[i + 1]) return false;
  }
  bool falling = false;
  for (size_t i = 1; i < a.size(); ++i) {
    if (a[i] < a[i - 1]) {
      falling = true;
    } else if (a[i] > a[i - 1] && falling) {
      return false;
    }
  }
  return true;
}

template <typename T>
long mode_of(const std::vector<T>& a) {
  // smallest index among equal maxima; indices are the 1-based j
  size_t best = 0;
  for (size_t i = 1; i < a.size(); ++i) {
    if (a[i] > a[best]) best = i;
  }
  return static_cast<long>(best) + 1;
}

}  // namespace

KlanerCheck klaner_check(const StirlingRow& row) {
  KlanerCheck result{row.k, true, -1};
  // j {k j}^2 >= (j+1) {k j+1} {k j-1}, cross-multiplied form
  for (long j = 2; j + 1 <= row.k; ++j) {
    const Natural& mid = row.entries[static_cast<size_t>(j)];
    const Natural lhs = j * mid * mid;
    const Natural rhs = (j + 1) * row.entries[static_cast<size_t>(j + 1)] *
                        row.entries[static_cast<size_t>(j - 1)];
    if (lhs < rhs) {
      result.holds = false;
      result.first_violation = j;
      break;
    }
  }
  return result;
}

KlanerCheck klaner_check(int k) {
  if (k < 3) throw std::domain_error("klaner_check: k must be >= 3");
  return klaner_check(stirling_row(k));
}

PropertyReport unimodality_check(int k, long n, const Rational& p) {
  if (k < 1 || n < 1) throw std::domain_error("unimodality_check: k and n must be >= 1");
  if (p <= 0 || p > 1) throw std::domain_error("unimodality_check: p must lie in (0, 1]");

  const StirlingRow row = stirling_row(k);
  const long jmax = std::min<long>(k, n);

  std::vector<Natural> stirling(row.entries.begin() + 1, row.entries.end());
  std::vector<Natural> with_falling;
  std::vector<Rational> with_p;
  with_falling.reserve(static_cast<size_t>(jmax));
  with_p.reserve(static_cast<size_t>(jmax));
  Natural falling = 1;
  Rational p_pow = 1;
  for (long j = 1; j <= jmax; ++j) {
    falling *= Natural(n - j + 1);
    p_pow *= p;
    with_falling.push_back(row.entries[static_cast<size_t>(j)] * falling);
    with_p.push_back(Rational(with_falling.back()) * p_pow);
  }

  PropertyReport report;
  report.k = k;
  report.n = n;
  report.p = p;
  report.klaner_holds = k < 3 || klaner_check(row).holds;
  report.unimodal_stirling = log_concave_and_unimodal(stirling);
  report.unimodal_with_falling = log_concave_and_unimodal(with_falling);
  report.unimodal_with_p = log_concave_and_unimodal(with_p);
  report.mode_index = mode_of(with_p);
  return report;
}

}  // namespace binmom
