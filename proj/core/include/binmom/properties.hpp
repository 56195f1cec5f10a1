#pragma once

#include "binmom/combinatorics.hpp"
#include "binmom/rational.hpp"

namespace binmom {

// Result of the log-concavity inequality j {k j}/{k j-1} >= (j+1) {k j+1}/{k j}
// for 2 <= j <= k-1, checked by exact integer cross-multiplication.
// first_violation is the smallest offending j, or -1 when the inequality holds.
struct KlanerCheck {
  int k = 0;
  bool holds = true;
  long first_violation = -1;
};

KlanerCheck klaner_check(int k);  // k >= 3
KlanerCheck klaner_check(const StirlingRow& row);

// Per-(k, n, p) verdict on the three coefficient sequences
//   {k j},  {k j}(n)_j,  {k j}(n)_j p^j    over 1 <= j <= min(k, n).
// Each unimodal_* flag reports exact log-concavity plus a direct
// rise-then-fall scan of the sequence. mode_index is the position of the
// maximum of the third sequence (smallest index among ties). All flags are
// provably true; a false value signals a defect in the exact layer.
struct PropertyReport {
  int k = 0;
  long n = 0;
  Rational p;
  bool klaner_holds = true;
  bool unimodal_stirling = true;
  bool unimodal_with_falling = true;
  bool unimodal_with_p = true;
  long mode_index = 0;
};

// Requires k, n >= 1 and p in (0, 1].
PropertyReport unimodality_check(int k, long n, const Rational& p);

}  // namespace binmom
