#pragma once

#include "binmom/rational.hpp"

// Test-only oracles computed with MPFR at ~210 decimal digits. These stay
// independent of the double-precision paths they are used to check.
namespace binmom::testsupport {

inline constexpr int kOracleBits = 700;

// Natural log of a positive exact rational.
double log_rational_highprec(const Rational& x);

// k (log k - log log(1 + k/(n p))) evaluated in high precision.
double ahle_log_highprec(long n, const Rational& p, long k);

// The growth-rate integrand
//   psi = tau log(e^chi - 1) - log chi + tau log(beta/tau - 1)
//         - beta log(1 - tau/beta) + tau log p - 1,  tau = (1 - e^-chi)/chi,
// evaluated in high precision at a given chi. Near the maximizer the value
// is second-order insensitive to chi, so a double chi loses nothing.
double psi_at_chi_highprec(double chi, double beta, double p);

}  // namespace binmom::testsupport
