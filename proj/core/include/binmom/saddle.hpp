#pragma once

namespace binmom {

// Limit regime n = beta * k + o(k) with success probability p.
// Requires beta > 0 and p strictly inside (0, 1).
struct AsymptoteInputs {
  double beta = 1.0;
  double p = 0.5;
};

void validate(const AsymptoteInputs& inputs);

// Saddle-point solution of the growth-rate problem for E(R^k) = k^k Psi^k.
//
// log_psi is the variational value psi(tau0) and is what the library treats
// as log Psi. log_psi_product is the log of the closed-form product
// beta^beta (e^chi - 1)^tau / (tau^tau (beta - tau)^(beta - tau) chi); the
// two differ by tau0 log p - 1, i.e. by a factor p^tau0 / e, and the product
// form can exceed the hard ceiling Psi <= beta. Both are reported so the
// convergence experiment against exact moments can arbitrate.
struct SaddleSolution {
  double beta = 0.0;
  double p = 0.0;
  double chi0 = 0.0;
  double tau0 = 0.0;
  double log_psi = 0.0;
  double log_psi_product = 0.0;
};

// chi0 = 1/beta + W0(e^{-1/beta} (1-p) / (beta p)); always > 0.
double chi_star(const AsymptoteInputs& inputs);

// tau0 = beta/(1-p) * (1/(beta W0(...) + 1) - p); lies in (0, min(1, beta)).
double tau_star(const AsymptoteInputs& inputs);

// tau = (1 - e^{-chi}) / chi, mapping chi > 0 into (0, 1).
double tau_of_chi(double chi);

// Inverse of tau_of_chi on (0, 1): chi = W0(-e^{-1/tau}/tau) + 1/tau.
double chi_of_tau(double tau);

// psi(tau) = tau log(e^chi - 1) - log chi + tau log(beta/tau - 1)
//            - beta log(1 - tau/beta) + tau log p - 1, with chi = chi_of_tau(tau).
// Defined for 0 < tau < min(1, beta); vertical asymptotes at both ends.
double psi_of_tau(double tau, const AsymptoteInputs& inputs);

// psi'(tau) = chi + log chi + log(beta - tau) + log p.
double psi_prime(double tau, const AsymptoteInputs& inputs);

SaddleSolution solve_asymptote(const AsymptoteInputs& inputs);

}  // namespace binmom
