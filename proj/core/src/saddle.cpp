#include "binmom/saddle.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "binmom/lambert.hpp"

namespace binmom {

namespace {

constexpr double kTauGuard = 1e-9;

// log(e^chi - 1) without overflow for large chi.
double log_expm1(double chi) {
  return chi + std::log1p(-std::exp(-chi));
}

double w0_argument(const AsymptoteInputs& in) {
  return std::exp(-1.0 / in.beta) * (1.0 - in.p) / (in.beta * in.p);
}

double clamp_tau(double tau, double beta) {
  const double hi = std::min(1.0, beta) - kTauGuard;
  return std::clamp(tau, kTauGuard, hi);
}

}  // namespace

void validate(const AsymptoteInputs& in) {
  if (!(in.beta > 0.0) || !std::isfinite(in.beta)) {
    throw std::domain_error("asymptote: beta must be positive and finite");
  }
  if (!(in.p > 0.0) || !(in.p < 1.0)) {
    throw std::domain_error("asymptote: p must lie strictly in (0, 1)");
  }
}

double chi_star(const AsymptoteInputs& in) {
  validate(in);
  return 1.0 / in.beta + lambert_w0(w0_argument(in));
}

double tau_star(const AsymptoteInputs& in) {
  validate(in);
  const double w = lambert_w0(w0_argument(in));
  return in.beta / (1.0 - in.p) * (1.0 / (in.beta * w + 1.0) - in.p);
}

double tau_of_chi(double chi) {
  if (!(chi > 0.0)) throw std::domain_error("tau_of_chi: chi must be > 0");
  return -std::expm1(-chi) / chi;
}

double chi_of_tau(double tau) {
  if (!(tau > 0.0) || !(tau < 1.0)) {
    throw std::domain_error("chi_of_tau: tau must lie in (0, 1)");
  }
  const double inv_tau = 1.0 / tau;
  // exp(-1/tau) underflows for tiny tau; W0(-0) = 0 and chi = 1/tau then.
  const double w = lambert_w0(-std::exp(-inv_tau) * inv_tau);
  return w + inv_tau;
}

double psi_of_tau(double tau, const AsymptoteInputs& in) {
  validate(in);
  const double upper = std::min(1.0, in.beta);
  if (!(tau > 0.0) || !(tau < upper)) {
    throw std::domain_error("psi_of_tau: tau outside (0, min(1, beta))");
  }
  tau = clamp_tau(tau, in.beta);
  const double chi = chi_of_tau(tau);
  return tau * log_expm1(chi) - std::log(chi) + tau * std::log(in.beta / tau - 1.0) -
         in.beta * std::log1p(-tau / in.beta) + tau * std::log(in.p) - 1.0;
}

double psi_prime(double tau, const AsymptoteInputs& in) {
  validate(in);
  const double upper = std::min(1.0, in.beta);
  if (!(tau > 0.0) || !(tau < upper)) {
    throw std::domain_error("psi_prime: tau outside (0, min(1, beta))");
  }
  tau = clamp_tau(tau, in.beta);
  const double chi = chi_of_tau(tau);
  return chi + std::log(chi) + std::log(in.beta - tau) + std::log(in.p);
}

SaddleSolution solve_asymptote(const AsymptoteInputs& in) {
  validate(in);
  SaddleSolution s;
  s.beta = in.beta;
  s.p = in.p;
  s.chi0 = chi_star(in);
  s.tau0 = tau_star(in);
  s.log_psi = psi_of_tau(s.tau0, in);
  s.log_psi_product = in.beta * std::log(in.beta) + s.tau0 * log_expm1(s.chi0) -
                      s.tau0 * std::log(s.tau0) -
                      (in.beta - s.tau0) * std::log(in.beta - s.tau0) - std::log(s.chi0);
  return s;
}

}  // namespace binmom
