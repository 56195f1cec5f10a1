#include "support/highprec.hpp"

#include <mpfr.h>

namespace binmom::testsupport {

namespace {

class Real {
 public:
  Real() { mpfr_init2(v_, kOracleBits); }
  explicit Real(double x) : Real() { mpfr_set_d(v_, x, MPFR_RNDN); }
  explicit Real(long x) : Real() { mpfr_set_si(v_, x, MPFR_RNDN); }
  Real(const Real& other) : Real() { mpfr_set(v_, other.v_, MPFR_RNDN); }
  Real& operator=(const Real& other) {
    mpfr_set(v_, other.v_, MPFR_RNDN);
    return *this;
  }
  ~Real() { mpfr_clear(v_); }

  static Real from_integer(const Integer& z) {
    Real r;
    mpfr_set_z(r.v_, z.get_mpz_t(), MPFR_RNDN);
    return r;
  }
  static Real from_rational(const Rational& q) {
    Real r;
    mpfr_set_q(r.v_, q.get_mpq_t(), MPFR_RNDN);
    return r;
  }

  Real log() const {
    Real r;
    mpfr_log(r.v_, v_, MPFR_RNDN);
    return r;
  }
  Real exp() const {
    Real r;
    mpfr_exp(r.v_, v_, MPFR_RNDN);
    return r;
  }
  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

  friend Real operator+(const Real& a, const Real& b) {
    Real r;
    mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
  }
  friend Real operator-(const Real& a, const Real& b) {
    Real r;
    mpfr_sub(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
  }
  friend Real operator*(const Real& a, const Real& b) {
    Real r;
    mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
  }
  friend Real operator/(const Real& a, const Real& b) {
    Real r;
    mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
  }

 private:
  mpfr_t v_;
};

}  // namespace

double log_rational_highprec(const Rational& x) {
  const Real num = Real::from_integer(Integer(x.get_num()));
  const Real den = Real::from_integer(Integer(x.get_den()));
  return (num.log() - den.log()).to_double();
}

double ahle_log_highprec(long n, const Rational& p, long k) {
  const Real kd(k);
  const Real np = Real(n) * Real::from_rational(p);
  const Real inner = (Real(1.0) + kd / np).log();
  return (kd * (kd.log() - inner.log())).to_double();
}

double psi_at_chi_highprec(double chi, double beta, double p) {
  const Real one(1.0);
  const Real c(chi), b(beta), pp(p);
  const Real e_chi = c.exp();
  const Real tau = (one - one / e_chi) / c;
  const Real psi = tau * (e_chi - one).log() - c.log() + tau * (b / tau - one).log() -
                   b * (one - tau / b).log() + tau * pp.log() - one;
  return psi.to_double();
}

}  // namespace binmom::testsupport
