#include "binmom/lambert.hpp"

#include <cmath>
#include <stdexcept>

namespace binmom {

namespace {

// 1/e rounded to double; the branch point is x = -kInvE.
constexpr double kInvE = 0.36787944117144233;
constexpr double kBranchClamp = 1e-15;
constexpr int kMaxIterations = 60;
constexpr double kStepTolerance = 1e-14;

// Series around the branch point in q = sqrt(2(1 + e x)); the top sign
// gives W0, the bottom one W-1.
double branch_point_series(double q, bool principal) {
  const double s = principal ? q : -q;
  return -1.0 + s * (1.0 - s / 3.0 + (11.0 / 72.0) * s * s);
}

double halley(double x, double w) {
  for (int i = 0; i < kMaxIterations; ++i) {
    const double ew = std::exp(w);
    const double f = w * ew - x;
    if (f == 0.0) break;
    const double wp1 = w + 1.0;
    const double step = f / (ew * wp1 - (w + 2.0) * f / (2.0 * wp1));
    w -= step;
    if (std::abs(step) <= kStepTolerance * std::max(std::abs(w), 1e-300)) break;
  }
  return w;
}

double w0_initial_guess(double x) {
  if (x < -0.30) {
    const double q = std::sqrt(2.0 * M_E * (x + kInvE));
    return branch_point_series(q, true);
  }
  // Winitzki's closed-form approximation, good over the whole range.
  const double l = std::log1p(x);
  return l * (1.0 - std::log1p(l) / (2.0 + l));
}

double wm1_initial_guess(double x) {
  if (x < -0.25) {
    const double q = std::sqrt(2.0 * M_E * (x + kInvE));
    return branch_point_series(q, false);
  }
  // Asymptotic form for x -> 0-.
  const double l1 = std::log(-x);
  const double l2 = std::log(-l1);
  return l1 - l2 + l2 / l1;
}

}  // namespace

double lambert_w0(double x) {
  if (std::isnan(x)) throw std::domain_error("lambert_w0: x is NaN");
  if (x < -kInvE) {
    if (x < -kInvE - kBranchClamp) {
      throw std::domain_error("lambert_w0: x below -1/e");
    }
    return -1.0;  // grazed the branch point through rounding
  }
  if (x == 0.0) return 0.0;

  const double q = std::sqrt(2.0 * M_E * (x + kInvE));
  if (q < 1e-4) return branch_point_series(q, true);

  return halley(x, w0_initial_guess(x));
}

double lambert_wm1(double x) {
  if (std::isnan(x)) throw std::domain_error("lambert_wm1: x is NaN");
  if (x >= 0.0) throw std::domain_error("lambert_wm1: branch requires x < 0");
  if (x < -kInvE) {
    if (x < -kInvE - kBranchClamp) {
      throw std::domain_error("lambert_wm1: x below -1/e");
    }
    return -1.0;
  }

  const double q = std::sqrt(2.0 * M_E * (x + kInvE));
  if (q < 1e-4) return branch_point_series(q, false);

  return halley(x, wm1_initial_guess(x));
}

double lambert_w(WBranch branch, double x) {
  return branch == WBranch::principal ? lambert_w0(x) : lambert_wm1(x);
}

}  // namespace binmom
