#pragma once

namespace binmom {

// The two real branches of the Lambert W function, the inverse of x e^x.
// principal: defined on x >= -1/e, values >= -1.
// minus_one: defined on -1/e <= x < 0, values <= -1.
enum class WBranch { principal, minus_one };

// Halley iteration from a branch-appropriate initial guess. The result w
// satisfies |w e^w - x| <= 1e-12 * max(|x|, 1). Inputs within 1e-15 below
// -1/e are clamped to the branch point; anything further out (or x >= 0 on
// the minus_one branch) throws std::domain_error.
double lambert_w(WBranch branch, double x);

double lambert_w0(double x);
double lambert_wm1(double x);

}  // namespace binmom
