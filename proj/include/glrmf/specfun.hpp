#pragma once

#include "glrmf/errors.hpp"

namespace glrmf {

// Exponential integrals Ei and E1 with an attached absolute error estimate.
// Target accuracy is 1e-12 relative (est_abs_error <= 1e-12 * max(1,|value|)
// on the supported domain); the rate solver budgets against these estimates.
struct EiResult {
  double value = 0.0;
  double est_abs_error = 0.0;
};

// Principal-value exponential integral Ei(x).
// Domain: x != 0 (DomainZero), |x| <= 700 (Overflow). For x < 0 this is
// -E1(-x) by the reflection identity, exact by construction.
EiResult ei(double x);

// E1(x) = \int_x^inf e^{-t}/t dt for x > 0 (DomainNonPositive otherwise).
// Graceful underflow for very large x; no upper domain guard needed.
EiResult e1(double x);

// Scaled variants, stable for arbitrarily large |x| (no exp overflow):
//   ei_scaled(x) = e^{-x} Ei(x),  x != 0
//   e1_scaled(x) = e^{x} E1(x),   x > 0
// The rate solver works exclusively through these when w/a is large.
double ei_scaled(double x);
double e1_scaled(double x);

// Euler-Mascheroni constant, shared with the small-argument limits.
inline constexpr double kEulerGamma = 0.5772156649015328606065120900824024;

}  // namespace glrmf
