#pragma once

// Numerical constants that appear in the Xi-product bounds, both as printed
// (used verbatim inside the bound formulas) and recomputed from the closed
// forms they abbreviate.

#include <algorithm>
#include <cmath>
#include <numbers>

#include "lllcount/special_functions.hpp"

namespace lllcount {

namespace printed {

// Lower bound on the (s-1)^{-(s+3)/2} product: 25/4 ln5 - 25/8 + 10 ln5 - 10.
inline constexpr double kXiLowerIntegral = 13.0284;
// Upper bound on the (s-2)^{-(s+3)/2} product: 9/4 ln3 - 9/8 + 15/2 ln3 - 15/2.
inline constexpr double kXiUpperIntegral = 2.08647;
// Constant term of the simplified lower bound, without prod_{s<=5} 1/xi(s).
inline constexpr double kXiLowerConst = 0.9924;
// Enters the simplified upper bound as -11.4495.
inline constexpr double kXiUpperConst = 11.4495;
// ln prod_{s=2}^{5} 1/xi(s).
inline constexpr double kXiInvProd2to5 = 1.85914510535951;
// kXiLowerConst + kXiInvProd2to5.
inline constexpr double kXiLowerLemmaConst = 2.8515;
// Enters the Xi-prefactor upper bound and everything built on it as -9.5903.
inline constexpr double kXiUpperLemmaConst = 9.5903;

}  // namespace printed

namespace recomputed {

inline double xi_lower_integral() {
  const double ln5 = std::log(5.0);
  return 25.0 / 4.0 * ln5 - 25.0 / 8.0 + 10.0 * ln5 - 10.0;
}

inline double xi_upper_integral() {
  const double ln3 = std::log(3.0);
  return 9.0 / 4.0 * ln3 - 9.0 / 8.0 + 15.0 / 2.0 * ln3 - 15.0 / 2.0;
}

// Constant term of ln[(2 sqrt pi)^{n-5} (2 pi e)^{(n^2-3n-10)/4} 2^{(n^2-3n+4)/2}
// eta^{(n-1)(n-2)/2}] apart from ln eta: -11/2 ln2 - 5 ln pi - 5/2.
inline double prefactor_constant() {
  return -5.5 * std::numbers::ln2 - 5.0 * std::log(std::numbers::pi) - 2.5;
}

inline double xi_lower_const() { return xi_lower_integral() + prefactor_constant(); }

// Excess of
//   -n^2/4 ln(n-2) - 3n/2 ln(n-2) + 4 ln(n-2) - 9/2
// over
//   -n^2/4 ln n - 3n/2 ln n + n/2 + 4 ln n
// at dimension n. Replacing ln(n-2) by ln n costs exactly this much.
inline double log_shift_excess(double n) {
  const double gap = -std::log1p(-2.0 / n);  // ln n - ln(n-2)
  // n^2/4 (gap - 2/n) evaluated as a series to avoid cancelling n/2.
  const double x = 2.0 / n;
  double series = 0.0;
  double power = x * x;
  for (int k = 2; k < 40; ++k) {
    series += power / k;
    power *= x;
  }
  return 0.25 * n * n * series + 1.5 * n * gap - 4.0 * gap - 4.5;
}

// Smallest constant that makes the ln(n-2) -> ln n step valid for every
// n >= 22. The excess increases monotonically towards its limit -1.
inline double log_shift_constant() {
  double worst = -1.0;
  for (int n = 22; n <= 100000; ++n) worst = std::max(worst, log_shift_excess(n));
  return worst;
}

// The printed chain uses -3/2 for the step constant.
inline double xi_upper_const_printed_chain() {
  return -(-1.5 + xi_upper_integral() + prefactor_constant());
}

inline double xi_upper_const() {
  return -(log_shift_constant() + xi_upper_integral() + prefactor_constant());
}

inline double xi_inv_prod_2to5() { return xi_inv_prod_log(5); }

inline double xi_lower_lemma_const() { return xi_lower_const() + xi_inv_prod_2to5(); }

inline double xi_upper_lemma_const() { return xi_upper_const() - xi_inv_prod_2to5(); }

}  // namespace recomputed

}  // namespace lllcount
