#pragma once

// ln Gamma, zeta, the Riemann-Xi function on the real axis, unit-sphere
// surface areas, and the elementary sandwiches used to bound them.

#include <array>
#include <cmath>
#include <numbers>

#include "lllcount/errors.hpp"
#include "lllcount/log_real.hpp"

namespace lllcount {

struct SandwichPair {
  LogReal lower;
  LogReal upper;

  bool contains(const LogReal& v) const { return lower < v && v < upper; }
};

namespace detail {

// B_{2k} for k = 1..8.
inline constexpr std::array<double, 8> kBernoulliEven = {
    1.0 / 6.0,        -1.0 / 30.0, 1.0 / 42.0,   -1.0 / 30.0,
    5.0 / 66.0, -691.0 / 2730.0,  7.0 / 6.0, -3617.0 / 510.0};

inline constexpr double kStirlingShift = 15.0;

// Stirling series for x >= kStirlingShift; the first omitted term is below 1e-19.
inline double log_gamma_stirling(double x) {
  const double inv = 1.0 / x;
  const double inv2 = inv * inv;
  double series = 0.0;
  double power = inv;
  for (std::size_t k = 1; k <= 7; ++k) {
    const double two_k = 2.0 * static_cast<double>(k);
    series += kBernoulliEven[k - 1] / (two_k * (two_k - 1.0)) * power;
    power *= inv2;
  }
  return (x - 0.5) * std::log(x) - x + 0.5 * std::log(2.0 * std::numbers::pi) + series;
}

}  // namespace detail

// ln Gamma(x) for x > 0.
inline double log_gamma(double x) {
  detail::require(std::isfinite(x) && x > 0.0, "log_gamma: argument must be positive and finite");
  if (x >= detail::kStirlingShift) return detail::log_gamma_stirling(x);
  // Gamma(x) = Gamma(x + k) / (x (x+1) ... (x+k-1)); the product stays far below overflow.
  double shifted = x;
  double product = 1.0;
  while (shifted < detail::kStirlingShift) {
    product *= shifted;
    shifted += 1.0;
  }
  return detail::log_gamma_stirling(shifted) - std::log(product);
}

// zeta(s) - 1 for real s >= 2: partial sum over 2..N-1 plus the
// Euler-Maclaurin tail N^{1-s}/(s-1) + N^{-s}/2 + Bernoulli corrections.
// Truncation error is below 1e-17 for every s >= 2.
inline double zeta_minus_one(double s) {
  detail::require(std::isfinite(s) && s >= 2.0, "zeta: requires s >= 2");
  constexpr int kTerms = 16;
  const double n = kTerms;
  double head = 0.0;
  for (int k = kTerms - 1; k >= 2; --k) head += std::pow(static_cast<double>(k), -s);

  const double n_pow = std::pow(n, -s);
  double tail = n * n_pow / (s - 1.0) + 0.5 * n_pow;
  // rising = s (s+1) ... (s+2j-2); factorial = (2j)!
  double rising = s;
  double factorial = 2.0;
  double n_term = n_pow / n;
  for (std::size_t j = 1; j <= 7; ++j) {
    tail += detail::kBernoulliEven[j - 1] / factorial * rising * n_term;
    const double two_j = 2.0 * static_cast<double>(j);
    rising *= (s + two_j - 1.0) * (s + two_j);
    factorial *= (two_j + 1.0) * (two_j + 2.0);
    n_term /= n * n;
  }
  return head + tail;
}

inline double zeta(double s) { return 1.0 + zeta_minus_one(s); }

// 1 < zeta(s) < 1 + 1/(s-1), from comparing the series with its integral.
inline SandwichPair zeta_bounds(double s) {
  detail::require(s > 1.0, "zeta_bounds: requires s > 1");
  return {LogReal::one(), LogReal::from_log(std::log1p(1.0 / (s - 1.0)))};
}

// Batir-type bounds on Gamma(s/2):
//   sqrt(pi) ((s-2)/(2e))^{(s-2)/2} (s-2)^{1/2} < Gamma(s/2)
//     < sqrt(pi) ((s-2)/(2e))^{(s-2)/2} (s-1)^{1/2}
// Defined for s >= 3; verified to bracket for s >= 6.
inline SandwichPair gamma_bounds(double s) {
  detail::require(s >= 3.0, "gamma_bounds: requires s >= 3");
  const double half_ln_pi = 0.5 * std::log(std::numbers::pi);
  const double core = half_ln_pi + 0.5 * (s - 2.0) * (std::log(s - 2.0) - std::numbers::ln2 - 1.0);
  return {LogReal::from_log(core + 0.5 * std::log(s - 2.0)),
          LogReal::from_log(core + 0.5 * std::log(s - 1.0))};
}

// ln xi(s), xi(s) = s (s-1) pi^{-s/2} Gamma(s/2) zeta(s) / 2.
inline double log_xi(double s) {
  detail::require(std::isfinite(s) && s >= 2.0, "xi: requires s >= 2");
  return -std::numbers::ln2 + std::log(s) + std::log(s - 1.0) -
         0.5 * s * std::log(std::numbers::pi) + log_gamma(0.5 * s) + std::log1p(zeta_minus_one(s));
}

inline LogReal xi(double s) { return LogReal::from_log(log_xi(s)); }

// Bounds on xi(s) obtained by inserting the Gamma and zeta sandwiches.
inline SandwichPair xi_bounds(double s) {
  detail::require(s >= 3.0, "xi_bounds: requires s >= 3");
  const SandwichPair g = gamma_bounds(s);
  const SandwichPair z = zeta_bounds(s);
  const double prefactor = -std::numbers::ln2 + std::log(s) + std::log(s - 1.0) -
                           0.5 * s * std::log(std::numbers::pi);
  return {LogReal::from_log(prefactor + g.lower.ln_abs() + z.lower.ln_abs()),
          LogReal::from_log(prefactor + g.upper.ln_abs() + z.upper.ln_abs())};
}

// Weakened closed forms of xi_bounds, valid for s >= 6:
//   (s-2)^{(s+3)/2} (2 pi e)^{-(s-2)/2} / (2 sqrt(pi)) < xi(s)
//     < (s-1)^{(s+3)/2} (2 pi e)^{-(s-2)/2} / (2 sqrt(pi))
inline SandwichPair xi_bounds_weakened(double s) {
  detail::require(s >= 6.0, "xi_bounds_weakened: requires s >= 6");
  const double ln_2pie = std::log(2.0 * std::numbers::pi) + 1.0;
  const double common = -std::numbers::ln2 - 0.5 * std::log(std::numbers::pi) - 0.5 * (s - 2.0) * ln_2pie;
  return {LogReal::from_log(common + 0.5 * (s + 3.0) * std::log(s - 2.0)),
          LogReal::from_log(common + 0.5 * (s + 3.0) * std::log(s - 1.0))};
}

// ln prod_{s=2}^{n} 1/xi(s).
inline double xi_inv_prod_log(int n) {
  detail::require(n >= 2, "xi_inv_prod_log: requires n >= 2");
  double sum = 0.0;
  for (int s = 2; s <= n; ++s) sum -= log_xi(s);
  return sum;
}

// ln S_i(1) = ln(2 pi^{i/2} / Gamma(i/2)), the unit sphere's surface area in R^i.
inline double sphere_surface_log(int i) {
  detail::require(i >= 1, "sphere_surface_log: requires i >= 1");
  return std::numbers::ln2 + 0.5 * i * std::log(std::numbers::pi) - log_gamma(0.5 * i);
}

}  // namespace lllcount
