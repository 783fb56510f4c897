#pragma once

// Integrals of powers of sec on [0, phi] and the weight integrals
//   int_{-eta}^{eta} (delta^2 - x^2)^{-k/2} dx = 2 delta^{1-k} int_0^phi sec^{k-1},
// with phi = arcsin(eta/delta).
//
// Exact values come from the reduction
//   I_m = sec^{m-2}(phi) tan(phi) / (m-1) + (m-2)/(m-1) I_{m-2},
// run upward from I_0 = phi and I_1 = ln(sec phi + tan phi). Every term is
// positive so the ln-domain accumulation never cancels.

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "lllcount/errors.hpp"
#include "lllcount/log_real.hpp"

namespace lllcount {

// Inputs with cos(phi) below this are rejected: ln t diverges as eta/delta -> 1.
inline constexpr double kMinCosPhi = 1e-8;

struct DerivedParams {
  double ratio;  // eta / delta
  double phi;    // arcsin(eta / delta)
  double t;      // cos(phi)
  double a;      // t^n, may underflow to 0; use ln_a
  double ln_t;
  double ln_a;
};

inline DerivedParams derive_params(int n, double eta, double delta) {
  detail::require(std::isfinite(eta) && std::isfinite(delta), "derive_params: non-finite input");
  detail::require(eta > 0.0 && delta > 0.0, "derive_params: eta and delta must be positive");
  detail::require(eta < delta, "derive_params: requires eta < delta");
  detail::require(n >= 1, "derive_params: requires n >= 1");
  const double r = eta / delta;
  const double ln_t = 0.5 * std::log1p(-r * r);
  const double t = std::exp(ln_t);
  detail::require(t >= kMinCosPhi, "derive_params: eta/delta too close to 1");
  const double ln_a = n * ln_t;
  return {r, std::asin(r), t, std::exp(ln_a), ln_t, ln_a};
}

// ln I_m for every m in [0, m_max] at a fixed angle.
class SecantIntegralTable {
 public:
  SecantIntegralTable(double phi, int m_max) : phi_(phi) {
    check_angle(phi);
    detail::require(m_max >= 0, "SecantIntegralTable: m_max must be >= 0");
    const double ln_sec = -std::log(std::cos(phi));
    const double ln_tan = std::log(std::tan(phi));
    values_.resize(static_cast<std::size_t>(m_max) + 1);
    values_[0] = std::log(phi);
    if (m_max >= 1) values_[1] = std::log(std::asinh(std::tan(phi)));  // ln(sec + tan) = asinh(tan)
    for (int m = 2; m <= m_max; ++m) {
      const double boundary = (m - 2) * ln_sec + ln_tan - std::log(m - 1.0);
      if (m == 2) {
        values_[2] = boundary;
        continue;
      }
      const double carried = values_[m - 2] + std::log((m - 2.0) / (m - 1.0));
      values_[m] = log_add_exp(boundary, carried);
    }
  }

  double phi() const noexcept { return phi_; }
  int max_order() const noexcept { return static_cast<int>(values_.size()) - 1; }

  double log_integral(int m) const {
    detail::require(m >= 0 && m <= max_order(), "SecantIntegralTable: order out of range");
    return values_[static_cast<std::size_t>(m)];
  }

  static void check_angle(double phi) {
    detail::require(std::isfinite(phi) && phi > 0.0 && phi < 0.5 * std::numbers::pi,
                    "secant integral: requires 0 < phi < pi/2");
    detail::require(std::cos(phi) >= kMinCosPhi, "secant integral: phi too close to pi/2");
  }

 private:
  double phi_;
  std::vector<double> values_;
};

// ln int_0^phi sec^m(theta) d theta.
inline double sec_integral_log(int m, double phi) {
  detail::require(m >= 0, "sec_integral_log: requires m >= 0");
  return SecantIntegralTable(phi, m).log_integral(m);
}

inline constexpr int kQuadratureMaxOrder = 500;

// Independent check of sec_integral_log by adaptive Gauss-Kronrod quadrature.
// The integrand is normalised by its maximum sec^m(phi) so it stays in [0, 1].
inline double quadrature_oracle_log(int m, double phi) {
  SecantIntegralTable::check_angle(phi);
  detail::require(m >= 0 && m <= kQuadratureMaxOrder,
                  "quadrature_oracle_log: order outside certified range [0, 500]");
  if (m == 0) return std::log(phi);
  const double ln_sec_phi = -std::log(std::cos(phi));
  auto integrand = [m, ln_sec_phi](double theta) {
    return std::exp(m * (-std::log(std::cos(theta)) - ln_sec_phi));
  };
  double error = 0.0;
  const double value = boost::math::quadrature::gauss_kronrod<double, 31>::integrate(
      integrand, 0.0, phi, 15, 1e-13, &error);
  return m * ln_sec_phi + std::log(value);
}

namespace detail {

inline double weight_integral_from_table(const SecantIntegralTable& table, int m_exp, double delta) {
  return std::numbers::ln2 + (1.0 - m_exp) * std::log(delta) + table.log_integral(m_exp - 1);
}

inline int max_secant_order(int n) {
  // max_i i(n-i) - 1, attained at i = n/2.
  const int half = n / 2;
  return half * (n - half) - 1;
}

}  // namespace detail

// ln int_{-eta}^{eta} (delta^2 - x^2)^{-m_exp/2} dx.
inline double weight_integral_log(int m_exp, double eta, double delta) {
  detail::require(m_exp >= 1, "weight_integral_log: requires m_exp >= 1");
  const DerivedParams d = derive_params(1, eta, delta);
  return detail::weight_integral_from_table(SecantIntegralTable(d.phi, m_exp - 1), m_exp, delta);
}

// ln prod_{i=1}^{n-1} int_{-eta}^{eta} (delta^2 - x^2)^{-i(n-i)/2} dx.
inline double product_integrals_log(int n, double eta, double delta) {
  detail::require(n >= 2, "product_integrals_log: requires n >= 2");
  const DerivedParams d = derive_params(n, eta, delta);
  const SecantIntegralTable table(d.phi, detail::max_secant_order(n));
  double sum = 0.0;
  for (int i = 1; i < n; ++i) sum += detail::weight_integral_from_table(table, i * (n - i), delta);
  return sum;
}

// ln prod_{i=1}^{n-1} int_0^phi sec^{i(n-i)-1}, the angular part alone.
inline double sec_product_log(int n, double eta, double delta) {
  detail::require(n >= 2, "sec_product_log: requires n >= 2");
  const DerivedParams d = derive_params(n, eta, delta);
  const SecantIntegralTable table(d.phi, detail::max_secant_order(n));
  double sum = 0.0;
  for (int i = 1; i < n; ++i) sum += table.log_integral(i * (n - i) - 1);
  return sum;
}

// ln of the factor 2^{n-1} delta^{(n-1) - sum_i i(n-i)} that separates
// product_integrals_log from sec_product_log.
inline double change_of_variables_log(int n, double delta) {
  detail::require(n >= 2 && delta > 0.0, "change_of_variables_log: invalid arguments");
  const double sum_weights = static_cast<double>(n - 1) * n * (n + 1) / 6.0;
  return (n - 1) * std::numbers::ln2 + ((n - 1) - sum_weights) * std::log(delta);
}

}  // namespace lllcount
