#pragma once

// The average number of (delta, eta)-LLL bases in dimension n, evaluated in
// two algebraically equal forms:
//
//   direct: 2 (2 eta)^{(n-1)(n-2)/2} prod_{i=2}^{n} S_i(1)/zeta(i)
//           * (1/n) prod_{i=1}^{n-1} 1/(i(n-i)) * prod_{i=1}^{n-1} W_{i(n-i)}
//   xi:     2^{(n^2-3n+4)/2} eta^{(n-1)(n-2)/2} prod_{i=2}^{n} 1/xi(i)
//           * prod_{i=1}^{n-1} W_{i(n-i)}
//
// where W_k = int_{-eta}^{eta} (delta^2 - x^2)^{-k/2} dx. All results are ln values.

#include <cmath>
#include <numbers>
#include <string>
#include <string_view>
#include <vector>

#include "lllcount/errors.hpp"
#include "lllcount/secant_integrals.hpp"
#include "lllcount/special_functions.hpp"

namespace lllcount {

enum class Regime {
  General,     // n >= 2, 0 < eta < delta
  PaperBound,  // n >= 22 inside the LLL definition domain 1/2 < eta < delta < 1
  Restricted,  // PaperBound and 1/2 < eta < 3/(4 sqrt 2), 3/4 < delta < 1
};

inline std::string_view to_string(Regime r) {
  switch (r) {
    case Regime::General: return "general";
    case Regime::PaperBound: return "paper_bound";
    case Regime::Restricted: return "restricted";
  }
  return "unknown";
}

inline constexpr int kBoundMinDimension = 22;
inline const double kRestrictedEtaMax = 3.0 / (4.0 * std::numbers::sqrt2);

struct ReductionParams {
  int n;
  double eta;
  double delta;

  ReductionParams(int n_, double eta_, double delta_) : n(n_), eta(eta_), delta(delta_) {
    detail::require(n >= 2, "ReductionParams: requires n >= 2");
    detail::require(std::isfinite(eta) && std::isfinite(delta), "ReductionParams: non-finite parameter");
    detail::require(eta > 0.0 && eta < delta, "ReductionParams: requires 0 < eta < delta");
  }

  // 1/2 < delta < 1 and 1/2 < eta < delta.
  bool in_definition_domain() const { return delta > 0.5 && delta < 1.0 && eta > 0.5 && eta < delta; }

  bool in_restricted_domain() const {
    return in_definition_domain() && eta < kRestrictedEtaMax && delta > 0.75;
  }

  Regime regime() const {
    if (n < kBoundMinDimension || !in_definition_domain()) return Regime::General;
    return in_restricted_domain() ? Regime::Restricted : Regime::PaperBound;
  }

  std::vector<std::string> warnings() const {
    std::vector<std::string> out;
    if (!in_definition_domain())
      out.emplace_back("parameters outside the LLL definition domain 1/2 < eta < delta < 1");
    if (n < kBoundMinDimension) out.emplace_back("n < 22: analytic bounds do not apply");
    return out;
  }
};

// ln 2 (2 eta)^{(n-1)(n-2)/2} prod S_i(1)/zeta(i) / (n prod i(n-i)).
inline double direct_prefactor_log(int n, double eta) {
  detail::require(n >= 2 && eta > 0.0, "direct_prefactor_log: requires n >= 2, eta > 0");
  const double pairs = 0.5 * (n - 1.0) * (n - 2.0);
  double value = std::numbers::ln2 + pairs * std::log(2.0 * eta);
  for (int i = 2; i <= n; ++i) value += sphere_surface_log(i) - std::log1p(zeta_minus_one(i));
  value -= std::log(static_cast<double>(n));
  for (int i = 1; i < n; ++i) value -= std::log(static_cast<double>(i) * (n - i));
  return value;
}

// ln of the direct (sphere area / zeta) form.
inline double exact_log_count_direct(const ReductionParams& p) {
  return direct_prefactor_log(p.n, p.eta) + product_integrals_log(p.n, p.eta, p.delta);
}

// ln 2^{(n^2-3n+4)/2} eta^{(n-1)(n-2)/2} prod 1/xi, given a per-s ln xi evaluator.
template <class LogXi>
double xi_prefactor_log(int n, double eta, LogXi&& log_xi_fn) {
  double value = 0.5 * (static_cast<double>(n) * n - 3.0 * n + 4.0) * std::numbers::ln2 +
                 0.5 * (n - 1.0) * (n - 2.0) * std::log(eta);
  for (int s = 2; s <= n; ++s) value -= log_xi_fn(s);
  return value;
}

inline double xi_prefactor_log(int n, double eta) {
  return xi_prefactor_log(n, eta, [](int s) { return log_xi(s); });
}

// ln of the Riemann-Xi form, with an injectable ln xi (used to corrupt xi in negative controls).
template <class LogXi>
double exact_log_count_xi(const ReductionParams& p, LogXi&& log_xi_fn) {
  return xi_prefactor_log(p.n, p.eta, log_xi_fn) + product_integrals_log(p.n, p.eta, p.delta);
}

inline double exact_log_count_xi(const ReductionParams& p) {
  return exact_log_count_xi(p, [](int s) { return log_xi(s); });
}

// The count divided by 2^n (sign symmetry of shortest vectors).
inline double normalized_log_count(const ReductionParams& p) {
  return exact_log_count_xi(p) - p.n * std::numbers::ln2;
}

struct ConsistencyReport {
  double direct_ln;
  double xi_ln;
  double difference;  // |direct - xi| in the ln domain
  double tolerance;
  bool passed;
};

template <class LogXi>
ConsistencyReport consistency_check(const ReductionParams& p, double tol, LogXi&& log_xi_fn) {
  const double direct = exact_log_count_direct(p);
  const double xi_form = exact_log_count_xi(p, log_xi_fn);
  const double diff = std::fabs(direct - xi_form);
  return {direct, xi_form, diff, tol, diff <= tol};
}

inline ConsistencyReport consistency_check(const ReductionParams& p, double tol) {
  return consistency_check(p, tol, [](int s) { return log_xi(s); });
}

}  // namespace lllcount
