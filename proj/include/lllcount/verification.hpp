#pragma once

// Desk-scale verification of every identity and inequality the library
// implements: the two forms of the exact count agree, the secant recurrence
// matches quadrature, and each analytic bound brackets the exact value.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "lllcount/analysis.hpp"
#include "lllcount/census.hpp"
#include "lllcount/secant_integrals.hpp"
#include "lllcount/special_functions.hpp"

namespace lllcount {

struct VerifyConfig {
  int n_min = 2;
  int n_max = 60;
  double eta = 0.51;
  double delta = 0.99;
  double tol = 1e-6;  // direct-vs-xi agreement in the ln domain
  std::uint64_t seed = 20221;
  int property_samples = 10000;
};

inline constexpr double kClosedFormTol = 1e-12;
inline constexpr double kSecantOracleTol = 1e-8;
inline constexpr int kSecantOracleMaxOrder = 60;

struct VerifyItem {
  std::string name;
  bool passed = true;
  long checked = 0;
  long failures = 0;
  double max_error = 0.0;  // largest violation or discrepancy observed
  std::string detail;
};

struct VerifyReport {
  std::vector<VerifyItem> items;

  bool all_passed() const {
    return std::all_of(items.begin(), items.end(), [](const VerifyItem& i) { return i.passed; });
  }
};

namespace detail {

class ItemBuilder {
 public:
  explicit ItemBuilder(std::string name) { item_.name = std::move(name); }

  // error <= 0 means the check holds with margin -error.
  void record(bool ok, double error, const std::string& where) {
    ++item_.checked;
    item_.max_error = std::max(item_.max_error, error);
    if (!ok) {
      ++item_.failures;
      if (failures_.size() < 8) failures_.push_back(where);
    }
  }

  VerifyItem finish() {
    item_.passed = item_.failures == 0;
    std::ostringstream os;
    os << item_.checked << " checked, " << item_.failures << " failed";
    for (std::size_t i = 0; i < failures_.size(); ++i) os << (i == 0 ? ": " : "; ") << failures_[i];
    if (static_cast<std::size_t>(item_.failures) > failures_.size()) os << "; ...";
    item_.detail = os.str();
    return item_;
  }

 private:
  VerifyItem item_;
  std::vector<std::string> failures_;
};

inline std::string at_n(int n) { return "n=" + std::to_string(n); }

template <class BoundFn>
VerifyItem sandwich_item(const std::string& name, int n_lo, int n_hi, BoundFn&& bound) {
  ItemBuilder b(name);
  for (int n = n_lo; n <= n_hi; ++n) {
    const BoundsReport r = bound(n);
    const double exact = r.exact->ln_abs();
    const double violation = std::max(r.lower.ln_abs() - exact, exact - r.upper.ln_abs());
    std::string where = at_n(n);
    if (!r.sandwich_ok) {
      where += r.lower_ok ? " upper" : " lower";
      where += " (cause: " + std::string(to_string(r.cause)) + ")";
    }
    b.record(r.sandwich_ok, violation, where);
  }
  return b.finish();
}

}  // namespace detail

inline VerifyItem verify_form_agreement(int n_lo, int n_hi, double eta, double delta, double tol) {
  detail::ItemBuilder b("direct_vs_xi_form");
  for (int n = n_lo; n <= n_hi; ++n) {
    const ConsistencyReport r = consistency_check(ReductionParams(n, eta, delta), tol);
    b.record(r.passed, r.difference, detail::at_n(n));
  }
  return b.finish();
}

inline VerifyItem verify_closed_form_anchor() {
  detail::ItemBuilder b("closed_form_anchor");
  const ReductionParams p(2, 0.3, 0.6);
  for (double v : {exact_log_count_direct(p), exact_log_count_xi(p)}) {
    const double err = std::fabs(v - std::log(4.0));
    b.record(err <= kClosedFormTol, err, "n=2 eta=0.3 delta=0.6");
  }
  return b.finish();
}

inline std::vector<double> secant_oracle_angles(double eta, double delta) {
  std::vector<double> angles = {std::numbers::pi / 12.0, std::numbers::pi / 6.0};
  if (eta > 0.0 && eta < delta) angles.push_back(std::asin(eta / delta));
  return angles;
}

inline VerifyItem verify_secant_oracle(const std::vector<double>& angles, int m_max = kSecantOracleMaxOrder) {
  detail::ItemBuilder b("secant_vs_quadrature");
  for (double phi : angles) {
    const SecantIntegralTable table(phi, m_max);
    for (int m = 0; m <= m_max; ++m) {
      const double err = std::fabs(table.log_integral(m) - quadrature_oracle_log(m, phi));
      b.record(err <= kSecantOracleTol, err, "m=" + std::to_string(m) + " phi=" + std::to_string(phi));
    }
  }
  return b.finish();
}

inline VerifyItem verify_one_minus_pow(std::uint64_t seed, int samples) {
  detail::ItemBuilder b("one_minus_pow_lower");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> xs(0.0, 0.999);
  std::uniform_int_distribution<int> ns(1, 500);
  for (int i = 0; i < samples; ++i) {
    double x = xs(rng);
    while (x <= 0.0) x = xs(rng);
    const int n = ns(rng);
    const InequalityCheck c = product_one_minus_pow_lower(x, n);
    b.record(c.holds(), c.rhs_log - c.lhs_log, "x=" + std::to_string(x) + " n=" + std::to_string(n));
  }
  return b.finish();
}

// l in [19, 200] against x = 0.01, 0.02, ..., 0.86.
inline VerifyItem verify_even_lemma() {
  detail::ItemBuilder b("even_lemma_l19");
  for (int l = 19; l <= 200; ++l) {
    for (int k = 1; k <= 86; ++k) {
      const double x = k / 100.0;
      const double lhs = (l + 2.0) * std::pow(x, l - 2) - l * std::pow(x, l + 2);
      b.record(lemma_even_holds(x, l), lhs - 2.0, "l=" + std::to_string(l) + " x=" + std::to_string(x));
    }
  }
  return b.finish();
}

inline VerifyItem verify_gamma_sandwich(int s_lo = 6, int s_hi = 400) {
  detail::ItemBuilder b("gamma_sandwich");
  for (int s = s_lo; s <= s_hi; ++s) {
    const SandwichPair g = gamma_bounds(s);
    const double v = log_gamma(0.5 * s);
    const double violation = std::max(g.lower.ln_abs() - v, v - g.upper.ln_abs());
    b.record(g.contains(LogReal::from_log(v)), violation, "s=" + std::to_string(s));
  }
  return b.finish();
}

inline VerifyItem verify_zeta_sandwich(int s_lo = 2, int s_hi = 200) {
  detail::ItemBuilder b("zeta_sandwich");
  for (int s = s_lo; s <= s_hi; ++s) {
    const SandwichPair z = zeta_bounds(s);
    const double v = std::log1p(zeta_minus_one(s));
    const double violation = std::max(z.lower.ln_abs() - v, v - z.upper.ln_abs());
    b.record(z.contains(LogReal::from_log(v)), violation, "s=" + std::to_string(s));
  }
  return b.finish();
}

// Sandwich items for dimensions in [max(22, n_lo), n_hi]; empty when the
// parameters sit outside the regime the bounds were proven for.
inline std::vector<VerifyItem> verify_bound_sandwiches(int n_lo, int n_hi, double eta, double delta) {
  std::vector<VerifyItem> items;
  const int lo = std::max(n_lo, kBoundMinDimension);
  if (lo > n_hi) return items;
  const ReductionParams probe(lo, eta, delta);
  if (!probe.in_definition_domain()) return items;
  items.push_back(detail::sandwich_item("xi_prefactor_sandwich", lo, n_hi,
                                        [&](int n) { return xi_prefactor_bounds_log(n, eta); }));
  items.push_back(detail::sandwich_item("int_product_sandwich", lo, n_hi, [&](int n) {
    return int_product_bounds_log(ReductionParams(n, eta, delta));
  }));
  items.push_back(detail::sandwich_item("int_product_simplified_sandwich", lo, n_hi, [&](int n) {
    return int_product_bounds_simplified_log(ReductionParams(n, eta, delta));
  }));
  items.push_back(detail::sandwich_item("combined_sandwich", lo, n_hi, [&](int n) {
    return combined_bounds_log(ReductionParams(n, eta, delta));
  }));
  if (probe.in_restricted_domain()) {
    items.push_back(detail::sandwich_item("restricted_sandwich", lo, n_hi, [&](int n) {
      return restricted_bounds_log(ReductionParams(n, eta, delta));
    }));
  }
  return items;
}

inline VerifyReport run_verification(const VerifyConfig& cfg) {
  detail::require(cfg.n_min >= 2 && cfg.n_min <= cfg.n_max, "verify: requires 2 <= n_min <= n_max");
  detail::require(cfg.tol > 0.0, "verify: tolerance must be positive");
  VerifyReport report;
  report.items.push_back(verify_form_agreement(cfg.n_min, cfg.n_max, cfg.eta, cfg.delta, cfg.tol));
  report.items.push_back(verify_closed_form_anchor());
  report.items.push_back(verify_secant_oracle(secant_oracle_angles(cfg.eta, cfg.delta)));
  report.items.push_back(verify_one_minus_pow(cfg.seed, cfg.property_samples));
  report.items.push_back(verify_even_lemma());
  report.items.push_back(verify_gamma_sandwich());
  report.items.push_back(verify_zeta_sandwich());
  for (auto& item : verify_bound_sandwiches(cfg.n_min, cfg.n_max, cfg.eta, cfg.delta))
    report.items.push_back(std::move(item));
  return report;
}

}  // namespace lllcount
