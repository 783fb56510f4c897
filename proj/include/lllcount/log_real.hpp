#pragma once

// Signed real numbers stored as (sign, ln|value|).
//
// Counts of LLL bases reach e^{10^6} for moderate dimensions, so every
// quantity in the library is carried in this form. Products are sums of
// logarithms; sums are restricted to non-negative addends so no cancellation
// can occur.

#include <cmath>
#include <compare>
#include <limits>
#include <string>

#include "lllcount/errors.hpp"

namespace lllcount {

inline constexpr double kNegInf = -std::numeric_limits<double>::infinity();

// ln(e^x + e^y), exact when either side is -inf.
inline double log_add_exp(double x, double y) noexcept {
  if (x == kNegInf) return y;
  if (y == kNegInf) return x;
  const double hi = x > y ? x : y;
  const double lo = x > y ? y : x;
  return hi + std::log1p(std::exp(lo - hi));
}

// ln(1 - e^x) for x <= 0, switching branch at -ln 2 for accuracy.
inline double log1m_exp(double x) {
  detail::require(x <= 0.0, "log1m_exp: argument must be <= 0");
  if (x == 0.0) return kNegInf;
  if (x > -0.6931471805599453) return std::log(-std::expm1(x));
  return std::log1p(-std::exp(x));
}

class LogReal {
 public:
  constexpr LogReal() noexcept = default;

  static LogReal zero() noexcept { return LogReal(); }
  static LogReal one() noexcept { return LogReal(1, 0.0); }

  static LogReal from_value(double v) {
    detail::require(std::isfinite(v), "LogReal: non-finite input");
    if (v == 0.0) return LogReal();
    return LogReal(v > 0 ? 1 : -1, std::log(std::fabs(v)));
  }

  // Builds a value directly from its logarithm; ln_abs = -inf means zero.
  static LogReal from_log(double ln_abs, int sign = 1) {
    detail::require(sign == 1 || sign == -1, "LogReal: sign must be +1 or -1");
    detail::require(!std::isnan(ln_abs) && ln_abs != std::numeric_limits<double>::infinity(),
                    "LogReal: logarithm must be finite or -inf");
    if (ln_abs == kNegInf) return LogReal();
    return LogReal(sign, ln_abs);
  }

  int sign() const noexcept { return sign_; }
  double ln_abs() const noexcept { return ln_abs_; }
  bool is_zero() const noexcept { return sign_ == 0; }

  // Overflows to +-inf for large magnitudes; meant for small values and tests.
  double to_double() const noexcept {
    return sign_ == 0 ? 0.0 : sign_ * std::exp(ln_abs_);
  }

  friend LogReal operator*(const LogReal& a, const LogReal& b) noexcept {
    if (a.is_zero() || b.is_zero()) return LogReal();
    return LogReal(a.sign_ * b.sign_, a.ln_abs_ + b.ln_abs_);
  }

  friend LogReal operator/(const LogReal& a, const LogReal& b) {
    detail::require(!b.is_zero(), "LogReal: division by zero");
    if (a.is_zero()) return LogReal();
    return LogReal(a.sign_ * b.sign_, a.ln_abs_ - b.ln_abs_);
  }

  friend bool operator==(const LogReal& a, const LogReal& b) noexcept {
    return a.sign_ == b.sign_ && (a.sign_ == 0 || a.ln_abs_ == b.ln_abs_);
  }

  friend std::weak_ordering operator<=>(const LogReal& a, const LogReal& b) noexcept {
    if (a.sign_ != b.sign_) return a.sign_ <=> b.sign_;
    if (a.sign_ == 0 || a.ln_abs_ == b.ln_abs_) return std::weak_ordering::equivalent;
    const bool a_bigger_mag = a.ln_abs_ > b.ln_abs_;
    // Larger magnitude is greater for positives, smaller for negatives.
    if (a.sign_ > 0) return a_bigger_mag ? std::weak_ordering::greater : std::weak_ordering::less;
    return a_bigger_mag ? std::weak_ordering::less : std::weak_ordering::greater;
  }

 private:
  LogReal(int sign, double ln_abs) noexcept : sign_(sign), ln_abs_(ln_abs) {}

  int sign_ = 0;
  double ln_abs_ = kNegInf;
};

inline std::weak_ordering compare(const LogReal& a, const LogReal& b) noexcept { return a <=> b; }

// a^p. A negative or zero base needs a non-negative integer exponent.
inline LogReal pow(const LogReal& a, double p) {
  if (p == 0.0) return LogReal::one();
  if (a.sign() > 0) return LogReal::from_log(a.ln_abs() * p);
  const bool integral = std::isfinite(p) && std::trunc(p) == p;
  detail::require(integral && p > 0, "LogReal pow: non-positive base needs a positive integer exponent");
  if (a.is_zero()) return LogReal::zero();
  const bool odd = std::fmod(p, 2.0) != 0.0;
  return LogReal::from_log(a.ln_abs() * p, odd ? -1 : 1);
}

// a + b for a, b >= 0.
inline LogReal add_positive(const LogReal& a, const LogReal& b) {
  detail::require(a.sign() >= 0 && b.sign() >= 0, "add_positive: negative addend");
  return LogReal::from_log(log_add_exp(a.ln_abs(), b.ln_abs()));
}

// a - b for a > b >= 0.
inline LogReal subtract_positive(const LogReal& a, const LogReal& b) {
  detail::require(b.sign() >= 0 && a > b, "subtract_positive: requires a > b >= 0");
  if (b.is_zero()) return a;
  return LogReal::from_log(a.ln_abs() + log1m_exp(b.ln_abs() - a.ln_abs()));
}

inline std::string to_string(const LogReal& v) {
  if (v.is_zero()) return "0";
  return std::string(v.sign() > 0 ? "+" : "-") + "exp(" + std::to_string(v.ln_abs()) + ")";
}

}  // namespace lllcount
