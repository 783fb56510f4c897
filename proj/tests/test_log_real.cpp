#include <cmath>
#include <numbers>
#include <random>

#include <gtest/gtest.h>

#include "lllcount/log_real.hpp"

using lllcount::DomainError;
using lllcount::LogReal;

TEST(LogReal, FromValue) {
  const LogReal one = LogReal::from_value(1.0);
  EXPECT_EQ(one.sign(), 1);
  EXPECT_EQ(one.ln_abs(), 0.0);

  const LogReal zero = LogReal::from_value(0.0);
  EXPECT_EQ(zero.sign(), 0);
  EXPECT_EQ(zero.ln_abs(), -std::numeric_limits<double>::infinity());
  EXPECT_TRUE(zero.is_zero());

  const LogReal neg_e = LogReal::from_value(-std::numbers::e);
  EXPECT_EQ(neg_e.sign(), -1);
  EXPECT_NEAR(neg_e.ln_abs(), 1.0, 1e-15);
}

TEST(LogReal, RejectsNonFinite) {
  EXPECT_THROW(LogReal::from_value(std::nan("")), DomainError);
  EXPECT_THROW(LogReal::from_value(INFINITY), DomainError);
  EXPECT_THROW(LogReal::from_log(INFINITY), DomainError);
  EXPECT_TRUE(LogReal::from_log(-INFINITY).is_zero());
}

TEST(LogReal, RoundTripPrecision) {
  for (double v : {1e-300, 1e-12, 0.5, 1.0, 3.0, 1e12, 1e300}) {
    const double ln_v = std::log(v);
    EXPECT_LE(std::fabs(LogReal::from_value(v).ln_abs() - ln_v), 1e-14 * std::max(1.0, std::fabs(ln_v)));
  }
}

TEST(LogReal, Multiply) {
  const LogReal six = LogReal::from_log(std::log(2.0)) * LogReal::from_log(std::log(3.0));
  EXPECT_NEAR(six.ln_abs(), std::log(6.0), 1e-15);
  EXPECT_TRUE((LogReal::from_log(5.0) * LogReal::zero()).is_zero());
  const LogReal four = LogReal::from_log(std::log(2.0), -1) * LogReal::from_log(std::log(2.0), -1);
  EXPECT_EQ(four.sign(), 1);
  EXPECT_NEAR(four.ln_abs(), std::log(4.0), 1e-15);
}

TEST(LogReal, Divide) {
  EXPECT_NEAR((LogReal::from_value(6.0) / LogReal::from_value(3.0)).ln_abs(), std::log(2.0), 1e-15);
  EXPECT_THROW(LogReal::one() / LogReal::zero(), DomainError);
}

TEST(LogReal, Power) {
  EXPECT_NEAR(pow(LogReal::from_log(std::log(2.0)), 10).ln_abs(), 10 * std::log(2.0), 1e-14);
  EXPECT_EQ(pow(LogReal::from_value(-7.0), 0), LogReal::one());
  EXPECT_EQ(pow(LogReal::zero(), 0), LogReal::one());
  const LogReal cube = pow(LogReal::from_log(0.0, -1), 3);
  EXPECT_EQ(cube.sign(), -1);
  EXPECT_EQ(cube.ln_abs(), 0.0);
  EXPECT_EQ(pow(LogReal::from_value(-2.0), 2).sign(), 1);
  EXPECT_THROW(pow(LogReal::from_value(-2.0), 0.5), DomainError);
  EXPECT_TRUE(pow(LogReal::zero(), 3).is_zero());
}

TEST(LogReal, AddPositive) {
  EXPECT_NEAR(add_positive(LogReal::from_value(2.0), LogReal::from_value(3.0)).ln_abs(), std::log(5.0), 1e-15);
  const LogReal x = LogReal::from_log(123.456);
  EXPECT_EQ(add_positive(x, LogReal::zero()), x);
  EXPECT_EQ(add_positive(LogReal::zero(), x), x);

  // ln(1e300) + ln(1e300) without overflow.
  const LogReal big = LogReal::from_log(300.0 * std::log(10.0));
  EXPECT_NEAR(add_positive(big, big).ln_abs(), std::log(2.0) + 300.0 * std::log(10.0), 1e-12);

  EXPECT_THROW(add_positive(LogReal::from_value(-1.0), x), DomainError);
}

TEST(LogReal, SubtractPositive) {
  EXPECT_NEAR(subtract_positive(LogReal::from_value(5.0), LogReal::from_value(3.0)).ln_abs(), std::log(2.0),
              1e-15);
  EXPECT_NEAR(subtract_positive(LogReal::one(), LogReal::from_value(1e-20)).ln_abs(), std::log1p(-1e-20), 1e-30);
  EXPECT_THROW(subtract_positive(LogReal::from_value(3.0), LogReal::from_value(5.0)), DomainError);
  EXPECT_THROW(subtract_positive(LogReal::one(), LogReal::one()), DomainError);
}

TEST(LogReal, Log1mExp) {
  EXPECT_NEAR(lllcount::log1m_exp(std::log(0.25)), std::log(0.75), 1e-15);
  EXPECT_NEAR(lllcount::log1m_exp(-1e-10), std::log(1e-10), 1e-9);
  EXPECT_EQ(lllcount::log1m_exp(0.0), -INFINITY);
  EXPECT_THROW(lllcount::log1m_exp(0.1), DomainError);
}

TEST(LogReal, Compare) {
  EXPECT_LT(LogReal::from_log(0.0), LogReal::from_log(std::log(2.0)));
  EXPECT_GT(LogReal::zero(), LogReal::from_log(5.0, -1));
  EXPECT_EQ(LogReal::from_log(3.0) <=> LogReal::from_log(3.0), std::weak_ordering::equivalent);
  EXPECT_LT(LogReal::from_log(5.0, -1), LogReal::from_log(1.0, -1));  // -e^5 < -e
}

TEST(LogRealProperty, AddPositiveMatchesDirectSum) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> exps(-300.0, 300.0);
  std::uniform_real_distribution<double> mant(1.0, 10.0);
  for (int i = 0; i < 10000; ++i) {
    const double a = mant(rng) * std::pow(10.0, std::floor(exps(rng)));
    const double b = mant(rng) * std::pow(10.0, std::floor(exps(rng)));
    if (!(a <= 1e300 && b <= 1e300)) continue;
    const double direct = a + b;
    const double via_log = std::exp(add_positive(LogReal::from_value(a), LogReal::from_value(b)).ln_abs());
    ASSERT_LE(std::fabs(via_log - direct) / direct, 1e-12) << a << " + " << b;
  }
}

TEST(LogRealProperty, MultiplyAssociativeCommutative) {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> logs(-1e4, 1e4);
  std::uniform_int_distribution<int> signs(0, 2);
  auto draw = [&] {
    const int s = signs(rng);
    return s == 0 ? LogReal::zero() : LogReal::from_log(logs(rng), s == 1 ? 1 : -1);
  };
  for (int i = 0; i < 10000; ++i) {
    const LogReal a = draw(), b = draw(), c = draw();
    const LogReal l = (a * b) * c;
    const LogReal r = a * (b * c);
    ASSERT_EQ(l.sign(), r.sign());
    if (!l.is_zero()) {
      ASSERT_NEAR(l.ln_abs(), r.ln_abs(), 1e-11);
    }
    ASSERT_EQ((a * b).sign(), (b * a).sign());
    if (!(a * b).is_zero()) {
      ASSERT_EQ((a * b).ln_abs(), (b * a).ln_abs());
    }
  }
}

TEST(LogRealProperty, PowerOfPower) {
  std::mt19937_64 rng(13);
  std::uniform_real_distribution<double> logs(-50.0, 50.0);
  std::uniform_real_distribution<double> exps(-20.0, 20.0);
  for (int i = 0; i < 10000; ++i) {
    const LogReal a = LogReal::from_log(logs(rng));
    const double p = exps(rng), q = exps(rng);
    ASSERT_NEAR(pow(pow(a, p), q).ln_abs(), pow(a, p * q).ln_abs(), 1e-10);
  }
}

TEST(LogRealProperty, CompareIsTotalOrder) {
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> logs(-5.0, 5.0);
  std::uniform_int_distribution<int> signs(-1, 1);
  auto draw = [&] {
    const int s = signs(rng);
    // Coarse grid so equal values occur.
    return s == 0 ? LogReal::zero() : LogReal::from_log(std::round(logs(rng) * 4) / 4, s);
  };
  for (int i = 0; i < 10000; ++i) {
    const LogReal a = draw(), b = draw(), c = draw();
    ASSERT_EQ((a <=> b) == 0, (b <=> a) == 0);
    if (a < b) {
      ASSERT_TRUE(b > a);
    }
    if (a <= b && b <= c) {
      ASSERT_TRUE(a <= c);
    }
    const bool lt = a < b, gt = a > b, eq = (a <=> b) == 0;
    ASSERT_EQ(lt + gt + eq, 1);
    // Ordering agrees with the represented reals.
    const double va = a.to_double(), vb = b.to_double();
    ASSERT_EQ(lt, va < vb);
  }
}
