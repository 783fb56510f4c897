#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "lllcount/special_functions.hpp"
#include "oracles.hpp"

using namespace lllcount;

TEST(LogGamma, SmallArguments) {
  EXPECT_NEAR(log_gamma(1.0), 0.0, 1e-14);
  EXPECT_NEAR(log_gamma(2.0), 0.0, 1e-14);
  EXPECT_NEAR(log_gamma(0.5), 0.5 * std::log(std::numbers::pi), 1e-14);
  EXPECT_NEAR(log_gamma(5.0), std::log(24.0), 1e-14);
}

TEST(LogGamma, FrozenLargeValue) {
  // 50-digit reference for ln Gamma(50) = ln 49!.
  EXPECT_NEAR(log_gamma(50.0), 144.565743946344886, 1e-12);
}

TEST(LogGamma, MatchesMultiprecisionOracle) {
  for (double x = 0.5; x <= 500.0; x += 0.5) {
    const double ref = oracle::log_gamma_50(x);
    ASSERT_NEAR(log_gamma(x), ref, 1e-13 * std::max(1.0, std::fabs(ref))) << "x = " << x;
  }
}

TEST(LogGamma, RejectsNonPositive) {
  EXPECT_THROW(log_gamma(0.0), DomainError);
  EXPECT_THROW(log_gamma(-1.5), DomainError);
  EXPECT_THROW(log_gamma(std::nan("")), DomainError);
}

TEST(Zeta, ClosedForms) {
  EXPECT_NEAR(zeta(2.0), std::numbers::pi * std::numbers::pi / 6.0, 1e-14);
  EXPECT_NEAR(zeta(4.0), std::pow(std::numbers::pi, 4) / 90.0, 1e-14);
}

TEST(Zeta, FrozenNearOne) {
  // zeta(30) - 1 = 9.31327432...e-10; only zeta_minus_one keeps its digits.
  EXPECT_NEAR(zeta(30.0), 1.000000000931327432, 1e-16);
  EXPECT_NEAR(zeta_minus_one(30.0), 9.31327432e-10, 1e-17);
}

TEST(Zeta, MatchesOracles) {
  for (int s = 2; s <= 200; ++s) {
    ASSERT_NEAR(zeta(s), oracle::zeta_boost(s), 4e-16) << "s = " << s;
  }
  for (double s : {3.0, 5.5, 7.0, 12.0}) {
    const long double direct = oracle::zeta_minus_one_direct(s, 2000000);
    EXPECT_NEAR(zeta_minus_one(s), static_cast<double>(direct), 1e-12 * static_cast<double>(direct)) << s;
  }
}

TEST(Zeta, Bounds) {
  for (int s = 2; s <= 200; ++s) EXPECT_TRUE(zeta_bounds(s).contains(LogReal::from_log(std::log1p(zeta_minus_one(s))))) << s;
  EXPECT_THROW(zeta_bounds(1.0), DomainError);
  EXPECT_THROW(zeta(1.5), DomainError);
}

TEST(GammaBounds, BracketFromSix) {
  for (int s = 6; s <= 400; ++s) {
    EXPECT_TRUE(gamma_bounds(s).contains(LogReal::from_log(log_gamma(0.5 * s)))) << s;
  }
  EXPECT_THROW(gamma_bounds(2.0), DomainError);
}

TEST(Xi, KnownValues) {
  // xi(2) = pi/6.
  EXPECT_NEAR(log_xi(2.0), std::log(std::numbers::pi / 6.0), 1e-14);
  // xi(4) = pi^2/15.
  EXPECT_NEAR(log_xi(4.0), std::log(std::numbers::pi * std::numbers::pi / 15.0), 1e-14);
  EXPECT_NEAR(xi(2.0).to_double(), std::numbers::pi / 6.0, 1e-14);
}

TEST(Xi, MatchesOracle) {
  for (int s = 2; s <= 300; ++s) {
    const double ref = oracle::log_xi(s);
    ASSERT_NEAR(log_xi(s), ref, 2e-13 * std::max(1.0, std::fabs(ref))) << s;
  }
}

TEST(Xi, Bounds) {
  for (int s = 6; s <= 400; ++s) {
    const LogReal v = xi(s);
    EXPECT_TRUE(xi_bounds(s).contains(v)) << s;
    const SandwichPair weak = xi_bounds_weakened(s);
    EXPECT_TRUE(weak.contains(v)) << s;
    EXPECT_LE(weak.lower, xi_bounds(s).lower) << s;
  }
  EXPECT_THROW(xi_bounds_weakened(5.0), DomainError);
}

TEST(XiInvProd, FrozenValues) {
  // Sum_{s=2..5} -ln xi(s) = ln 8 - ln zeta(3) - ln zeta(5) to 40 digits.
  EXPECT_NEAR(xi_inv_prod_log(5), 1.8591451066391166, 1e-14);
  EXPECT_NEAR(xi_inv_prod_log(20), -40.885347473685885, 1e-12);
  EXPECT_NEAR(xi_inv_prod_log(2), -std::log(std::numbers::pi / 6.0), 1e-14);
  EXPECT_THROW(xi_inv_prod_log(1), DomainError);
}

TEST(SphereSurface, KnownValues) {
  EXPECT_NEAR(sphere_surface_log(1), std::log(2.0), 1e-14);
  EXPECT_NEAR(sphere_surface_log(2), std::log(2.0 * std::numbers::pi), 1e-14);
  EXPECT_NEAR(sphere_surface_log(3), std::log(4.0 * std::numbers::pi), 1e-14);
  EXPECT_NEAR(sphere_surface_log(10), 3.2387427794590006, 1e-14);
  EXPECT_THROW(sphere_surface_log(0), DomainError);
}
