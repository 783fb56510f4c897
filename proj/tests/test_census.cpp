#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "lllcount/census.hpp"
#include "oracles.hpp"

using namespace lllcount;

TEST(ReductionParams, Validation) {
  EXPECT_NO_THROW(ReductionParams(2, 0.3, 0.6));
  EXPECT_THROW(ReductionParams(1, 0.3, 0.6), DomainError);
  EXPECT_THROW(ReductionParams(5, 0.6, 0.6), DomainError);
  EXPECT_THROW(ReductionParams(5, 0.0, 0.6), DomainError);
  EXPECT_THROW(ReductionParams(5, std::nan(""), 0.6), DomainError);
}

TEST(ReductionParams, Regimes) {
  EXPECT_EQ(ReductionParams(22, 0.51, 0.99).regime(), Regime::Restricted);
  EXPECT_EQ(ReductionParams(21, 0.51, 0.99).regime(), Regime::General);
  EXPECT_EQ(ReductionParams(22, 0.54, 0.99).regime(), Regime::PaperBound);
  EXPECT_EQ(ReductionParams(22, 0.52, 0.7).regime(), Regime::PaperBound);
  EXPECT_EQ(ReductionParams(40, 0.3, 0.6).regime(), Regime::General);
  EXPECT_FALSE(ReductionParams(3, 0.3, 0.6).in_definition_domain());
  EXPECT_EQ(ReductionParams(3, 0.3, 0.6).warnings().size(), 2u);
  EXPECT_TRUE(ReductionParams(30, 0.51, 0.99).warnings().empty());
  EXPECT_EQ(to_string(Regime::PaperBound), "paper_bound");
}

TEST(Count, ClosedFormAnchor) {
  // n = 2 collapses to 4 in both forms.
  const ReductionParams p(2, 0.3, 0.6);
  EXPECT_NEAR(exact_log_count_direct(p), std::log(4.0), 1e-12);
  EXPECT_NEAR(exact_log_count_xi(p), std::log(4.0), 1e-12);
  EXPECT_NEAR(normalized_log_count(p), 0.0, 1e-12);
}

TEST(Count, FrozenValues) {
  EXPECT_NEAR(exact_log_count_xi({2, 0.51, 0.99}), 1.4193287671547154, 1e-12);
  EXPECT_NEAR(exact_log_count_xi({3, 0.51, 0.99}), 2.1963744581314548, 1e-12);
  EXPECT_NEAR(exact_log_count_xi({10, 0.51, 0.99}), 13.938184306851917, 1e-11);
  EXPECT_NEAR(exact_log_count_xi({25, 0.51, 0.99}), 265.98919194684467, 1e-9);
  EXPECT_NEAR(exact_log_count_xi({40, 0.52, 0.8}), 4799.995201163088, 1e-8);
}

TEST(Count, MatchesTermByTermOracle) {
  for (auto [eta, delta] : {std::pair{0.51, 0.99}, {0.52, 0.8}, {0.3, 0.6}}) {
    for (int n : {2, 3, 5, 8, 13, 20}) {
      const double ref = oracle::log_count_direct(n, eta, delta);
      EXPECT_NEAR(exact_log_count_direct({n, eta, delta}), ref, 1e-10 * std::max(1.0, std::fabs(ref)))
          << n << " " << eta << " " << delta;
    }
  }
}

TEST(Count, FormsAgree) {
  for (auto [eta, delta] : {std::pair{0.51, 0.99}, {0.52, 0.8}, {0.501, 0.999}}) {
    for (int n = 2; n <= 60; ++n) {
      const ConsistencyReport r = consistency_check({n, eta, delta}, 1e-6);
      ASSERT_TRUE(r.passed) << n << " diff " << r.difference;
    }
  }
}

TEST(Count, CorruptedXiIsDetected) {
  // Negative control: a 1e-4 error in one xi value must break agreement.
  const auto corrupted = [](int s) { return log_xi(s) + (s == 7 ? 1e-4 : 0.0); };
  const ConsistencyReport r = consistency_check({20, 0.51, 0.99}, 1e-6, corrupted);
  EXPECT_FALSE(r.passed);
  EXPECT_NEAR(r.difference, 1e-4, 1e-9);
}

TEST(Count, NormalizedDividesByTwoToTheN) {
  const ReductionParams p(30, 0.51, 0.99);
  EXPECT_NEAR(exact_log_count_xi(p) - normalized_log_count(p), 30.0 * std::numbers::ln2, 1e-12);
}

TEST(Count, GrowsWithEta) {
  // Both the eta power and every weight integral increase with eta.
  for (int n : {5, 30, 100}) {
    EXPECT_LT(exact_log_count_xi({n, 0.51, 0.99}), exact_log_count_xi({n, 0.6, 0.99})) << n;
  }
}

TEST(Count, LargeDimensionStaysFinite) {
  const double v = exact_log_count_xi({500, 0.51, 0.99});
  EXPECT_TRUE(std::isfinite(v));
  EXPECT_GT(v, 1e5);
}
