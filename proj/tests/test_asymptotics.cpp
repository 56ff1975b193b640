#include <gtest/gtest.h>

#include "lame/asymptotics.hpp"
#include "oracles.hpp"

using namespace lame;

TEST(AsymptoticLimit, Values) {
  const LameParams p(0.5, 1.3, 2.7);
  EXPECT_EQ(lame_asymptotic_limit(p, 0.0), 1.0);
  EXPECT_NEAR(lame_asymptotic_limit(p, 0.5), 1.0 / (0.5 * 0.875), 1e-14);
  EXPECT_THROW(lame_asymptotic_limit(p, 1.0), PoleError);
}

TEST(AsymptoticLimit, Factorization) {
  oracle::Rng g(51);
  for (int k = 0; k < 100; ++k) {
    const double rho = oracle::uniform(g, 0.05, 0.95), xi = oracle::uniform(g, 0.0, 0.95);
    const double want = 1.0 / ((1.0 - xi) * (1.0 - rho * rho * xi));
    EXPECT_NEAR(lame_asymptotic_limit(LameParams(rho, 0.0, 0.0), xi), want, 1e-14 * want);
  }
}

TEST(ConvergenceDomain, Boundary) {
  EXPECT_TRUE(convergence_domain(0.99, 0.9).inside);
  for (double rho : {0.1, 0.5, 0.9}) EXPECT_FALSE(convergence_domain(1.0, rho).inside);
  const auto v = convergence_domain(0.0, 0.4);
  EXPECT_TRUE(v.inside);
  EXPECT_EQ(v.margin, 1.0);
}

TEST(ConvergenceDomain, EquivalentToXiBelowOne) {
  for (double rho : {0.2, 0.5, 0.8})
    for (int k = 0; k < 100; ++k) {
      const double xi = 1.5 * k / 99.0;
      EXPECT_EQ(convergence_domain(xi, rho).inside, xi < 1.0) << xi;
    }
}

TEST(SmallRho, ValuesAndDomain) {
  const LameParams p(0.1, 0.0, 0.0);
  EXPECT_EQ(lame_asymptotic_small_rho(p, 0.0), 1.0);
  EXPECT_NEAR(lame_asymptotic_small_rho(p, 0.5), 1.0 / (1.0 - 1.01 * 0.5), 1e-14);
  EXPECT_FALSE(small_rho_domain(0.9901, 0.1).inside);
  EXPECT_TRUE(small_rho_domain(0.99, 0.1).inside);
  EXPECT_THROW(lame_asymptotic_small_rho(p, 1.0 / 1.01), PoleError);
}

TEST(SmallRho, DegenerationOfLargeOrderLimit) {
  for (double rho : {0.01, 0.03, 0.05})
    for (double xi : {0.1, 0.3, 0.5}) {
      const LameParams p(rho, 0.0, 0.0);
      const double a = lame_asymptotic_limit(p, xi), b = lame_asymptotic_small_rho(p, xi);
      EXPECT_LE(std::abs(a - b), 2.0 * rho * rho * xi * xi * a * b);
    }
}

TEST(GeometricTail, MatchesClosedForm) {
  const LameParams p(0.5, 0.0, 0.0);
  for (int k = 0; k <= 16; ++k) {
    const double xi = 0.05 * k;
    EXPECT_NEAR(geometric_tail_sum(0.5, xi), lame_asymptotic_limit(p, xi), 1e-8);
  }
  const auto c = geometric_tail_coeffs(0.5, 3);
  EXPECT_EQ(c.size(), 4u);
  EXPECT_EQ(c[1], 1.25);
}
