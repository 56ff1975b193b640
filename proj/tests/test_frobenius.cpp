#include <gtest/gtest.h>

#include <cmath>

#include "lame/elliptic.hpp"
#include "lame/frobenius.hpp"
#include "oracles.hpp"

using namespace lame;

TEST(Recurrence, LowOrderBalances) {
  const LameParams p(0.5, 1.3, 2.7);
  EXPECT_NEAR(recurrence_coeffs(p, 0.0, 0).A, -p.h / 2.0, 1e-15);
  EXPECT_NEAR(recurrence_coeffs(p, 0.5, 0).A, (0.25 + 1.0 - p.h) / 6.0, 1e-15);
  EXPECT_NEAR(recurrence_coeffs(p, 0.0, 1).B, 0.25 * p.alpha * (p.alpha + 1.0) / 12.0, 1e-15);
}

TEST(Recurrence, RejectsNonIndicialLambda) {
  EXPECT_THROW(recurrence_coeffs(LameParams(0.5, 1.0, 1.0), 0.25, 0), DomainError);
}

TEST(Recurrence, IndicialPolynomialRoots) {
  const double b = 4.0;
  for (int k = -100; k <= 200; ++k) {
    const double l = 0.01 * k;
    const double v = 2.0 * b * l * (2.0 * l - 1.0);
    if (k == 0 || k == 50)
      EXPECT_EQ(v, 0.0);
    else
      EXPECT_NE(v, 0.0);
  }
}

TEST(Recurrence, LimitsAtLargeOrder) {
  const LameParams p(0.5, 1.3, 2.7);
  const auto c = recurrence_coeffs(p, 0.0, 200);
  EXPECT_LT(std::abs(c.A - 1.25), 0.02);
  EXPECT_LT(std::abs(c.B + 0.25), 0.02);
  for (int n = 50; n <= 400; n += 50) {
    const auto r = recurrence_coeffs(p, 0.0, n);
    EXPECT_LE(std::abs(r.A - 1.25) * n, 5.0);
    EXPECT_LE(std::abs(r.B + 0.25) * n, 5.0);
  }
}

TEST(Recurrence, BTerminationBranches) {
  for (double l : {0.0, 0.5})
    for (int n = 0; n <= 20; ++n) {
      EXPECT_EQ(recurrence_coeffs(LameParams(0.4, 1.0, 2.0 * (n + l) - 2.0), l, n).B, 0.0);
      EXPECT_EQ(recurrence_coeffs(LameParams(0.4, 1.0, -(2.0 * (n + l) - 1.0)), l, n).B, 0.0);
    }
}

TEST(Frobenius, CoefficientBasics) {
  EXPECT_EQ(frobenius_coefficients(LameParams(0.5, 1.0, 1.0), 0.0, 0).coeffs, std::vector<double>{1.0});
  EXPECT_EQ(frobenius_coefficients(LameParams(0.5, 0.0, 0.0), 0.0, 5).coeffs[1], 0.0);
  const LameParams p(0.3, -2.1, 1.4);
  const auto s = frobenius_coefficients(p, 0.5, 30);
  for (int n = 0; n < 30; ++n) {
    const auto [A, B] = recurrence_coeffs(p, 0.5, n);
    EXPECT_EQ(s.coeffs[n + 1], A * s.coeffs[n] + B * (n ? s.coeffs[n - 1] : 0.0));
  }
}

TEST(Frobenius, MatchesDirectSeriesSolution) {
  oracle::Rng g(31);
  for (int k = 0; k < 20; ++k) {
    const double rho = oracle::uniform(g, 0.1, 0.9), h = oracle::uniform(g, -5, 5);
    const double al = oracle::uniform(g, -3, 3);
    for (double l : {0.0, 0.5}) {
      const auto got = frobenius_coefficients(LameParams(rho, h, al), l, 20).coeffs;
      const auto want = oracle::lame_coeffs(rho, h, al, l, 20);
      for (int m = 0; m <= 20; ++m) EXPECT_LE(oracle::coeff_err(got[m], want[m], 1.0), 1e-11);
    }
  }
}

TEST(Frobenius, RootTestRadius) {
  const auto s = frobenius_coefficients(LameParams(0.5, 1.3, 2.7), 0.0, 300);
  const double r = std::pow(std::abs(s.coeffs[300]), 1.0 / 300.0);
  EXPECT_GE(r, 0.9);
  EXPECT_LE(r, 1.1);
}

TEST(EvalSeries, Basics) {
  EXPECT_EQ(eval_series({0.0, {1.0, 5.0}}, 0.0), 1.0);
  EXPECT_EQ(eval_series({0.5, {1.0, 5.0}}, 0.0), 0.0);
  EXPECT_EQ(eval_series({0.0, {1.0, 2.0}}, 0.5), 2.0);
  EXPECT_THROW(eval_series({0.5, {1.0}}, -0.1), BranchError);
}

TEST(Residual, ConstantSolvesTrivialEquation) {
  const LameParams p(0.5, 0.0, 0.0);
  for (double xi : {0.1, 0.5, 0.9}) EXPECT_EQ(ode_residual({0.0, {1.0}}, p, xi), 0.0);
  EXPECT_LE(std::abs(ode_residual_z({0.0, {1.0}}, p, 0.7)), 1e-8);
}

TEST(Residual, TruncatedSeriesAtSmallXi) {
  const LameParams p(0.5, 1.3, 2.7);
  const auto s = frobenius_coefficients(p, 0.0, 14);
  EXPECT_LE(std::abs(ode_residual_monic(s, p, 0.2)), 1e-9);
  // The cleared form carries the extra factor 4 xi (xi-1)(xi-b), about 2.4 here.
  EXPECT_LE(std::abs(ode_residual(s, p, 0.2)), 1.2e-9);
}

TEST(Residual, DecreasesWithTruncationOrder) {
  const LameParams p(0.5, 1.3, 2.7);
  double prev = INFINITY;
  for (int N : {6, 10, 14}) {
    const double r = std::abs(ode_residual(frobenius_coefficients(p, 0.0, N), p, 0.3));
    EXPECT_LT(r, prev);
    prev = r;
  }
}

TEST(Residual, WeierstrassFormAtQuarterOfK) {
  const LameParams p(0.5, 1.3, 2.7);
  const auto s = frobenius_coefficients(p, 0.0, 14);
  EXPECT_LE(std::abs(ode_residual_z(s, p, 0.4 * complete_K(0.5))), 1e-5);
}

TEST(Residual, ChainRuleConsistency) {
  const LameParams p(0.6, -0.8, 1.9);
  for (double l : {0.0, 0.5}) {
    const auto s = frobenius_coefficients(p, l, 40);
    for (double z : {0.2, 0.35, 0.5}) {
      const double xi = xi_of_z(z, p.rho);
      ASSERT_LE(std::abs(ode_residual(s, p, xi)), 1e-9);
      EXPECT_LE(std::abs(ode_residual_z(s, p, z)), 1e-5);
      auto f = [&](double x) { return eval_series(s, x); };
      EXPECT_LE(std::abs(ode_residual_xi_fn(f, p, xi)), 1e-5);
    }
  }
}
