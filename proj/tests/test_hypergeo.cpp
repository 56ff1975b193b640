#include <gtest/gtest.h>

#include <cmath>
#include <complex>

#include "lame/hypergeo.hpp"
#include "oracles.hpp"

using namespace lame;

TEST(Pochhammer, Basics) {
  EXPECT_EQ(pochhammer(3.7, 0), 1.0);
  EXPECT_EQ(pochhammer(1.0, 5), 120.0);
  EXPECT_EQ(pochhammer(-2.0, 3), 0.0);
  EXPECT_DOUBLE_EQ(pochhammer_ratio(0.5, 2, 4), 2.5 * 3.5);
}

TEST(Gauss2F1, AtOriginIsOne) { EXPECT_EQ(gauss_2f1<double>({0.3, -1.7, 2.2}, 0.0), 1.0); }

TEST(Gauss2F1, LogarithmClosedForm) {
  EXPECT_NEAR(gauss_2f1<double>({1.0, 1.0, 2.0}, 0.5), 2.0 * std::log(2.0), 1e-12);
}

TEST(Gauss2F1, TerminatingPolynomial) {
  const double w = 0.7;
  const double brute = 1.0 + (-2.0 * 5.0) / (3.0 * 1.0) * w + (-2.0 * -1.0 * 5.0 * 6.0) / (3.0 * 4.0 * 2.0) * w * w;
  EXPECT_NEAR(gauss_2f1<double>({-2.0, 5.0, 3.0}, w), brute, 1e-14);
}

TEST(Gauss2F1, TerminatingSeriesCountsTerms) {
  for (int m = 0; m < 8; ++m) {
    int used = -1;
    hypergeo_moment<double>({-static_cast<double>(m), 1.3, 0.7}, 3.0, 0.0, 0.0, 1.0, 0.0, {}, &used);
    EXPECT_EQ(used, m + 1);
  }
}

TEST(Gauss2F1, Errors) {
  EXPECT_THROW(gauss_2f1<double>({0.5, 0.5, 1.0}, 1.0), DivergenceError);
  EXPECT_THROW(gauss_2f1<double>({0.5, 0.5, -2.0}, 0.3), PoleError);
  EXPECT_NO_THROW(gauss_2f1<double>({-1.0, 0.5, -2.0}, 0.3));
}

TEST(Gauss2F1, MatchesBruteForce) {
  oracle::Rng g(21);
  for (int k = 0; k < 50; ++k) {
    const double a = oracle::uniform(g, -3, 3), b = oracle::uniform(g, -3, 3);
    const double c = oracle::uniform(g, 0.2, 4), w = oracle::uniform(g, -0.8, 0.8);
    EXPECT_NEAR(gauss_2f1<double>({a, b, c}, w), oracle::hyp2f1(a, b, c, w), 1e-11);
  }
}

TEST(Gauss2F1, BinomialIdentity) {
  oracle::Rng g(22);
  for (int k = 0; k < 50; ++k) {
    const double a = oracle::uniform(g, -3, 3), b = oracle::uniform(g, 0.1, 3);
    const double w = oracle::uniform(g, -0.8, 0.8);
    EXPECT_NEAR(gauss_2f1<double>({a, b, b}, w), std::pow(1.0 - w, -a), 1e-10);
  }
}

TEST(Gauss2F1, ComplexArgumentAgreesWithReal) {
  const auto z = gauss_2f1<std::complex<double>>({0.4, 1.1, 2.3}, {0.3, 0.0});
  EXPECT_NEAR(z.real(), gauss_2f1<double>({0.4, 1.1, 2.3}, 0.3), 1e-15);
  EXPECT_EQ(z.imag(), 0.0);
}

TEST(Weighted2F1, OriginValues) {
  EXPECT_EQ(weighted_2f1<double>({0.3, 0.4, 1.5}, 0.0, 0.0), 0.0);
  EXPECT_DOUBLE_EQ(weighted_2f1<double>({0.3, 0.4, 1.5}, 0.25, 0.0), 0.0625);
}

TEST(Weighted2F1, SingleTerm) {
  EXPECT_NEAR(weighted_2f1<double>({-1.0, 2.0, 3.0}, 0.0, 0.5), -1.0 / 3.0, 1e-15);
}

TEST(Weighted2F1, EqualsEulerOperatorByFiniteDifferences) {
  oracle::Rng g(23);
  const double h = 1e-5;
  for (int k = 0; k < 20; ++k) {
    const HypergeometricArgs a{oracle::uniform(g, -2, 2), oracle::uniform(g, -2, 2), oracle::uniform(g, 0.3, 3)};
    const double w = oracle::uniform(g, 0.05, 0.5);
    auto f = [&](double x) { return gauss_2f1<double>(a, x); };
    auto theta_f = [&](double x) { return x * (f(x + h) - f(x - h)) / (2 * h); };
    const double fd = w * (theta_f(w + h) - theta_f(w - h)) / (2 * h);
    const double got = weighted_2f1<double>(a, 0.0, w);
    EXPECT_LE(std::abs(got - fd), 1e-6 * std::max(1.0, std::abs(got)));
  }
}
