#include <gtest/gtest.h>

#include <numbers>

#include "lame/elliptic.hpp"
#include "oracles.hpp"

using namespace lame;

TEST(Elliptic, KDegeneratesToHalfPi) { EXPECT_NEAR(complete_K(1e-8), std::numbers::pi / 2.0, 1e-7); }

TEST(Elliptic, KMatchesQuadrature) { EXPECT_NEAR(complete_K(0.5), oracle::complete_K(0.5), 1e-12); }

TEST(Elliptic, KIncreasesWithModulus) {
  EXPECT_LT(complete_K(0.3), complete_K(0.6));
  EXPECT_LT(complete_K(0.6), complete_K(0.9));
}

TEST(Elliptic, RejectsModulusOutsideUnitInterval) {
  EXPECT_THROW(complete_K(0.0), DomainError);
  EXPECT_THROW(complete_K(1.0), DomainError);
  EXPECT_THROW(jacobi_sn(0.1, -0.2), DomainError);
}

TEST(Elliptic, SnAtOriginAndQuarterPeriod) {
  for (double r : {0.1, 0.5, 0.9}) EXPECT_EQ(jacobi_sn(0.0, r), 0.0);
  EXPECT_NEAR(jacobi_sn(oracle::complete_K(0.5), 0.5), 1.0, 1e-12);
  EXPECT_NEAR(xi_of_z(oracle::complete_K(0.5), 0.5), 1.0, 1e-12);
  EXPECT_EQ(xi_of_z(0.0, 0.5), 0.0);
}

TEST(Elliptic, SnDegeneratesToSine) { EXPECT_NEAR(jacobi_sn(0.7, 1e-8), std::sin(0.7), 1e-7); }

TEST(Elliptic, XiStaysInUnitInterval) {
  oracle::Rng g(11);
  for (int k = 0; k < 10000; ++k) {
    const double rho = oracle::uniform(g, 0.01, 0.99);
    const double xi = xi_of_z(oracle::uniform(g, -20.0, 20.0), rho);
    ASSERT_GE(xi, 0.0);
    ASSERT_LE(xi, 1.0);
  }
}

TEST(Elliptic, SnIsPeriodic) {
  oracle::Rng g(12);
  for (int k = 0; k < 200; ++k) {
    const double rho = oracle::uniform(g, 0.05, 0.95);
    const double z = oracle::uniform(g, -10.0, 10.0);
    EXPECT_NEAR(jacobi_sn(z + 4.0 * complete_K(rho), rho), jacobi_sn(z, rho), 1e-10);
  }
}

TEST(Elliptic, SnMatchesQuadratureInversion) {
  oracle::Rng g(13);
  for (int k = 0; k < 100; ++k) {
    const double rho = oracle::uniform(g, 0.05, 0.95);
    const double z = oracle::uniform(g, -6.0, 6.0);
    EXPECT_NEAR(jacobi_sn(z, rho), oracle::sn(z, rho), 1e-9) << "z=" << z << " rho=" << rho;
  }
}
