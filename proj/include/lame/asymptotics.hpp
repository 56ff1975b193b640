#pragma once

#include <cmath>
#include <vector>

#include "lame/errors.hpp"
#include "lame/frobenius.hpp"

namespace lame {

struct DomainVerdict {
  bool inside;
  double margin;
};

inline DomainVerdict verdict_from_expression(double expr) {
  const double margin = 1.0 - std::abs(expr);
  return {margin > 0.0, margin};
}

// Convergence region |(1+rho^2) xi - rho^2 xi^2| < 1.
inline DomainVerdict convergence_domain(double xi, double rho) {
  const double r2 = rho * rho;
  return verdict_from_expression((1.0 + r2) * xi - r2 * xi * xi);
}

// Large-n limit: 1 / (1 + rho^2 xi^2 - (1+rho^2) xi) = 1 / ((1-xi)(1-rho^2 xi)).
inline double lame_asymptotic_limit(const LameParams& p, double xi) {
  const double r2 = p.rho * p.rho;
  const double den = 1.0 + r2 * xi * xi - (1.0 + r2) * xi;
  if (den == 0.0) throw PoleError("lame_asymptotic_limit: pole at xi = 1 or xi = rho^-2");
  return 1.0 / den;
}

// Small-rho region: xi < 1/(1+rho^2).
inline DomainVerdict small_rho_domain(double xi, double rho) {
  return verdict_from_expression((1.0 + rho * rho) * xi);
}

// 1 / (1 - (1+rho^2) xi); drops the rho^2 xi^2 term of the large-n limit.
inline double lame_asymptotic_small_rho(const LameParams& p, double xi) {
  const double den = 1.0 - (1.0 + p.rho * p.rho) * xi;
  if (den == 0.0) throw PoleError("lame_asymptotic_small_rho: pole at xi = 1/(1+rho^2)");
  return 1.0 / den;
}

// Limit recurrence c_{n+1} = (1+rho^2) c_n - rho^2 c_{n-1}, c_0 = 1, c_1 = 1+rho^2.
inline std::vector<double> geometric_tail_coeffs(double rho, int n) {
  const double r2 = rho * rho;
  std::vector<double> c{1.0, 1.0 + r2};
  for (int k = 1; k < n; ++k) c.push_back((1.0 + r2) * c[k] - r2 * c[k - 1]);
  c.resize(n + 1);
  return c;
}

inline double geometric_tail_sum(double rho, double xi, int n = 200) {
  const auto c = geometric_tail_coeffs(rho, n);
  double s = 0.0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) s = s * xi + *it;
  return s;
}

}  // namespace lame
