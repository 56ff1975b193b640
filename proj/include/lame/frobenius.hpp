#pragma once

#include <cmath>
#include <utility>
#include <vector>

#include "lame/elliptic.hpp"
#include "lame/errors.hpp"

namespace lame {

// Parameters of y'' = {alpha(alpha+1) rho^2 sn^2(z,rho) - h} y.
struct LameParams {
  double rho, h, alpha, b;

  LameParams(double rho_, double h_, double alpha_) : rho(rho_), h(h_), alpha(alpha_), b(0.0) {
    if (!(rho > 0.0 && rho < 1.0)) throw DomainError("LameParams: rho must lie in (0,1)");
    b = 1.0 / (rho * rho);
  }
};

struct SeriesPoly {
  double lambda = 0.0;
  std::vector<double> coeffs{1.0};
};

inline bool is_indicial_root(double lambda) { return lambda == 0.0 || lambda == 0.5; }

struct RecurrenceCoeffs {
  double A, B;
};

// c_{n+1} = A_n c_n + B_n c_{n-1}, from P y'' + Q y' + R y = 0 with
// P = 4 xi (xi-1)(xi-b), Q = 2(3 xi^2 - 2(1+b) xi + b), R = -alpha(alpha+1) xi + h b.
inline RecurrenceCoeffs recurrence_coeffs(const LameParams& p, double lambda, int n) {
  if (!is_indicial_root(lambda)) throw DomainError("recurrence_coeffs: lambda must be 0 or 1/2");
  const double s = n + lambda;
  const double den = 2.0 * p.b * (s + 1.0) * (2.0 * s + 1.0);
  return {(4.0 * (1.0 + p.b) * s * s - p.h * p.b) / den,
          -(2.0 * s - 2.0 - p.alpha) * (2.0 * s - 1.0 + p.alpha) / den};
}

inline SeriesPoly frobenius_coefficients(const LameParams& p, double lambda, int N) {
  SeriesPoly s{lambda, {1.0}};
  s.coeffs.reserve(N + 1);
  for (int n = 0; n < N; ++n) {
    const auto [A, B] = recurrence_coeffs(p, lambda, n);
    const double prev = n > 0 ? s.coeffs[n - 1] : 0.0;
    s.coeffs.push_back(A * s.coeffs[n] + B * prev);
  }
  return s;
}

namespace detail {

inline double xi_power(double xi, double e) {
  if (e == 0.0) return 1.0;
  if (xi < 0.0 && e != std::round(e)) throw BranchError("xi^lambda undefined for xi < 0");
  return std::pow(xi, e);
}

// Value and first two derivatives of xi^lambda * sum c_n xi^n.
struct Jet {
  double y, dy, d2y;
};

inline Jet series_jet(const SeriesPoly& s, double xi) {
  double p = 0.0, dp = 0.0, d2p = 0.0;
  for (auto it = s.coeffs.rbegin(); it != s.coeffs.rend(); ++it) {
    d2p = d2p * xi + 2.0 * dp;
    dp = dp * xi + p;
    p = p * xi + *it;
  }
  const double l = s.lambda;
  if (l == 0.0) return {p, dp, d2p};
  const double xl = xi_power(xi, l);
  const double xl1 = xl / xi, xl2 = xl1 / xi;
  return {xl * p, l * xl1 * p + xl * dp,
          l * (l - 1.0) * xl2 * p + 2.0 * l * xl1 * dp + xl * d2p};
}

}  // namespace detail

inline double eval_series(const SeriesPoly& s, double xi) {
  if (s.lambda != 0.0 && xi < 0.0) throw BranchError("eval_series: xi < 0 with lambda = 1/2");
  if (xi == 0.0) return s.lambda == 0.0 ? s.coeffs.front() : 0.0;
  return detail::series_jet(s, xi).y;
}

// Algebraic-form operator, denominators cleared, applied to (y, y', y'').
inline double cleared_operator(const LameParams& p, double xi, double y, double dy, double d2y) {
  const double b = p.b;
  const double P = 4.0 * xi * (xi - 1.0) * (xi - b);
  const double Q = 2.0 * ((xi - 1.0) * (xi - b) + xi * (xi - b) + xi * (xi - 1.0));
  const double R = -p.alpha * (p.alpha + 1.0) * xi + p.h * b;
  return P * d2y + Q * dy + R * y;
}

inline double ode_residual(const SeriesPoly& s, const LameParams& p, double xi) {
  const auto j = detail::series_jet(s, xi);
  return cleared_operator(p, xi, j.y, j.dy, j.d2y);
}

// Residual of the equation in its printed monic form y'' + (Q/P) y' + (R/P) y.
inline double ode_residual_monic(const SeriesPoly& s, const LameParams& p, double xi) {
  return ode_residual(s, p, xi) / (4.0 * xi * (xi - 1.0) * (xi - p.b));
}

inline constexpr double kFiniteDifferenceStep = 1e-4;

// Fourth-order central second derivative.
template <class F>
double second_derivative(F&& f, double x, double h = kFiniteDifferenceStep) {
  return (-f(x + 2 * h) + 16.0 * f(x + h) - 30.0 * f(x) + 16.0 * f(x - h) - f(x - 2 * h)) /
         (12.0 * h * h);
}

template <class F>
double first_derivative(F&& f, double x, double h = kFiniteDifferenceStep) {
  return (-f(x + 2 * h) + 8.0 * f(x + h) - 8.0 * f(x - h) + f(x - 2 * h)) / (12.0 * h);
}

// Weierstrass-form residual of an arbitrary function of xi, differentiated in z.
template <class F>
double ode_residual_z_fn(F&& y_of_xi, const LameParams& p, double z) {
  auto yz = [&](double t) { return y_of_xi(xi_of_z(t, p.rho)); };
  const double xi = xi_of_z(z, p.rho);
  return second_derivative(yz, z) -
         (p.alpha * (p.alpha + 1.0) * p.rho * p.rho * xi - p.h) * yz(z);
}

inline double ode_residual_z(const SeriesPoly& s, const LameParams& p, double z) {
  return ode_residual_z_fn([&](double xi) { return eval_series(s, xi); }, p, z);
}

// Weierstrass-form residual written in xi: with (dxi/dz)^2 = 4 rho^2 xi (xi-1)(xi-b) the chain rule
// gives y_zz - (...)y = rho^2 (P y'' + Q y' + R y). Usable where no real z reaches xi.
template <class F>
double ode_residual_xi_fn(F&& y_of_xi, const LameParams& p, double xi) {
  return p.rho * p.rho *
         cleared_operator(p, xi, y_of_xi(xi), first_derivative(y_of_xi, xi),
                          second_derivative(y_of_xi, xi));
}

}  // namespace lame
