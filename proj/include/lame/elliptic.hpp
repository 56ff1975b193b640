#pragma once

#include <array>
#include <cmath>
#include <numbers>

#include "lame/errors.hpp"

namespace lame {

struct EllipticModulus {
  double rho;

  explicit EllipticModulus(double r) : rho(r) {
    if (!(r > 0.0 && r < 1.0)) throw DomainError("elliptic modulus must lie in (0,1)");
  }
};

// K(rho) = pi / (2 AGM(1, sqrt(1 - rho^2))).
inline double complete_K(EllipticModulus m) {
  double a = 1.0;
  double b = std::sqrt((1.0 - m.rho) * (1.0 + m.rho));
  for (int it = 0; it < 64 && std::abs(a - b) > 1e-16 * a; ++it) {
    const double an = 0.5 * (a + b);
    b = std::sqrt(a * b);
    a = an;
  }
  return std::numbers::pi / (2.0 * a);
}

inline double complete_K(double rho) { return complete_K(EllipticModulus(rho)); }

// Descending Landen ladder: build the AGM table, then unwind the amplitude.
inline double jacobi_sn(double z, EllipticModulus m) {
  constexpr int kCap = 24;
  std::array<double, kCap + 1> a{}, c{};
  a[0] = 1.0;
  double b = std::sqrt((1.0 - m.rho) * (1.0 + m.rho));
  c[0] = m.rho;
  int n = 0;
  while (n < kCap && std::abs(c[n]) > 1e-15) {
    a[n + 1] = 0.5 * (a[n] + b);
    c[n + 1] = 0.5 * (a[n] - b);
    b = std::sqrt(a[n] * b);
    ++n;
  }
  double phi = std::ldexp(a[n] * z, n);
  for (int k = n; k > 0; --k) phi = 0.5 * (phi + std::asin(c[k] / a[k] * std::sin(phi)));
  return std::sin(phi);
}

inline double jacobi_sn(double z, double rho) { return jacobi_sn(z, EllipticModulus(rho)); }

// xi = sn^2(z, rho).
inline double xi_of_z(double z, double rho) {
  const double s = jacobi_sn(z, rho);
  return s * s;
}

}  // namespace lame
