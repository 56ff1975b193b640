#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "lame/errors.hpp"
#include "lame/frobenius.hpp"
#include "lame/heunlocal.hpp"
#include "lame/hypergeo.hpp"
#include "lame/quadrature.hpp"
#include "lame/series3trf.hpp"

namespace lame {

using cplx = std::complex<double>;

struct QuadratureSpec {
  int n_gl = 64;
  int n_contour = 256;
  double contour_radius = 0.5;
};

// The contour must enclose v = 0, exclude v = 1 and keep |base v (1-t)(1-u)| < 0.9.
inline void validate(const QuadratureSpec& s, double base) {
  if (s.n_gl < 16) throw std::invalid_argument("QuadratureSpec: n_gl must be >= 16");
  if (s.n_contour < 64) throw std::invalid_argument("QuadratureSpec: n_contour must be >= 64");
  if (!(s.contour_radius > 0.0 && s.contour_radius < 1.0))
    throw std::invalid_argument("QuadratureSpec: contour radius must lie in (0,1)");
  if (s.contour_radius * std::abs(base) >= 0.9)
    throw std::invalid_argument("QuadratureSpec: contour radius too large for |eta|");
}

// Integration variables of levels i..j; the chain closes on eta for i > j.
struct WChain {
  int i = 1, j = 0;
  std::vector<cplx> v;
  std::vector<double> t, u;
  double eta = 0.0;
};

// w_{i,j} = v_i/(v_i-1) * w_{i+1,j} t_i u_i / (1 - w_{i+1,j} v_i (1-t_i)(1-u_i)).
inline cplx w_value(const WChain& c) {
  cplx w = c.eta;
  for (int l = c.j; l >= c.i; --l) {
    const auto k = static_cast<std::size_t>(l - c.i);
    const cplx v = c.v.at(k);
    const cplx den = (v - 1.0) * (1.0 - w * v * (1.0 - c.t.at(k)) * (1.0 - c.u.at(k)));
    if (std::abs(den) == 0.0) throw SingularConfigurationError("w_value: vanishing denominator");
    w = w * v * c.t.at(k) * c.u.at(k) / den;
  }
  return w;
}

namespace detail {

// int_0^1 x^p f(x) dx = int_0^1 m s^{m(p+1)-1} f(s^m) ds; m chosen so the new power is a
// non-negative integer when possible.
struct PowerSubstitution {
  int m = 1;
  double power = 0.0;
};

inline PowerSubstitution power_substitution(double p) {
  if (p <= -1.0) throw DomainError("integral: endpoint exponent must exceed -1");
  if (p >= 0.0) return {1, p};
  for (int m = 1; m <= 64; ++m) {
    const double e = m * (p + 1.0);
    if (e >= 1.0 - 1e-12 && std::abs(e - std::round(e)) < 1e-12) return {m, std::round(e) - 1.0};
  }
  const int m = static_cast<int>(std::ceil(1.0 / (p + 1.0)));
  return {m, m * (p + 1.0) - 1.0};
}

struct MappedRule {
  std::vector<double> x, w;
};

inline MappedRule mapped_rule(const GaussRule& g, double p) {
  const auto s = power_substitution(p);
  MappedRule r;
  for (std::size_t k = 0; k < g.nodes.size(); ++k) {
    const double x = g.nodes[k];
    r.x.push_back(std::pow(x, s.m));
    r.w.push_back(g.weights[k] * s.m * std::pow(x, s.power));
  }
  return r;
}

// Order-one block integrand without the outer variable.
struct Order1Kernel {
  double base;               // closing value of the w-chain
  double t_exp, u_exp;       // endpoint powers
  double chain_exp;          // exponent c of (1 - X)^{-c}
  int alpha1;                // integer power of (v-1)/v
  bool alpha1_over_chain;    // (v-1)/v is divided by (1 - X) inside the alpha1 power
  HypergeometricArgs g;      // level-zero 2F1
  double c2, c1, c0, shift;  // operator weight
};

inline double order1_integral(const Order1Kernel& k, const QuadratureSpec& spec) {
  validate(spec, k.base);
  const auto gl = gauss_legendre_unit(spec.n_gl);
  const auto rt = mapped_rule(gl, k.t_exp);
  const auto ru = mapped_rule(gl, k.u_exp);
  cplx total = 0.0;
  for (int m = 0; m < spec.n_contour; ++m) {
    const double th = 2.0 * std::numbers::pi * m / spec.n_contour;
    const cplx v = std::polar(spec.contour_radius, th);
    const cplx ratio = (v - 1.0) / v;
    cplx acc = 0.0;
    for (std::size_t a = 0; a < rt.x.size(); ++a) {
      for (std::size_t b = 0; b < ru.x.size(); ++b) {
        const WChain c{1, 1, {v}, {rt.x[a]}, {ru.x[b]}, k.base};
        const cplx one_minus_x = 1.0 - k.base * v * (1.0 - rt.x[a]) * (1.0 - ru.x[b]);
        const cplx w = w_value(c);
        const cplx op = hypergeo_moment<cplx>(k.g, w, k.c2, k.c1, k.c0, k.shift);
        cplx f = std::pow(one_minus_x, -k.chain_exp) * op;
        const cplx r = k.alpha1_over_chain ? ratio / one_minus_x : ratio;
        for (int e = 0; e < k.alpha1; ++e) f *= r;
        acc += rt.w[a] * ru.w[b] * f;
      }
    }
    // (1/2 pi i) oint g dv/v with dv = i v dtheta: the trapezoid weight is 1/N.
    total += acc;
  }
  total /= static_cast<double>(spec.n_contour);
  if (std::abs(total.imag()) > 1e-8) throw QuadratureError("integral: imaginary residue above 1e-8");
  return total.real();
}

inline int clamped_limit(int l) { return std::max(0, l); }

}  // namespace detail

// Exact order-one block of the type-1 representation with per-level integer limits.
inline double y1_series_reference(const LameParams& p, const Type1Quantization& q, double xi) {
  const double lam = q.lambda;
  const int a0 = detail::clamped_limit(level_limit(q, 0));
  const int a1 = detail::clamped_limit(level_limit(q, 1));
  const double eta = -p.rho * p.rho * xi * xi;
  const double mu = -p.rho * p.rho * xi;
  double sum = 0.0;
  double c0 = 1.0;
  for (int i0 = 0; i0 <= a0; ++i0) {
    const double s = i0 + 0.5 * lam;
    const double afac = (-(1.0 + p.b) * s * s + p.h * p.b / 16.0) / ((s + 0.5) * (s + 0.25));
    double r = 1.0;
    double inner = 0.0;
    for (int i1 = i0; i1 <= a1; ++i1) {
      inner += r * std::pow(eta, i1);
      r *= (-a1 + i1) * (a1 + 1.25 + lam + i1) / ((1.5 + 0.5 * lam + i1) * (1.25 + 0.5 * lam + i1));
    }
    sum += c0 * afac * inner;
    c0 *= (-a0 + i0) * (a0 + 0.25 + lam + i0) / ((1.0 + 0.5 * lam + i0) * (0.75 + 0.5 * lam + i0));
  }
  return sum * mu * detail::xi_power(xi, lam);
}

inline double y1_integral(const LameParams& p, const Type1Quantization& q, double xi,
                          const QuadratureSpec& spec = {}) {
  const double lam = q.lambda;
  const int a0 = detail::clamped_limit(level_limit(q, 0));
  const int a1 = detail::clamped_limit(level_limit(q, 1));
  const double eta = -p.rho * p.rho * xi * xi;
  const detail::Order1Kernel k{eta,
                               0.5 * (lam - 1.5),
                               0.5 * (lam - 1.0),
                               1.25 + lam,
                               a1,
                               true,
                               {-static_cast<double>(a0), a0 + 0.25 + lam, 0.75 + lam},
                               -(1.0 + p.b),
                               0.0,
                               p.h * p.b / 16.0,
                               0.5 * lam};
  return detail::order1_integral(k, spec) * (-p.rho * p.rho * xi) * detail::xi_power(xi, lam);
}

// Level-zero Omega with the per-level limit in place of alpha.
inline double heun_omega0(const HeunParams& hp, int a0) {
  const double a = hp.a;
  return (-2.0 * a0 + hp.beta - hp.delta + a * (hp.delta + hp.gamma - 1.0)) / (2.0 * (1.0 + a));
}

inline double heun_y1_series_reference(const HeunParams& hp, const HeunQuantization& q, double x) {
  const int a0 = detail::clamped_limit(heun_level_limit(q, 0));
  const int a1 = detail::clamped_limit(heun_level_limit(q, 1));
  const auto vars = heun_variables(hp.a, x);
  const double om = heun_omega0(hp, a0);
  const double acc = heun_series_coeffs(hp).accessory();
  double sum = 0.0;
  double c0 = 1.0;
  for (int i0 = 0; i0 <= a0; ++i0) {
    const double afac = (i0 * (i0 + om) + acc) / ((i0 + 0.5) * (i0 + 0.5 * hp.gamma));
    double r = 1.0;
    double inner = 0.0;
    for (int i1 = i0; i1 <= a1; ++i1) {
      inner += r * std::pow(vars.z, i1);
      r *= (-a1 + i1) * (0.5 + 0.5 * hp.beta + i1) / ((1.5 + i1) * (1.0 + 0.5 * hp.gamma + i1));
    }
    sum += c0 * afac * inner;
    c0 *= (-a0 + i0) * (0.5 * hp.beta + i0) / ((0.5 + 0.5 * hp.gamma + i0) * (1.0 + i0));
  }
  return sum * vars.eta;
}

inline double heun_y1_integral(const HeunParams& hp, const HeunQuantization& q, double x,
                               const QuadratureSpec& spec = {}) {
  const int a0 = detail::clamped_limit(heun_level_limit(q, 0));
  const int a1 = detail::clamped_limit(heun_level_limit(q, 1));
  const auto vars = heun_variables(hp.a, x);
  const detail::Order1Kernel k{vars.z,
                               -0.5,
                               0.5 * (hp.gamma - 2.0),
                               0.5 * (1.0 + hp.beta),
                               a1,
                               false,
                               {-static_cast<double>(a0), 0.5 * hp.beta, 0.5 + 0.5 * hp.gamma},
                               1.0,
                               heun_omega0(hp, a0),
                               heun_series_coeffs(hp).accessory(),
                               0.0};
  return detail::order1_integral(k, spec) * vars.eta;
}

}  // namespace lame
