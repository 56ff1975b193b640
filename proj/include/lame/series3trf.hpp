#pragma once

#include <cmath>
#include <stdexcept>

#include "lame/errors.hpp"
#include "lame/frobenius.hpp"
#include "lame/nested.hpp"

namespace lame {

enum class Kind { FirstKind, SecondKind };
enum class Family { InfiniteSeries, PolyType1 };
enum class Branch { Plus, Minus };

struct SolutionSpec {
  Kind kind = Kind::FirstKind;
  Family family = Family::InfiniteSeries;
  int n_mu = 8;
  int n_inner = 12;
};

inline double lambda_of(Kind k) { return k == Kind::FirstKind ? 0.0 : 0.5; }

struct Type1Quantization {
  int j = 0;
  int alpha_j = 0;
  Branch branch = Branch::Plus;
  double lambda = 0.0;
};

inline double quantized_alpha(const Type1Quantization& q) {
  const double v = 2.0 * (2.0 * q.alpha_j + q.j + q.lambda);
  return q.branch == Branch::Plus ? v : -v - 1.0;
}

// Floor rule for the integer limit of level k; equals alpha_j at k = j.
inline int level_limit(const Type1Quantization& q, int k) {
  const double alpha = quantized_alpha(q);
  const double base = q.branch == Branch::Plus ? alpha / 4.0 : (-alpha - 1.0) / 4.0;
  return static_cast<int>(std::floor(base - (k + q.lambda) / 2.0 + 1e-12));
}

// True when alpha is a type-1 value for exponent lambda, i.e. some B-chain parameter
// -alpha/4 + s or alpha/4 + 1/4 + s is a non-positive integer.
inline bool is_type1_quantized(double alpha, double lambda) {
  auto nonneg_int = [](double x) { return x >= -1e-12 && std::abs(x - std::round(x)) < 1e-12; };
  return nonneg_int(alpha / 2.0 - lambda) || nonneg_int((-alpha - 1.0) / 2.0 - lambda);
}

namespace detail {

inline ChainLevel lame_level(const LameParams& p, double lambda, int k) {
  const double s = (k + lambda) / 2.0;
  return {-p.alpha / 4.0 + s, p.alpha / 4.0 + 0.25 + s, 1.0 + s, 0.75 + s};
}

}  // namespace detail

// A-factor at level k, index i; multiplied by mu = -rho^2 xi.
inline double lame_afactor(const LameParams& p, double lambda, int k, int i) {
  const double s = i + (k + lambda) / 2.0;
  return (-(1.0 + p.b) * s * s + p.h / (16.0 * p.rho * p.rho)) / ((s + 0.5) * (s + 0.25));
}

inline std::vector<std::vector<double>> lame_chain_table(const LameParams& p, double lambda,
                                                         double eta, int n_mu, int n_inner) {
  return chain_table([&](int k) { return detail::lame_level(p, lambda, k); },
                     [&](int k, int i) { return lame_afactor(p, lambda, k, i); }, eta, n_mu,
                     n_inner);
}

namespace detail {

inline double lame_nested_value(const LameParams& p, double lambda, double xi, int n_mu,
                                int n_inner) {
  const double r2 = p.rho * p.rho;
  const double mu = -r2 * xi, eta = -r2 * xi * xi;
  if (std::abs(eta) >= 1.0) throw DivergenceError("3TRF series: |eta| >= 1");
  if (lambda != 0.0 && xi < 0.0) throw BranchError("xi^(1/2) undefined for xi < 0");
  const double core = sum_blocks(lame_chain_table(p, lambda, eta, n_mu, n_inner), mu);
  return lambda == 0.0 ? core : std::sqrt(xi) * core;
}

}  // namespace detail

inline double lf_infinite(const LameParams& p, const SolutionSpec& spec, double xi,
                          bool* quantized_warning = nullptr) {
  if (spec.kind != Kind::FirstKind || spec.family != Family::InfiniteSeries)
    throw std::invalid_argument("lf_infinite: spec must be first kind, infinite series");
  if (quantized_warning) *quantized_warning = is_type1_quantized(p.alpha, 0.0);
  return detail::lame_nested_value(p, 0.0, xi, spec.n_mu, spec.n_inner);
}

inline double ls_infinite(const LameParams& p, const SolutionSpec& spec, double xi,
                          bool* quantized_warning = nullptr) {
  if (spec.kind != Kind::SecondKind || spec.family != Family::InfiniteSeries)
    throw std::invalid_argument("ls_infinite: spec must be second kind, infinite series");
  if (xi < 0.0) throw BranchError("ls_infinite: xi < 0");
  if (quantized_warning) *quantized_warning = is_type1_quantized(p.alpha, 0.5);
  return detail::lame_nested_value(p, 0.5, xi, spec.n_mu, spec.n_inner);
}

inline constexpr int kPolyInnerCap = 40;

// Type-1 polynomial: the chain of level j stops after alpha_j + 1 terms through the vanishing
// Pochhammer factor; levels whose parameter never reaches a non-positive integer keep running
// and are capped at n_inner.
inline double lf_poly_type1(const LameParams& p, const Type1Quantization& q, int n_mu, double xi,
                            int n_inner = kPolyInnerCap) {
  if (q.lambda != 0.0 && q.lambda != 0.5)
    throw QuantizationError("lf_poly_type1: lambda must be 0 or 1/2", q.j);
  if (std::abs(p.alpha - quantized_alpha(q)) > 1e-12)
    throw QuantizationError("lf_poly_type1: alpha does not match the quantization", q.j);
  if (level_limit(q, q.j) != q.alpha_j)
    throw QuantizationError("lf_poly_type1: level limit mismatch", q.j);
  return detail::lame_nested_value(p, q.lambda, xi, n_mu, n_inner);
}

// Re-expands mu^n eta^i = (-rho^2)^{n+i} xi^{n+2i}; coefficients of the truncated sum.
inline SeriesPoly expand_to_xi_coeffs(const LameParams& p, const SolutionSpec& spec, int N) {
  if (N > spec.n_mu + 2 * spec.n_inner)
    throw std::invalid_argument("expand_to_xi_coeffs: N exceeds n_mu + 2 n_inner");
  const double lambda = lambda_of(spec.kind);
  const auto t = lame_chain_table(p, lambda, 1.0, spec.n_mu, spec.n_inner);
  SeriesPoly s{lambda, std::vector<double>(N + 1, 0.0)};
  const double m = -p.rho * p.rho;
  for (int n = 0; n <= spec.n_mu; ++n)
    for (int i = 0; i <= spec.n_inner && n + 2 * i <= N; ++i)
      s.coeffs[n + 2 * i] += std::pow(m, n + i) * t[n][i];
  return s;
}

}  // namespace lame
