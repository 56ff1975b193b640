#pragma once

#include <array>
#include <cmath>
#include <ostream>
#include <string>
#include <vector>

#include "lame/asymptotics.hpp"
#include "lame/errors.hpp"
#include "lame/frobenius.hpp"
#include "lame/nested.hpp"

namespace lame {

// Local Heun equation with singular points 0, 1, a, infinity.
struct HeunParams {
  double a, q, alpha, beta, gamma, delta, epsilon;

  HeunParams(double a_, double q_, double al, double be, double ga, double de)
      : a(a_), q(q_), alpha(al), beta(be), gamma(ga), delta(de), epsilon(al + be - ga - de + 1.0) {
    if (a == 0.0 || a == 1.0) throw DomainError("HeunParams: a must differ from 0 and 1");
  }
};

// Base correspondence: gamma = delta = epsilon = 1/2, a = rho^-2, q = -h rho^-2 / 4.
inline HeunParams lame_heun_params(const LameParams& p) {
  return {p.b, -p.h * p.b / 4.0, (p.alpha + 1.0) / 2.0, -p.alpha / 2.0, 0.5, 0.5};
}

// Where-block of the infinite series, stored as Q = q/(2(1+a)).
struct HeunSeriesCoeffs {
  double Gamma0;
  double Q;

  double Gamma(int k) const { return Gamma0 + 0.5 * k; }
  // Integral-form coefficient Omega_{n-k-1} as a function of m = n - k.
  double Omega(int m) const { return Gamma(m - 1); }
  // The A-factor needs q/(4(1+a)); see the README note on the accessory term.
  double accessory() const { return 0.5 * Q; }
};

inline HeunSeriesCoeffs heun_series_coeffs(const HeunParams& hp) {
  const double a = hp.a;
  return {(hp.alpha + hp.beta - hp.delta + a * (hp.delta + hp.gamma - 1.0)) / (2.0 * (1.0 + a)),
          hp.q / (2.0 * (1.0 + a))};
}

inline ChainLevel heun_level(const HeunParams& hp, int k) {
  return {0.5 * k + 0.5 * hp.alpha, 0.5 * k + 0.5 * hp.beta, 1.0 + 0.5 * k,
          0.5 + 0.5 * k + 0.5 * hp.gamma};
}

inline double heun_afactor(const HeunParams& hp, const HeunSeriesCoeffs& c, int k, int i) {
  const double s = i + 0.5 * k;
  return (s * (i + c.Gamma(k)) + c.accessory()) / ((s + 0.5) * (s + 0.5 * hp.gamma));
}

struct HeunVariables {
  double eta, z;
};

inline HeunVariables heun_variables(double a, double x) { return {(1.0 + a) * x / a, -x * x / a}; }

inline std::vector<std::vector<double>> heun_chain_table(const HeunParams& hp, double z, int n_mu,
                                                         int n_inner) {
  const auto c = heun_series_coeffs(hp);
  return chain_table([&](int k) { return heun_level(hp, k); },
                     [&](int k, int i) { return heun_afactor(hp, c, k, i); }, z, n_mu, n_inner);
}

inline double heun_hf_infinite(const HeunParams& hp, int n_mu, int n_inner, double x) {
  const auto v = heun_variables(hp.a, x);
  if (std::abs(v.z) >= 1.0) throw DomainError("heun_hf_infinite: |x^2/a| >= 1");
  if (std::abs(v.z + v.eta) >= 1.0) throw DomainError("heun_hf_infinite: |-x^2/a + (1+a)x/a| >= 1");
  return sum_blocks(heun_chain_table(hp, v.z, n_mu, n_inner), v.eta);
}

struct HeunQuantization {
  int j = 0;
  int alpha_j = 0;
};

inline double heun_quantized_alpha(const HeunQuantization& q) { return -2.0 * q.alpha_j - q.j; }

// Floor rule for the integer limit of level k; equals alpha_j at k = j.
inline int heun_level_limit(const HeunQuantization& q, int k) {
  return static_cast<int>(std::floor(-(heun_quantized_alpha(q) + k) / 2.0 + 1e-12));
}

inline double heun_hf_poly1(const HeunParams& hp, const HeunQuantization& q, int n_mu, double x,
                            int n_inner = 40) {
  if (std::abs(hp.alpha - heun_quantized_alpha(q)) > 1e-12)
    throw QuantizationError("heun_hf_poly1: alpha does not match -2 alpha_j - j", q.j);
  return heun_hf_infinite(hp, n_mu, n_inner, x);
}

enum class PrefactorBase { Xi, OneMinusXi, OneMinusRho2Xi, ShiftedXi };
enum class VariableMap { Identity, OneMinus, Inverse, Mobius, OneMinusInverse, ScaledMobius };
enum class Regime { Generic, ANearMinus1, AbsALarge };

struct PrefactorTerm {
  PrefactorBase base;
  double e0, e1;  // exponent e0 + e1 * alpha
};

struct HlArguments {
  double a, q, alpha, beta, gamma, delta;
};

// Values read off a printed where-block, as functions of the Lame parameters.
struct PrintedWhereBlock {
  double eta_coeff;  // eta = eta_coeff * varsigma
  double z_coeff;    // z = z_coeff * varsigma^2
  double Gamma0, Q;
  double Omega1;     // integral-form Omega at n - k = 1
  double Q_integral; // Q of the integral-form where-block
};

struct TransformDescriptor {
  int id;
  std::vector<PrefactorTerm> prefactor;
  VariableMap variable_map;
  HeunParams (*param_map)(const HeunParams&);
  HlArguments (*printed_arguments)(const LameParams&);
  PrintedWhereBlock (*printed_where)(const LameParams&);
  std::vector<Regime> regimes;
  std::string domain_note;
  bool admits_type1;
};

namespace transforms {

inline HeunParams t1(const HeunParams& h) {
  return {h.a, h.q - (h.delta - 1) * h.gamma * h.a, h.alpha - h.delta + 1, h.beta - h.delta + 1,
          h.gamma, 2 - h.delta};
}
inline HeunParams t2(const HeunParams& h) {
  return {h.a,
          h.q - (h.gamma + h.delta - 2) * h.a -
              (h.gamma - 1) * (h.alpha + h.beta - h.gamma - h.delta + 1),
          h.alpha - h.gamma - h.delta + 2, h.beta - h.gamma - h.delta + 2, 2 - h.gamma,
          2 - h.delta};
}
inline HeunParams t3(const HeunParams& h) {
  return {1 - h.a, -h.q + h.alpha * h.beta, h.alpha, h.beta, h.delta, h.gamma};
}
inline HeunParams t4(const HeunParams& h) {
  return {1 - h.a,
          -h.q + (h.delta - 1) * h.gamma * h.a + (h.alpha - h.delta + 1) * (h.beta - h.delta + 1),
          h.alpha - h.delta + 1, h.beta - h.delta + 1, 2 - h.delta, h.gamma};
}
inline HeunParams t5(const HeunParams& h) {
  return {1 / h.a,
          (h.q + h.alpha * ((h.alpha - h.gamma - h.delta + 1) * h.a - h.beta + h.delta)) / h.a,
          h.alpha, h.alpha - h.gamma + 1, h.alpha - h.beta + 1, h.delta};
}
inline HeunParams t6(const HeunParams& h) {
  return {1 - h.a, -h.q + h.gamma * h.beta, -h.alpha + h.gamma + h.delta, h.beta, h.gamma, h.delta};
}
inline HeunParams t7(const HeunParams& h) {
  return {1 - h.a, -h.q + h.gamma * ((h.delta - 1) * h.a + h.beta - h.delta + 1),
          -h.alpha + h.gamma + 1, h.beta - h.delta + 1, h.gamma, 2 - h.delta};
}
inline HeunParams t8(const HeunParams& h) {
  return {(h.a - 1) / h.a, (-h.q + h.alpha * (h.delta * h.a + h.beta - h.delta)) / h.a, h.alpha,
          h.alpha - h.gamma + 1, h.delta, h.alpha - h.beta + 1};
}
inline HeunParams t9(const HeunParams& h) {
  return {h.a, h.q - (h.beta - h.delta) * h.alpha, h.alpha, -h.beta + h.gamma + h.delta, h.delta,
          h.gamma};
}

}  // namespace transforms

// Hl argument lists and where-blocks exactly as printed, typographical slips included.
namespace printed {

inline double r2(const LameParams& p) { return p.rho * p.rho; }

inline HlArguments args1(const LameParams& p) {
  return {p.b, -(p.h - 1) * p.b / 4, p.alpha / 2 + 1, -p.alpha / 2 + 0.5, 0.5, 1.5};
}
inline HlArguments args2(const LameParams& p) {
  return {p.b, -((p.h - 4) * p.b - 1) / 4, p.alpha / 2 + 1.5, -p.alpha / 2 + 1, 1.5, 1.5};
}
inline HlArguments args3(const LameParams& p) {
  return {1 - p.b, (p.h * p.b - p.alpha * (p.alpha + 1)) / 4, (p.alpha + 1) / 2, -p.alpha / 2, 0.5,
          0.5};
}
inline HlArguments args4(const LameParams& p) {
  return {1 - p.b, -((1 + p.h) * p.b + (p.alpha - 1) * (p.alpha + 2)) / 4, p.alpha / 2 + 1,
          -p.alpha / 2 + 0.5, 1.5, 0.5};
}
inline HlArguments args5(const LameParams& p) {
  return {r2(p), -(p.h - (1 + r2(p)) * (p.alpha + 1) * (p.alpha + 1)) / 4, (p.alpha + 1) / 2,
          (p.alpha + 2) / 2, p.alpha + 1.5, 0.5};
}
inline HlArguments args6(const LameParams& p) {
  return {1 - p.b, (p.h * p.b - p.alpha) / 4, -p.alpha / 2 + 0.5, -p.alpha / 2, 0.5, 0.5};
}
inline HlArguments args7(const LameParams& p) {
  return {1 - p.b, ((p.h - 1) * p.b + 1 - p.alpha) / 4, -p.alpha / 2 + 1, -p.alpha / 2 + 0.5, 0.5,
          1.5};
}
inline HlArguments args8(const LameParams& p) {
  return {1 - r2(p), (p.h + (p.alpha + 1) * (1 - (p.alpha + 1) * r2(p))) / 4, (p.alpha + 1) / 2,
          (p.alpha + 2) / 2, 0.5, p.alpha + 1.5};
}
inline HlArguments args9(const LameParams& p) {
  return {p.b, -(p.h * p.b - (p.alpha + 1) * (p.alpha + 1)) / 4, (p.alpha + 1) / 2,
          -(p.alpha - 2) / 2, 0.5, 0.5};
}

// Integral-form where-blocks repeat the series Q except where noted.
inline PrintedWhereBlock same_q(PrintedWhereBlock w) {
  w.Q_integral = w.Q;
  return w;
}

inline PrintedWhereBlock where1(const LameParams& p) {
  const double g = 1 / (2 * (1 + r2(p)));
  return same_q({1 + r2(p), -r2(p), g, (1 - p.h) / (8 * (1 + r2(p))), 0.5 * (1 - 1 / (1 + p.b))});
}
inline PrintedWhereBlock where2(const LameParams& p) {
  return same_q({1 + r2(p), -r2(p), (2 + r2(p)) / (2 * (1 + r2(p))), (4 + r2(p) - p.h) / (8 * (1 + r2(p))),
          0.5 * (1 + 1 / (1 + r2(p)))});
}
inline PrintedWhereBlock where3(const LameParams& p) {
  return {(2 - p.b) / (1 - p.b), -1 / (1 - p.b), 0.0,
          (p.h * p.b - p.alpha * (p.alpha + 1)) / (8 * (2 - r2(p))), 0.0,
          (p.h * p.b - p.alpha * (p.alpha + 1)) / (8 * (2 - p.b))};
}
inline PrintedWhereBlock where4(const LameParams& p) {
  return same_q({(2 - p.b) / (1 - p.b), -1 / (1 - p.b), 0.5,
          -((1 + p.h) * p.b + (p.alpha - 1) * (p.alpha + 2)) / (8 * (2 - p.b)), 0.5});
}
inline PrintedWhereBlock where5(const LameParams& p) {
  return same_q({1 + p.b, -p.b, (p.alpha + 1) / 2,
          -(p.h / (1 + r2(p)) - (p.alpha + 1) * (p.alpha + 1)) / 8, 0.5 * (1 + p.alpha)});
}
inline PrintedWhereBlock where6(const LameParams& p) {
  const double g = -p.alpha / (2 * (2 - p.b));
  return same_q({(2 - p.b) / (1 - p.b), -1 / (1 - p.b), g, (p.h * p.b - p.alpha) / (8 * (2 - p.b)), g});
}
inline PrintedWhereBlock where7(const LameParams& p) {
  return same_q({(2 - p.b) / (1 - p.b), -1 / (1 - p.b), -(p.alpha - 1 + p.b) / (2 * (2 - p.b)),
          ((p.h - 1) * p.b + 1 - p.alpha) / (8 * (2 - p.b)),
          0.5 * (1 - (p.alpha + 1) / (2 - p.b))});
}
inline PrintedWhereBlock where8(const LameParams& p) {
  return same_q({(2 - r2(p)) / (1 - r2(p)), -1 / (1 - r2(p)),
          (1 - r2(p)) * (p.alpha + 1) / (2 * (2 - r2(p))),
          (p.h + (p.alpha + 1) * (1 - (p.alpha + 1) * r2(p))) / (8 * (2 - r2(p))),
          0.5 * (1 + (p.alpha * (1 - r2(p)) - 1) / (2 - r2(p)))});
}
inline PrintedWhereBlock where9(const LameParams& p) {
  return same_q({1 + r2(p), -r2(p), (p.alpha + 1) / (2 * (1 + p.b)),
          (-p.h * p.b + (p.alpha + 1) * (p.alpha + 1)) / (8 * (1 + p.b)),
          0.5 * ((p.alpha + 1) / (1 + p.b))});
}

}  // namespace printed

inline const std::array<TransformDescriptor, 9>& descriptor_table() {
  using B = PrefactorBase;
  using V = VariableMap;
  using R = Regime;
  static const std::array<TransformDescriptor, 9> table{{
      {1, {{B::OneMinusXi, 0.5, 0.0}}, V::Identity, transforms::t1, printed::args1,
       printed::where1, {R::Generic, R::AbsALarge}, "|z+eta|<1; |eta|<1", true},
      {2, {{B::Xi, 0.5, 0.0}, {B::OneMinusXi, 0.5, 0.0}}, V::Identity, transforms::t2,
       printed::args2, printed::where2, {R::Generic, R::AbsALarge}, "|z+eta|<1; |eta|<1", true},
      {3, {}, V::OneMinus, transforms::t3, printed::args3, printed::where3,
       {R::Generic, R::ANearMinus1, R::AbsALarge}, "|z+eta|<1; |z|<1; |eta|<1", true},
      {4, {{B::OneMinusXi, 0.5, 0.0}}, V::OneMinus, transforms::t4, printed::args4,
       printed::where4, {R::Generic, R::ANearMinus1, R::AbsALarge},
       "|z+eta|<1; |z|<1; |eta|<1", true},
      {5, {{B::Xi, -0.5, -0.5}}, V::Inverse, transforms::t5, printed::args5, printed::where5,
       {R::Generic}, "|z+eta|<1", false},
      {6, {{B::OneMinusRho2Xi, 0.0, 0.5}}, V::Mobius, transforms::t6, printed::args6,
       printed::where6, {R::Generic, R::ANearMinus1, R::AbsALarge},
       "|z+eta|<1; |z|<1; |eta|<1", false},
      {7, {{B::OneMinusXi, 0.5, 0.0}, {B::OneMinusRho2Xi, -0.5, 0.5}}, V::Mobius, transforms::t7,
       printed::args7, printed::where7, {R::Generic, R::ANearMinus1, R::AbsALarge},
       "|z+eta|<1; |z|<1; |eta|<1", false},
      {8, {{B::Xi, -0.5, -0.5}}, V::OneMinusInverse, transforms::t8, printed::args8,
       printed::where8, {R::Generic}, "|z+eta|<1", false},
      {9, {{B::ShiftedXi, -0.5, -0.5}}, V::ScaledMobius, transforms::t9, printed::args9,
       printed::where9, {R::Generic, R::AbsALarge}, "|z+eta|<1; |eta|<1", false},
  }};
  return table;
}

inline const TransformDescriptor& descriptor(int id) {
  if (id < 1 || id > 9) throw DomainError("descriptor id must be 1..9");
  return descriptor_table()[id - 1];
}

// Base a = rho^-2 enters every variable map.
inline double map_variable(VariableMap m, double xi, double b) {
  switch (m) {
    case VariableMap::Identity: return xi;
    case VariableMap::OneMinus: return 1.0 - xi;
    case VariableMap::Inverse: return 1.0 / xi;
    case VariableMap::Mobius: return (1.0 - b) * xi / (xi - b);
    case VariableMap::OneMinusInverse: return (xi - 1.0) / xi;
    case VariableMap::ScaledMobius: return b * (xi - 1.0) / (xi - b);
  }
  return xi;
}

inline double prefactor_base(PrefactorBase base, double xi, double b) {
  switch (base) {
    case PrefactorBase::Xi: return xi;
    case PrefactorBase::OneMinusXi: return 1.0 - xi;
    case PrefactorBase::OneMinusRho2Xi: return 1.0 - xi / b;
    case PrefactorBase::ShiftedXi: return (xi - b) / (1.0 - b);
  }
  return xi;
}

inline double eval_prefactor(const TransformDescriptor& d, const LameParams& p, double xi) {
  double f = 1.0;
  for (const auto& t : d.prefactor) {
    const double base = prefactor_base(t.base, xi, p.b);
    const double e = t.e0 + t.e1 * p.alpha;
    if (base < 0.0 && e != std::round(e))
      throw BranchError("prefactor base negative with non-integer exponent");
    f *= std::pow(base, e);
  }
  return f;
}

inline HeunParams transformed_params(const TransformDescriptor& d, const LameParams& p) {
  return d.param_map(lame_heun_params(p));
}

// Transformed singular parameter a' depends on rho only.
inline double transformed_a(const TransformDescriptor& d, double rho) {
  return transformed_params(d, LameParams(rho, 0.0, 0.0)).a;
}

inline DomainVerdict heun_domain(const TransformDescriptor& d, Regime regime, double xi,
                                 double rho) {
  const double b = 1.0 / (rho * rho);
  const double a = transformed_a(d, rho);
  const double x = map_variable(d.variable_map, xi, b);
  const auto v = heun_variables(a, x);
  switch (regime) {
    case Regime::Generic: return verdict_from_expression(v.z + v.eta);
    case Regime::ANearMinus1: return verdict_from_expression(v.z);
    case Regime::AbsALarge: return verdict_from_expression(v.eta);
  }
  return {false, 0.0};
}

inline bool has_regime(const TransformDescriptor& d, Regime r) {
  for (auto x : d.regimes)
    if (x == r) return true;
  return false;
}

// Closed-form limits of Hl (prefactor excluded) from the generic forms with the descriptor's maps.
inline double heun_asymptotic(const TransformDescriptor& d, Regime regime, const LameParams& p,
                              double xi) {
  if (!has_regime(d, regime)) throw DomainError("heun_asymptotic: regime not available for descriptor");
  if (!heun_domain(d, regime, xi, p.rho).inside)
    throw DomainError("heun_asymptotic: convergence condition violated");
  const double a = transformed_a(d, p.rho);
  const double x = map_variable(d.variable_map, xi, p.b);
  switch (regime) {
    case Regime::Generic: return 1.0 / (1.0 - (-x * x / a + (1.0 + a) * x / a));
    case Regime::ANearMinus1: return (1.0 + x) / (1.0 + x * x / a);
    case Regime::AbsALarge: return 1.0 / (1.0 - (1.0 + a) * x / a);
  }
  return 0.0;
}

struct Truncation {
  int n_mu = 30;
  int n_inner = 30;
};

inline double local_solution(const TransformDescriptor& d, const LameParams& p, Truncation t,
                             double xi) {
  if (!heun_domain(d, Regime::Generic, xi, p.rho).inside)
    throw DomainError("local_solution: xi outside the descriptor's convergence region");
  const double x = map_variable(d.variable_map, xi, p.b);
  return eval_prefactor(d, p, xi) * heun_hf_infinite(transformed_params(d, p), t.n_mu, t.n_inner, x);
}

// Where-block obtained by pushing the descriptor's param_map through the generic formulas.
inline PrintedWhereBlock derived_where_block(const TransformDescriptor& d, const LameParams& p) {
  const auto hp = transformed_params(d, p);
  const auto c = heun_series_coeffs(hp);
  return {(1.0 + hp.a) / hp.a, -1.0 / hp.a, c.Gamma0, c.Q, c.Omega(1), c.Q};
}

inline HlArguments derived_arguments(const TransformDescriptor& d, const LameParams& p) {
  const auto hp = transformed_params(d, p);
  return {hp.a, hp.q, hp.alpha, hp.beta, hp.gamma, hp.delta};
}

inline const char* to_string(Regime r) {
  switch (r) {
    case Regime::Generic: return "generic";
    case Regime::ANearMinus1: return "a_near_minus_1";
    case Regime::AbsALarge: return "abs_a_large";
  }
  return "";
}

inline const char* to_string(PrefactorBase b) {
  switch (b) {
    case PrefactorBase::Xi: return "xi";
    case PrefactorBase::OneMinusXi: return "1-xi";
    case PrefactorBase::OneMinusRho2Xi: return "1-rho^2*xi";
    case PrefactorBase::ShiftedXi: return "(xi-rho^-2)/(1-rho^-2)";
  }
  return "";
}

inline const char* to_string(VariableMap m) {
  switch (m) {
    case VariableMap::Identity: return "xi";
    case VariableMap::OneMinus: return "1-xi";
    case VariableMap::Inverse: return "1/xi";
    case VariableMap::Mobius: return "(1-rho^-2)*xi/(xi-rho^-2)";
    case VariableMap::OneMinusInverse: return "(xi-1)/xi";
    case VariableMap::ScaledMobius: return "(xi-1)/(rho^2*(xi-rho^-2))";
  }
  return "";
}

// CSV columns: id, prefactor (base^(e0+e1*alpha) joined by '*'), variable, regimes, domain predicates per regime.
inline void write_descriptor_csv(std::ostream& os) {
  os << "id,prefactor,variable,regimes,domain\n";
  for (const auto& d : descriptor_table()) {
    os << d.id << ",\"";
    for (std::size_t k = 0; k < d.prefactor.size(); ++k) {
      const auto& t = d.prefactor[k];
      os << (k ? "*" : "") << '(' << to_string(t.base) << ")^(" << t.e0 << '+' << t.e1 << "*alpha)";
    }
    if (d.prefactor.empty()) os << '1';
    os << "\"," << to_string(d.variable_map) << ",\"";
    for (std::size_t k = 0; k < d.regimes.size(); ++k) os << (k ? ";" : "") << to_string(d.regimes[k]);
    os << "\",\"" << d.domain_note << "\"\n";
  }
}

}  // namespace lame
