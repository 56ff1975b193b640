// lamecli: evaluate Lame functions, tabulate grids and run the verification suites as CSV.

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <limits>
#include <random>
#include <string>
#include <vector>

#include "lame/asymptotics.hpp"
#include "lame/frobenius.hpp"
#include "lame/heunlocal.hpp"
#include "lame/integralform.hpp"
#include "lame/series3trf.hpp"

using namespace lame;

namespace {

constexpr int kUsage = 2;
constexpr int kDomain = 1;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Domain violation reported with the predicate that failed.
struct PredicateError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

const double kNaN = std::numeric_limits<double>::quiet_NaN();

std::string num(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

struct Config {
  double rho = 0.5, h = 0.0, alpha = 0.0, xi = 0.0;
  std::string kind = "first", family = "infinite", branch = "plus", out;
  int n_mu = 40, n_inner = 40;
  int j = 0, alpha_j = 0;
  double start = 0.0, stop = 0.9;
  int count = 10;
  int orders = 12, draws = 0;
  std::uint64_t seed = 20240917;
  double tol = 1e-5;
  int n_gl = 64, n_contour = 256;
  double radius = 0.5;
};

LameParams params(const Config& c) {
  if (!(c.rho > 0.0 && c.rho < 1.0)) throw UsageError("--rho must lie in (0,1)");
  return {c.rho, c.h, c.alpha};
}

std::vector<double> grid(const Config& c) {
  if (c.count < 1) throw UsageError("--count must be >= 1");
  if (!(c.start < c.stop)) throw UsageError("--start must be below --stop");
  std::vector<double> g;
  for (int k = 0; k < c.count; ++k)
    g.push_back(c.count == 1 ? c.start : c.start + (c.stop - c.start) * k / (c.count - 1));
  return g;
}

double lambda_from(const std::string& kind) { return kind == "first" ? 0.0 : 0.5; }

Type1Quantization quantization(const Config& c) {
  return {c.j, c.alpha_j, c.branch == "plus" ? Branch::Plus : Branch::Minus, lambda_from(c.kind)};
}

void require_convergence(double xi, double rho) {
  if (!convergence_domain(xi, rho).inside)
    throw PredicateError("outside |(1+rho^2) xi - rho^2 xi^2| < 1 at xi=" + num(xi));
}

double series_value(const LameParams& p, Kind kind, int n_mu, int n_inner, double xi) {
  const SolutionSpec s{kind, Family::InfiniteSeries, n_mu, n_inner};
  return kind == Kind::FirstKind ? lf_infinite(p, s, xi) : ls_infinite(p, s, xi);
}

int cmd_eval(const Config& c, std::ostream& os) {
  if (c.family == "poly") {
    const auto q = quantization(c);
    if (!(c.rho > 0.0 && c.rho < 1.0)) throw UsageError("--rho must lie in (0,1)");
    const LameParams p(c.rho, c.h, quantized_alpha(q));
    require_convergence(c.xi, c.rho);
    os << num(lf_poly_type1(p, q, c.n_mu, c.xi)) << '\n';
    return 0;
  }
  const auto p = params(c);
  require_convergence(c.xi, c.rho);
  const Kind k = c.kind == "first" ? Kind::FirstKind : Kind::SecondKind;
  os << num(series_value(p, k, c.n_mu, c.n_inner, c.xi)) << '\n';
  return 0;
}

int cmd_table(const Config& c, std::ostream& os) {
  const auto p = params(c);
  const auto xs = grid(c);
  os << "xi,lf,ls,asymptotic,in_domain\n";
  for (double xi : xs) {
    const bool in = convergence_domain(xi, c.rho).inside;
    const double lf = in ? series_value(p, Kind::FirstKind, c.n_mu, c.n_inner, xi) : kNaN;
    const double ls = in && xi >= 0.0 ? series_value(p, Kind::SecondKind, c.n_mu, c.n_inner, xi) : kNaN;
    double asym = kNaN;
    try {
      asym = lame_asymptotic_limit(p, xi);
    } catch (const PoleError&) {
    }
    os << num(xi) << ',' << num(lf) << ',' << num(ls) << ',' << num(asym) << ',' << in << '\n';
  }
  return 0;
}

double coeff_error(double got, double want) {
  return std::abs(got - want) / std::max(std::abs(want), 1e-12);
}

// Per-order max relative error of the re-expanded nested sum against the Frobenius recurrence.
int cmd_verify_oracle(const Config& c, std::ostream& os) {
  if (c.orders < 0) throw UsageError("--orders must be >= 0");
  std::vector<LameParams> cases{params(c)};
  std::mt19937_64 g(c.seed);
  std::uniform_real_distribution<double> ur(0.1, 0.9), uh(-5, 5), ua(-3, 3);
  for (int k = 0; k < c.draws; ++k) {
    const double rho = ur(g), h = uh(g), a = ua(g);
    cases.emplace_back(rho, h, a);
  }
  std::vector<double> worst(static_cast<std::size_t>(c.orders) + 1, 0.0);
  for (const auto& p : cases)
    for (auto kind : {Kind::FirstKind, Kind::SecondKind}) {
      const auto d = expand_to_xi_coeffs(p, {kind, Family::InfiniteSeries, c.orders, c.orders}, c.orders);
      const auto f = frobenius_coefficients(p, lambda_of(kind), c.orders);
      for (int m = 0; m <= c.orders; ++m)
        worst[m] = std::max(worst[m], coeff_error(d.coeffs[m], f.coeffs[m]));
    }
  os << "order,max_rel_err\n";
  for (int m = 0; m <= c.orders; ++m) os << m << ',' << num(worst[m]) << '\n';
  const double top = *std::max_element(worst.begin(), worst.end());
  const bool pass = top <= 1e-10;
  os << (pass ? "PASS" : "FAIL") << " max_rel_err=" << num(top) << '\n';
  return pass ? 0 : kDomain;
}

int cmd_verify_integral(const Config& c, std::ostream& os) {
  if (!(c.rho > 0.0 && c.rho < 1.0)) throw UsageError("--rho must lie in (0,1)");
  const auto q = quantization(c);
  const LameParams p(c.rho, c.h, quantized_alpha(q));
  if (q.lambda != 0.0 && c.xi < 0.0) throw PredicateError("xi >= 0 required for the second kind");
  const QuadratureSpec spec{c.n_gl, c.n_contour, c.radius};
  const double s = y1_series_reference(p, q, c.xi);
  const double v = y1_integral(p, q, c.xi, spec);
  const double rel = std::abs(v - s) / std::max(std::abs(s), 1e-300);
  const bool pass = rel <= 1e-6;
  os << "alpha,xi,series,quadrature,rel_err,status\n"
     << num(p.alpha) << ',' << num(c.xi) << ',' << num(s) << ',' << num(v) << ',' << num(rel) << ','
     << (pass ? "PASS" : "FAIL") << '\n';
  return pass ? 0 : kDomain;
}

int cmd_residual(const Config& c, std::ostream& os) {
  const auto p = params(c);
  const Kind k = c.kind == "first" ? Kind::FirstKind : Kind::SecondKind;
  const auto xs = grid(c);
  for (double xi : xs) require_convergence(xi, c.rho);
  bool pass = true;
  os << "xi,residual\n";
  for (double xi : xs) {
    auto f = [&](double x) { return series_value(p, k, c.n_mu, c.n_inner, x); };
    const double r = std::abs(ode_residual_xi_fn(f, p, xi));
    pass = pass && r <= c.tol;
    os << num(xi) << ',' << num(r) << '\n';
  }
  return pass ? 0 : kDomain;
}

int cmd_domain(const Config& c, std::ostream& os) {
  if (!(c.rho > 0.0 && c.rho < 1.0)) throw UsageError("--rho must lie in (0,1)");
  const auto v = convergence_domain(c.xi, c.rho);
  const auto s = small_rho_domain(c.xi, c.rho);
  os << "inside=" << (v.inside ? "true" : "false") << " margin=" << num(v.margin)
     << " small_rho_inside=" << (s.inside ? "true" : "false") << '\n';
  return 0;
}

int cmd_heun_local(const Config& c, std::ostream& os) {
  const auto p = params(c);
  bool pass = true;
  os << "id,in_domain,value,residual\n";
  for (const auto& d : descriptor_table()) {
    double value = kNaN, res = kNaN;
    const bool in = heun_domain(d, Regime::Generic, c.xi, c.rho).inside;
    if (in) {
      try {
        auto f = [&](double x) { return local_solution(d, p, {c.n_mu, c.n_inner}, x); };
        value = f(c.xi);
        res = std::abs(ode_residual_xi_fn(f, p, c.xi));
        pass = pass && res <= c.tol;
      } catch (const DomainError&) {
      } catch (const BranchError&) {
      }
    }
    os << "A." << d.id << ',' << in << ',' << num(value) << ',' << num(res) << '\n';
  }
  return pass ? 0 : kDomain;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Lame functions by nested three-term recurrence series"};
  app.set_help_flag("--help", "print this help and exit");
  app.require_subcommand(1);
  Config c;
  app.add_option("--out", c.out, "write CSV to this path instead of stdout");

  auto lame_opts = [&](CLI::App* s) {
    s->add_option("--rho", c.rho, "elliptic modulus in (0,1)")->required();
    s->add_option("--h", c.h, "eigenvalue parameter");
    s->add_option("--alpha", c.alpha, "order parameter");
  };
  auto truncation = [&](CLI::App* s) {
    s->add_option("--n-mu", c.n_mu, "outer truncation")->check(CLI::Range(0, 400));
    s->add_option("--n-inner", c.n_inner, "inner truncation")->check(CLI::Range(0, 400));
  };
  auto grid_opts = [&](CLI::App* s) {
    s->add_option("--start", c.start);
    s->add_option("--stop", c.stop);
    s->add_option("--count", c.count);
  };
  auto quant_opts = [&](CLI::App* s) {
    s->add_option("--j", c.j, "quantized level")->check(CLI::NonNegativeNumber);
    s->add_option("--alpha-j", c.alpha_j, "integer limit at level j")->check(CLI::NonNegativeNumber);
    s->add_option("--branch", c.branch)->check(CLI::IsMember({"plus", "minus"}));
  };
  auto kind_opt = [&](CLI::App* s) {
    s->add_option("--kind", c.kind)->check(CLI::IsMember({"first", "second"}));
  };

  auto* eval = app.add_subcommand("eval", "one value of the first or second kind solution");
  lame_opts(eval);
  kind_opt(eval);
  truncation(eval);
  quant_opts(eval);
  eval->add_option("--family", c.family)->check(CLI::IsMember({"infinite", "poly"}));
  eval->add_option("--xi", c.xi)->required();

  auto* table = app.add_subcommand("table", "both kinds and the large-order limit over a grid in xi");
  lame_opts(table);
  truncation(table);
  grid_opts(table);

  auto* vo = app.add_subcommand("verify-oracle", "nested sum against the Frobenius recurrence");
  lame_opts(vo);
  vo->add_option("--orders", c.orders, "highest power of xi compared");
  vo->add_option("--draws", c.draws, "additional random parameter draws")->check(CLI::NonNegativeNumber);
  vo->add_option("--seed", c.seed, "seed for random draws");

  auto* vi = app.add_subcommand("verify-integral", "order-one integral form against its series");
  vi->add_option("--rho", c.rho)->required();
  vi->add_option("--h", c.h);
  vi->add_option("--xi", c.xi)->required();
  kind_opt(vi);
  quant_opts(vi);
  vi->add_option("--n-gl", c.n_gl);
  vi->add_option("--n-contour", c.n_contour);
  vi->add_option("--radius", c.radius, "contour radius");

  auto* res = app.add_subcommand("residual", "Weierstrass-form residual over a grid in xi");
  lame_opts(res);
  kind_opt(res);
  truncation(res);
  grid_opts(res);
  res->add_option("--tol", c.tol);

  auto* dom = app.add_subcommand("domain", "convergence region membership");
  dom->add_option("--rho", c.rho)->required();
  dom->add_option("--xi", c.xi)->required();

  auto* hl = app.add_subcommand("heun-local", "nine Heun local solutions at one point");
  lame_opts(hl);
  truncation(hl);
  hl->add_option("--xi", c.xi)->required();
  hl->add_option("--tol", c.tol);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kUsage;
  }

  std::ofstream file;
  if (!c.out.empty()) {
    file.open(c.out);
    if (!file) {
      std::cerr << "cannot open " << c.out << '\n';
      return kUsage;
    }
  }
  std::ostream& os = c.out.empty() ? std::cout : file;

  try {
    if (eval->parsed()) return cmd_eval(c, os);
    if (table->parsed()) return cmd_table(c, os);
    if (vo->parsed()) return cmd_verify_oracle(c, os);
    if (vi->parsed()) return cmd_verify_integral(c, os);
    if (res->parsed()) return cmd_residual(c, os);
    if (dom->parsed()) return cmd_domain(c, os);
    if (hl->parsed()) return cmd_heun_local(c, os);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "domain error: " << e.what() << '\n';
    return kDomain;
  } catch (const PredicateError& e) {
    std::cerr << "domain error: " << e.what() << '\n';
    return kDomain;
  } catch (const std::runtime_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kDomain;
  }
  return kUsage;
}
