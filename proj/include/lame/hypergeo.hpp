#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <optional>

#include "lame/errors.hpp"

namespace lame {

struct HypergeometricArgs {
  double a, b, c;
};

// Rising factorial by iterated product.
template <class T>
T pochhammer(T x, int n) {
  T p = T(1);
  for (int k = 0; k < n; ++k) p *= x + T(k);
  return p;
}

// Product form of (x)_{hi} / (x)_{lo} for hi >= lo.
inline double pochhammer_ratio(double x, int lo, int hi) {
  double p = 1.0;
  for (int m = lo; m < hi; ++m) p *= x + m;
  return p;
}

inline std::optional<int> nonpositive_integer(double x) {
  if (x <= 0.0 && x == std::round(x)) return static_cast<int>(-x);
  return std::nullopt;
}

// Number of terms of a terminating series, if it terminates.
inline std::optional<int> termination_order(double a, double b) {
  auto ma = nonpositive_integer(a);
  auto mb = nonpositive_integer(b);
  if (ma && mb) return std::min(*ma, *mb);
  return ma ? ma : mb;
}

struct SeriesControl {
  int max_terms = 10000;
  double tol = 1e-15;
};

// Sum_i (a)_i (b)_i / ((c)_i i!) * P(i + shift) * w^i with P(s) = c2 s^2 + c1 s + c0.
// Every 2F1 variant in the library is an instance of this polynomial moment.
template <class T>
T hypergeo_moment(const HypergeometricArgs& g, T w, double c2, double c1, double c0,
                  double shift, SeriesControl ctl = {}, int* terms_used = nullptr) {
  const auto stop = termination_order(g.a, g.b);
  if (auto pc = nonpositive_integer(g.c); pc && !(stop && *stop <= *pc))
    throw PoleError("2F1: lower parameter is a pole of the series");
  if (!stop && std::abs(w) >= 1.0) throw DivergenceError("2F1: |w| >= 1 for a non-terminating series");

  auto weight = [&](int i) {
    const double s = i + shift;
    return (c2 * s + c1) * s + c0;
  };
  T term = T(1);
  T sum = term * weight(0);
  const int last = stop ? *stop : ctl.max_terms;
  int i = 0;
  for (; i < last; ++i) {
    const double r = (g.a + i) * (g.b + i) / ((g.c + i) * (i + 1.0));
    term *= r * w;
    const T contrib = term * weight(i + 1);
    sum += contrib;
    if (!stop && std::abs(r * w) < 1.0 &&
        std::abs(term) * std::max(1.0, std::abs(weight(i + 1))) <= ctl.tol * std::abs(sum))
      break;
  }
  if (!stop && i == last) throw DivergenceError("2F1: series did not converge within max_terms");
  if (terms_used) *terms_used = stop ? *stop + 1 : i + 2;
  return sum;
}

template <class T>
T gauss_2f1(const HypergeometricArgs& g, T w, SeriesControl ctl = {}) {
  return hypergeo_moment<T>(g, w, 0.0, 0.0, 1.0, 0.0, ctl);
}

// (w d/dw)^2 applied to w^shift 2F1, divided by w^shift.
template <class T>
T weighted_2f1(const HypergeometricArgs& g, double shift, T w, SeriesControl ctl = {}) {
  return hypergeo_moment<T>(g, w, 1.0, 0.0, 0.0, shift, ctl);
}

}  // namespace lame
