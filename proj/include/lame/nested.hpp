#pragma once

#include <vector>

namespace lame {

// One B-chain step at index m multiplies by (p1+m)(p2+m)/((q1+m)(q2+m)).
struct ChainLevel {
  double p1, p2, q1, q2;

  double ratio(int m) const { return (p1 + m) * (p2 + m) / ((q1 + m) * (q2 + m)); }
};

// Dynamic programme over chains i_0 <= i_1 <= ... <= i_n of the 3TRF nested sums.
// table[n][i] collects every chain with n A-factors ending at i_n = i, including inner^{i}.
// Pochhammer quotients are products over the index gap, so terminating parameters give exact zeros.
template <class LevelFn, class AFactorFn>
std::vector<std::vector<double>> chain_table(LevelFn&& level, AFactorFn&& afactor, double inner,
                                             int n_outer, int n_inner) {
  std::vector<std::vector<double>> t(n_outer + 1, std::vector<double>(n_inner + 1, 0.0));
  const ChainLevel l0 = level(0);
  double g = 1.0;
  for (int i = 0; i <= n_inner; ++i) {
    t[0][i] = g;
    g *= l0.ratio(i) * inner;
  }
  for (int k = 1; k <= n_outer; ++k) {
    const ChainLevel lk = level(k);
    for (int i = 0; i <= n_inner; ++i) {
      double w = t[k - 1][i];
      if (w == 0.0) continue;
      w *= afactor(k - 1, i);
      for (int j = i; j <= n_inner && w != 0.0; ++j) {
        t[k][j] += w;
        w *= lk.ratio(j) * inner;
      }
    }
  }
  return t;
}

// Sum_n outer^n Sum_i table[n][i].
inline double sum_blocks(const std::vector<std::vector<double>>& t, double outer) {
  double total = 0.0, pw = 1.0;
  for (const auto& row : t) {
    double s = 0.0;
    for (double v : row) s += v;
    total += pw * s;
    pw *= outer;
  }
  return total;
}

}  // namespace lame
