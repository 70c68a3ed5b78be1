#pragma once

#include <cstdlib>
#include <functional>
#include <vector>

#include "bivar/common.hpp"

namespace bivar::testing {

/// Calls f on every vector in Z^n with one-norm at most N.
inline void for_each_in_ball(int n, int N, const std::function<void(const Weight&)>& f) {
  Weight w(n, 0);
  std::function<void(int, int)> rec = [&](int i, int left) {
    if (i == n) {
      f(w);
      return;
    }
    for (int a = -left; a <= left; ++a) {
      w[i] = a;
      rec(i + 1, left - std::abs(a));
    }
    w[i] = 0;
  };
  rec(0, N);
}

/// Calls f on every vector in {lo..hi}^n.
inline void for_each_in_box(int n, int lo, int hi, const std::function<void(const Weight&)>& f) {
  Weight w(n, lo);
  while (true) {
    f(w);
    int i = 0;
    while (i < n && w[i] == hi) w[i++] = lo;
    if (i == n) return;
    ++w[i];
  }
}

inline int one_norm(const Weight& w) {
  int s = 0;
  for (int a : w) s += std::abs(a);
  return s;
}

}  // namespace bivar::testing
