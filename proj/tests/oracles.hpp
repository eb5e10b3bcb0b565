#pragma once

// Test-only oracles, independent of the library paths they check.

#include <vector>

#include "cyop/rational.hpp"

namespace cyop::oracles {

// Bernoulli numbers B_0..B_m via the defining recurrence.
inline std::vector<Rational> bernoulli(int m) {
  std::vector<Rational> b(m + 1);
  b[0] = 1;
  for (int n = 1; n <= m; ++n) {
    Rational s = 0;
    for (int j = 0; j < n; ++j) s += Rational(binomial(Int(n + 1), j)) * b[j];
    b[n] = -s / Rational(n + 1);
  }
  return b;
}

// zeta(4) as an exact rational with error < 1e-70: Euler-Maclaurin at N with
// `pairs` correction terms,
//   zeta(4) = sum_{n<N} n^-4 + N^-3/3 + N^-4/2
//             + sum_j B_{2j}/(2j)! * (2j+2)!/6 * N^-(2j+3).
inline Rational zeta4_euler_maclaurin(int N = 100, int pairs = 20) {
  Rational s = 0;
  for (int n = 1; n < N; ++n) s += Rational(Int(1), ipow(Int(n), 4));
  Rational nn(N);
  s += Rational(1, 3) / rpow(nn, 3) + rat(1, 2) / rpow(nn, 4);
  auto b = bernoulli(2 * pairs);
  for (int j = 1; j <= pairs; ++j) {
    Rational coef = b[2 * j] * Rational(factorial(2 * j + 2), factorial(2 * j) * 6);
    s += coef / rpow(nn, 2 * j + 3);
  }
  return s;
}

// Orbit-counting oracle for the realizability direction of Prop 10: builds a
// permutation with b[d-1] cycles of length d and counts fixed points of the
// n-th iterate by direct simulation.
inline long count_fixed_points(const std::vector<long>& cycles_per_length, long n) {
  std::vector<long> next;
  for (size_t d = 1; d <= cycles_per_length.size(); ++d)
    for (long c = 0; c < cycles_per_length[d - 1]; ++c) {
      long base = static_cast<long>(next.size());
      for (size_t i = 0; i < d; ++i) next.push_back(base + static_cast<long>((i + 1) % d));
    }
  long fixed = 0;
  for (size_t start = 0; start < next.size(); ++start) {
    long x = static_cast<long>(start);
    for (long step = 0; step < n; ++step) x = next[x];
    if (x == static_cast<long>(start)) ++fixed;
  }
  return fixed;
}

}  // namespace cyop::oracles
