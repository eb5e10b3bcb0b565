#pragma once

#include <optional>

#include "cyop/recurrence.hpp"
#include "cyop/series.hpp"

namespace cyop {

/// Moebius-inverted data of a sequence A_1, A_2, ... (values[i] = A_{i+1}).
struct RealizabilityReport {
  int k = 1;
  std::vector<Rational> b;      // B_n = n^{-k} sum_{d|n} mu(n/d) A_d
  int first_noninteger = 0;     // 1-based index; 0 when all integral
  bool all_nonnegative = true;  // over the integral prefix
  std::vector<Int> prime_support;

  bool all_integral() const { return first_noninteger == 0; }
};

RealizabilityReport realizability(const std::vector<Rational>& a, int k);

/// Inverse direction: A_n = sum_{d|n} d^k B_d.
std::vector<Rational> realizability_reconstruct(const std::vector<Rational>& b, int k);

/// Smallest positive integer C <= bound such that {C A_n} is k-realizable
/// over the available window (the lcm of the B_n denominators), if any.
std::optional<Int> realizability_scaling(const std::vector<Rational>& a, int k, const Int& bound = 1000000);

struct SupercongruenceResult {
  bool holds = true;
  long counterexample_n = 0;  // first failing n (with gcd(n, p) = 1)
};

/// A(n p^r) == A(n p^(r-1)) mod p^(rk) for all admissible n <= n_max; the
/// sequence here includes A_0 at index 0.
SupercongruenceResult supercongruence(const std::vector<Rational>& a_from_0, long p, int r, int k, long n_max);

/// sum A_n z^n / n^k - sum B_n Li_k(z^n), expanded to order N (A indexed from 1).
PowerSeries polylog_identity_check(const std::vector<Rational>& a, int k, int N);

/// D_n^power * B_n integral for every available n >= 1?
bool denominator_bound_check(const std::vector<Rational>& b_from_0, int power);

struct ZetaGap {
  Rational ratio;        // B_n / A_n
  Rational gap;          // |ratio - target|
  bool below(const Rational& tol) const { return gap < tol; }
};

/// Exact gap |B_n/A_n - target| where target is an exact decimal literal.
ZetaGap zeta_limit_check(const Sequence& a, const Sequence& b, const std::string& target_decimal, int n);

}  // namespace cyop
