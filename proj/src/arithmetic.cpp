#include "cyop/arithmetic.hpp"

#include "cyop/mum.hpp"

namespace cyop {

RealizabilityReport realizability(const std::vector<Rational>& a, int k) {
  if (k < 1) throw CyopError("realizability: k must be >= 1");
  RealizabilityReport rep;
  rep.k = k;
  Int den_lcm = 1;
  for (size_t n = 1; n <= a.size(); ++n) {
    Rational s = 0;
    for (size_t d = 1; d <= n; ++d)
      if (n % d == 0) s += Rational(moebius(static_cast<long>(n / d))) * a[d - 1];
    Rational bn = s / rpow(Rational(static_cast<long>(n)), k);
    rep.b.push_back(bn);
    if (!is_integer(bn) && rep.first_noninteger == 0) rep.first_noninteger = static_cast<int>(n);
    if (rep.first_noninteger == 0 && sgn(bn) < 0) rep.all_nonnegative = false;
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), bn.get_den().get_mpz_t());
  }
  rep.prime_support = prime_support(den_lcm);
  return rep;
}

std::vector<Rational> realizability_reconstruct(const std::vector<Rational>& b, int k) {
  std::vector<Rational> a(b.size(), Rational(0));
  for (size_t n = 1; n <= b.size(); ++n)
    for (size_t d = 1; d <= n; ++d)
      if (n % d == 0) a[n - 1] += rpow(Rational(static_cast<long>(d)), k) * b[d - 1];
  return a;
}

std::optional<Int> realizability_scaling(const std::vector<Rational>& a, int k, const Int& bound) {
  RealizabilityReport rep = realizability(a, k);
  Int l = 1;
  for (const auto& b : rep.b) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), b.get_den().get_mpz_t());
  if (l > bound) return std::nullopt;
  return l;
}

SupercongruenceResult supercongruence(const std::vector<Rational>& a_from_0, long p, int r, int k, long n_max) {
  SupercongruenceResult res;
  Int mod = ipow(Int(p), static_cast<unsigned long>(r) * k);
  Int pr = ipow(Int(p), r);
  Int pr1 = ipow(Int(p), r - 1);
  bool any = false;
  for (long n = 1; n <= n_max; ++n) {
    if (n % p == 0) continue;
    long hi = n * mpz_get_si(pr.get_mpz_t());
    long lo = n * mpz_get_si(pr1.get_mpz_t());
    if (hi >= static_cast<long>(a_from_0.size())) break;
    any = true;
    const Rational &ah = a_from_0[hi], &al = a_from_0[lo];
    if (!is_integer(ah) || !is_integer(al)) throw CyopError("supercongruence: sequence must be integral");
    Int diff = Int(ah.get_num()) - Int(al.get_num());
    if (diff % mod != 0) {
      res.holds = false;
      res.counterexample_n = n;
      return res;
    }
  }
  if (!any) throw InsufficientLength("supercongruence: no admissible index fits the sequence length");
  return res;
}

PowerSeries polylog_identity_check(const std::vector<Rational>& a, int k, int N) {
  RealizabilityReport rep = realizability(a, k);
  PowerSeries lhs(N), rhs(N);
  for (int j = 1; j <= N; ++j) {
    if (j <= static_cast<int>(a.size())) lhs.set(j, a[j - 1] / rpow(Rational(j), k));
    Rational s = 0;
    for (int d = 1; d <= j && d <= static_cast<int>(rep.b.size()); ++d)
      if (j % d == 0) s += rep.b[d - 1] / rpow(Rational(j / d), k);
    rhs.set(j, s);
  }
  return lhs - rhs;
}

bool denominator_bound_check(const std::vector<Rational>& b_from_0, int power) {
  for (size_t n = 1; n < b_from_0.size(); ++n) {
    Rational scaled = b_from_0[n] * Rational(ipow(lcm_upto(n), power));
    if (!is_integer(scaled)) return false;
  }
  return true;
}

ZetaGap zeta_limit_check(const Sequence& a, const Sequence& b, const std::string& target_decimal, int n) {
  if (n >= a.length() || n >= b.length()) throw InsufficientLength("zeta_limit_check: n beyond sequence length");
  if (is_zero(a[n])) throw CyopError("zeta_limit_check: A_n = 0");
  ZetaGap out;
  out.ratio = b[n] / a[n];
  Rational target = parse_rational(target_decimal);
  out.gap = abs(out.ratio - target);
  return out;
}

}  // namespace cyop
