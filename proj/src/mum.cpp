#include "cyop/mum.hpp"

#include <algorithm>

namespace cyop {

bool LambertSeries::all_integral() const {
  for (const auto& v : n)
    if (!is_integer(v)) return false;
  return true;
}

int LambertSeries::first_noninteger_index() const {
  for (size_t i = 0; i < n.size(); ++i)
    if (!is_integer(n[i])) return static_cast<int>(i) + 1;
  return 0;
}

std::vector<Int> LambertSeries::denominator_prime_support() const {
  Int l = 1;
  for (const auto& v : n) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den().get_mpz_t());
  return prime_support(l);
}

Condition22Result condition22(const ThetaOperator& op4) {
  DzOperator dz = theta_to_dz(op4);
  if (dz.order != 4) throw ShapeMismatch("condition22: operator must have order 4");
  const RationalFunction &a1 = dz.a[1], &a2 = dz.a[2], &a3 = dz.a[3];
  RationalFunction half(rat(1, 2)), eighth(rat(1, 8)), threq(rat(3, 4));
  RationalFunction rhs = half * a2 * a3 - eighth * a3 * a3 * a3 + a2.derivative() -
                         threq * a3 * a3.derivative() - half * a3.derivative().derivative();
  RationalFunction residual = a1 - rhs;
  return {residual.is_zero(), residual};
}

MirrorData mirror_map(const std::vector<LogSeries>& basis, int N) {
  if (basis.size() < 2) throw CyopError("mirror_map: need at least y0, y1");
  PowerSeries y0 = basis[0].analytic().truncated(N);
  PowerSeries sigma1 = ps_div(basis[1].analytic().truncated(N), y0);
  MirrorData m;
  m.t_series = sigma1;
  m.q_over_z = ps_exp(sigma1);
  // q(z) to order N+1, revert, then q divides out again.
  PowerSeries q(N + 1);
  for (int n = 0; n <= N; ++n) q.set(n + 1, m.q_over_z[n]);
  PowerSeries zq = ps_revert(q);
  m.z_over_q = zq.shifted_down(1).truncated(N);
  return m;
}

PowerSeries coupling_in_z(const std::vector<LogSeries>& basis, int k) {
  if (static_cast<int>(basis.size()) <= k) throw CyopError("coupling_in_z: basis too short");
  const PowerSeries y0 = basis[0].analytic();
  LogSeries t1 = basis[1].divided_by(y0);
  LogSeries tk = basis[k].divided_by(y0);
  LogSeries th_t1 = ls_theta(t1);
  LogSeries th2_t1 = ls_theta(th_t1);
  LogSeries th_tk = ls_theta(tk);
  LogSeries th2_tk = ls_theta(th_tk);
  LogSeries num = th_t1 * th2_tk - th2_t1 * th_tk;
  if (!num.is_log_free() || !th_t1.is_log_free())
    throw CyopError("coupling_in_z: log parts did not cancel");
  PowerSeries den = th_t1.analytic();
  PowerSeries den3 = ps_mul(ps_mul(den, den), den);
  return ps_div(num.analytic(), den3);
}

PowerSeries yukawa(const std::vector<LogSeries>& basis, const MirrorData& mirror, const Rational& n0, int N) {
  PowerSeries kz = coupling_in_z(basis).scaled(n0).truncated(N);
  return ps_compose(kz, mirror.z_over_q.truncated(N).shifted_up(1));
}

PowerSeries yukawa_via_a3(const ThetaOperator& op4, const std::vector<LogSeries>& basis,
                          const MirrorData& mirror, int N) {
  DzOperator dz = theta_to_dz(op4);
  if (dz.order != 4) throw ShapeMismatch("yukawa_via_a3: operator must have order 4");
  RationalFunction z(Poly::x());
  RationalFunction za3 = z * dz.a[3];
  if (is_zero(za3.den()(0))) throw NonExpandablePrefactor("yukawa_via_a3: a3 has a higher-order pole at 0");
  Rational res = za3(Rational(0));
  if (!is_integer(res) || (res.get_num() % 2) != 0)
    throw NonExpandablePrefactor("yukawa_via_a3: residue of a3 at 0 is not an even integer");
  long half_res = mpz_get_si(Rational(res / 2).get_num().get_mpz_t());
  RationalFunction h = (za3 - RationalFunction(res)) / z;
  PowerSeries hs = expand_at_zero(h, N);
  PowerSeries pre = ps_exp(ps_integrate(hs).truncated(N).scaled(rat(-1, 2)));

  PowerSeries y0 = basis[0].analytic().truncated(N);
  PowerSeries theta_t = ps_theta(mirror.t_series.truncated(N)) + PowerSeries::constant(1, N);
  PowerSeries den = ps_mul(ps_mul(y0, y0), ps_mul(ps_mul(theta_t, theta_t), theta_t));
  PowerSeries kz = ps_div(pre, den);
  int zshift = 3 - half_res;
  if (zshift > 0) kz = kz.shifted_up(zshift);
  if (zshift < 0) kz = kz.shifted_down(-zshift);
  return ps_compose(kz, mirror.z_over_q.truncated(N).shifted_up(1));
}

int moebius(long n) {
  if (n <= 0) throw CyopError("moebius: n must be positive");
  int count = 0;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      n /= p;
      if (n % p == 0) return 0;
      ++count;
    }
  }
  if (n > 1) ++count;
  return (count % 2 == 0) ? 1 : -1;
}

LambertSeries lambert_decompose(const PowerSeries& c, int weight) {
  if (weight < 1) throw CyopError("lambert_decompose: weight must be >= 1");
  LambertSeries out;
  out.weight = weight;
  out.n0 = c[0];
  for (int l = 1; l <= c.trunc_order(); ++l) {
    Rational s = 0;
    for (int d = 1; d <= l; ++d)
      if (l % d == 0) s += Rational(moebius(l / d)) * c[d];
    out.n.push_back(s / rpow(Rational(l), weight));
  }
  return out;
}

PowerSeries lambert_reconstruct(const LambertSeries& l, int order) {
  PowerSeries c(order);
  c.set(0, l.n0);
  for (int n = 1; n <= order; ++n) {
    Rational s = 0;
    for (int d = 1; d <= n && d <= static_cast<int>(l.n.size()); ++d)
      if (n % d == 0) s += l.n[d - 1] * rpow(Rational(d), l.weight);
    c.set(n, s);
  }
  return c;
}

LambertSeries lambert_in_z(const PowerSeries& f, int weight) { return lambert_decompose(f, weight); }

std::optional<Int> auto_n0(const LambertSeries& base, const Int& bound) {
  Int l = 1;
  for (const auto& v : base.n) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den().get_mpz_t());
  if (l > bound) return std::nullopt;
  return l;
}

bool prop2_check(const std::vector<LogSeries>& basis) {
  if (basis.size() < 4) throw CyopError("prop2_check: need an order-4 basis");
  return (z_wronskian(basis[0], basis[3]) - z_wronskian(basis[1], basis[2])).is_zero();
}

PowerSeries rescale_coupling(const PowerSeries& k, const Rational& c, int m) {
  if (m < 1) throw CyopError("rescale_coupling: m must be positive");
  if (m == 1) return k.dilated(c);
  for (int j = 0; j <= k.trunc_order(); ++j)
    if (j % m != 0 && !is_zero(k[j]))
      throw FractionalPowersPresent("rescale_coupling: support not divisible by m");
  PowerSeries out(k.trunc_order() / m);
  Rational p = 1;
  for (int n = 0; n <= out.trunc_order(); ++n) {
    out.set(n, k[m * n] * p);
    p *= c;
  }
  return out;
}

}  // namespace cyop
