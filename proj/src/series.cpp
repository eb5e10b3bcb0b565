#include "cyop/series.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace cyop {

PowerSeries PowerSeries::constant(const Rational& v, int trunc_order) {
  PowerSeries s(trunc_order);
  s.c_[0] = v;
  return s;
}

PowerSeries PowerSeries::identity(int trunc_order) {
  PowerSeries s(trunc_order);
  if (trunc_order >= 1) s.c_[1] = 1;
  return s;
}

PowerSeries PowerSeries::geometric(int trunc_order) {
  PowerSeries s(trunc_order);
  for (auto& c : s.c_) c = 1;
  return s;
}

bool PowerSeries::is_zero() const {
  for (const auto& c : c_)
    if (!cyop::is_zero(c)) return false;
  return true;
}

PowerSeries PowerSeries::truncated(int order) const {
  PowerSeries s(std::min(order, trunc_order()));
  for (int n = 0; n <= s.trunc_order(); ++n) s.c_[n] = c_[n];
  return s;
}

PowerSeries PowerSeries::operator-() const {
  PowerSeries r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

PowerSeries operator+(const PowerSeries& a, const PowerSeries& b) {
  int n = std::min(a.trunc_order(), b.trunc_order());
  PowerSeries r(n);
  for (int i = 0; i <= n; ++i) r.c_[i] = a.c_[i] + b.c_[i];
  return r;
}

PowerSeries operator-(const PowerSeries& a, const PowerSeries& b) {
  int n = std::min(a.trunc_order(), b.trunc_order());
  PowerSeries r(n);
  for (int i = 0; i <= n; ++i) r.c_[i] = a.c_[i] - b.c_[i];
  return r;
}

PowerSeries operator*(const PowerSeries& a, const PowerSeries& b) { return ps_mul(a, b); }

PowerSeries PowerSeries::scaled(const Rational& k) const {
  PowerSeries r = *this;
  for (auto& c : r.c_) c *= k;
  return r;
}

PowerSeries PowerSeries::dilated(const Rational& k) const {
  PowerSeries r = *this;
  Rational p = 1;
  for (int n = 1; n <= trunc_order(); ++n) {
    p *= k;
    r.c_[n] *= p;
  }
  return r;
}

PowerSeries PowerSeries::shifted_up(int k) const {
  PowerSeries r(trunc_order());
  for (int n = trunc_order(); n >= k; --n) r.c_[n] = c_[n - k];
  return r;
}

PowerSeries PowerSeries::shifted_down(int k) const {
  for (int n = 0; n < k && n <= trunc_order(); ++n)
    if (!cyop::is_zero(c_[n])) throw CyopError("shifted_down: nonzero low coefficient");
  PowerSeries r(trunc_order());
  for (int n = 0; n + k <= trunc_order(); ++n) r.c_[n] = c_[n + k];
  return r;
}

std::string PowerSeries::str(const std::string& var, int max_terms) const {
  std::ostringstream out;
  bool first = true;
  int shown = 0;
  for (int n = 0; n <= trunc_order(); ++n) {
    if (cyop::is_zero(c_[n]) && !(n == 0 && trunc_order() == 0)) continue;
    if (max_terms >= 0 && shown >= max_terms) {
      out << " + ...";
      return out.str();
    }
    if (!first) out << (sgn(c_[n]) < 0 ? " - " : " + ");
    else if (sgn(c_[n]) < 0) out << "-";
    first = false;
    ++shown;
    Rational a = abs(c_[n]);
    if (n == 0 || a != 1) out << to_string(a);
    if (n > 0) {
      if (a != 1) out << "*";
      out << var;
      if (n > 1) out << "^" << n;
    }
  }
  if (first) out << "0";
  out << " + O(" << var << "^" << trunc_order() + 1 << ")";
  return out.str();
}

PowerSeries ps_mul(const PowerSeries& a, const PowerSeries& b) {
  int n = std::min(a.trunc_order(), b.trunc_order());
  PowerSeries r(n);
  for (int i = 0; i <= n; ++i) {
    if (cyop::is_zero(a[i])) continue;
    for (int j = 0; i + j <= n; ++j) {
      if (cyop::is_zero(b[j])) continue;
      r.set(i + j, r[i + j] + a[i] * b[j]);
    }
  }
  return r;
}

PowerSeries ps_reciprocal(const PowerSeries& a) {
  if (cyop::is_zero(a[0])) throw ZeroConstantTerm("ps_reciprocal: a(0) = 0");
  int n = a.trunc_order();
  PowerSeries r(n);
  Rational inv0 = Rational(1) / a[0];
  r.set(0, inv0);
  for (int k = 1; k <= n; ++k) {
    Rational s = 0;
    for (int j = 1; j <= k; ++j) s += a[j] * r[k - j];
    r.set(k, -s * inv0);
  }
  return r;
}

PowerSeries ps_div(const PowerSeries& a, const PowerSeries& b) { return ps_mul(a, ps_reciprocal(b)); }

PowerSeries ps_exp(const PowerSeries& a) {
  if (!cyop::is_zero(a[0])) throw BadConstantTerm("ps_exp: a(0) != 0");
  int n = a.trunc_order();
  PowerSeries r(n);
  r.set(0, 1);
  // r' = a' r  =>  k r_k = sum_{j=1..k} j a_j r_{k-j}
  for (int k = 1; k <= n; ++k) {
    Rational s = 0;
    for (int j = 1; j <= k; ++j) s += Rational(j) * a[j] * r[k - j];
    r.set(k, s / Rational(k));
  }
  return r;
}

PowerSeries ps_log(const PowerSeries& a) {
  if (a[0] != 1) throw BadConstantTerm("ps_log: a(0) != 1");
  int n = a.trunc_order();
  // log(a)' = a'/a, integrate.
  PowerSeries da = ps_derive(a);
  PowerSeries q = ps_div(da, a.truncated(std::max(n - 1, 0)));
  PowerSeries r = ps_integrate(q);
  return r.truncated(n);
}

PowerSeries ps_compose(const PowerSeries& f, const PowerSeries& g) {
  if (!cyop::is_zero(g[0])) throw NonzeroInnerConstant("ps_compose: g(0) != 0");
  int n = std::min(f.trunc_order(), g.trunc_order());
  PowerSeries gn = g.truncated(n);
  PowerSeries acc = PowerSeries::constant(f[std::min(f.trunc_order(), n)], n);
  for (int i = std::min(f.trunc_order(), n) - 1; i >= 0; --i) {
    acc = ps_mul(acc, gn);
    acc.set(0, acc[0] + f[i]);
  }
  // Coefficients of f beyond order n cannot touch orders <= n since g has
  // valuation >= 1, so the Horner loop above is exact.
  return acc;
}

PowerSeries ps_revert(const PowerSeries& f) {
  if (!cyop::is_zero(f[0]) || cyop::is_zero(f[1])) throw NotInvertible("ps_revert: needs f(0)=0, f'(0)!=0");
  int n = f.trunc_order();
  // Lagrange inversion: n [q^n] g = [z^{n-1}] (z/f)^n.
  PowerSeries u(n);  // f/z
  for (int i = 0; i + 1 <= n; ++i) u.set(i, f[i + 1]);
  PowerSeries w = ps_reciprocal(u);  // z/f
  PowerSeries g(n);
  PowerSeries wpow = PowerSeries::constant(1, n);
  for (int k = 1; k <= n; ++k) {
    wpow = ps_mul(wpow, w);
    g.set(k, wpow[k - 1] / Rational(k));
  }
  return g;
}

NthRootResult ps_nth_root(const PowerSeries& f, long m) {
  if (m <= 0) throw CyopError("ps_nth_root: m must be positive");
  if (f[0] != 1) throw NotAnExactRoot("ps_nth_root: f(0) != 1");
  PowerSeries r = ps_exp(ps_log(f).scaled(Rational(1, m)));
  return {r, all_integral(r)};
}

PowerSeries ps_derive(const PowerSeries& a) {
  int n = std::max(a.trunc_order() - 1, 0);
  PowerSeries r(n);
  for (int k = 0; k <= n; ++k) r.set(k, a[k + 1] * Rational(k + 1));
  return r;
}

PowerSeries ps_theta(const PowerSeries& a) {
  PowerSeries r = a;
  for (int k = 0; k <= r.trunc_order(); ++k) r.set(k, r[k] * Rational(k));
  return r;
}

PowerSeries ps_integrate(const PowerSeries& a) {
  PowerSeries r(a.trunc_order() + 1);
  for (int k = 0; k <= a.trunc_order(); ++k) r.set(k + 1, a[k] / Rational(k + 1));
  return r;
}

PowerSeries expand_at_zero(const RationalFunction& f, int order) {
  if (cyop::is_zero(f.den()(0))) throw CyopError("expand_at_zero: pole at 0");
  PowerSeries num(order), den(order);
  for (int i = 0; i <= std::min(order, f.num().degree()); ++i) num.set(i, f.num()[i]);
  for (int i = 0; i <= std::min(order, f.den().degree()); ++i) den.set(i, f.den()[i]);
  return ps_div(num, den);
}

bool all_integral(const PowerSeries& f) {
  for (int n = 0; n <= f.trunc_order(); ++n)
    if (!is_integer(f[n])) return false;
  return true;
}

std::vector<Int> denominator_prime_support(const PowerSeries& f) {
  Int l = 1;
  for (int n = 0; n <= f.trunc_order(); ++n)
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), f[n].get_den().get_mpz_t());
  return prime_support(l);
}

}  // namespace cyop
