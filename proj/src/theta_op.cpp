#include "cyop/theta_op.hpp"

#include <algorithm>
#include <sstream>

namespace cyop {

int ThetaOperator::order() const {
  int s = 0;
  for (const auto& q : q_) s = std::max(s, q.degree());
  return s;
}

bool ThetaOperator::is_zero() const {
  for (const auto& q : q_)
    if (!q.is_zero()) return false;
  return true;
}

ThetaOperator ThetaOperator::canonical() const {
  if (is_zero()) return ThetaOperator();
  // Drop common z power.
  size_t lo = 0;
  while (lo < q_.size() && q_[lo].is_zero()) ++lo;
  std::vector<Poly> q(q_.begin() + lo, q_.end());
  while (q.size() > 1 && q.back().is_zero()) q.pop_back();
  // Clear denominators, divide by integer content.
  Int den = 1;
  for (const auto& p : q) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), p.denominator_lcm().get_mpz_t());
  for (auto& p : q) p = p.scaled(Rational(den));
  Int content = 0;
  for (const auto& p : q) mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), p.integer_content().get_mpz_t());
  if (content > 1)
    for (auto& p : q) p = p.scaled(Rational(1, 1) / Rational(content));
  // Sign: leading theta^s coefficient at the lowest z power of full degree.
  int s = 0;
  for (const auto& p : q) s = std::max(s, p.degree());
  for (const auto& p : q)
    if (p.degree() == s) {
      if (sgn(p.leading()) < 0)
        for (auto& r : q) r = -r;
      break;
    }
  return ThetaOperator(std::move(q));
}

std::string ThetaOperator::str() const {
  std::ostringstream out;
  bool first = true;
  for (int i = 0; i <= zdeg(); ++i) {
    if (q_[i].is_zero()) continue;
    if (!first) out << " + ";
    first = false;
    if (i == 0)
      out << "(" << q_[i].str("T") << ")";
    else if (i == 1)
      out << "z*(" << q_[i].str("T") << ")";
    else
      out << "z^" << i << "*(" << q_[i].str("T") << ")";
  }
  if (first) out << "0";
  return out.str();
}

DOperator operator+(const DOperator& a, const DOperator& b) {
  std::vector<RationalFunction> c(std::max(a.order(), b.order()) + 1);
  for (size_t t = 0; t < c.size(); ++t) c[t] = a.coeff(t) + b.coeff(t);
  return DOperator(std::move(c));
}

DOperator operator-(const DOperator& a, const DOperator& b) {
  std::vector<RationalFunction> c(std::max(a.order(), b.order()) + 1);
  for (size_t t = 0; t < c.size(); ++t) c[t] = a.coeff(t) - b.coeff(t);
  return DOperator(std::move(c));
}

DOperator DOperator::scaled(const RationalFunction& f) const {
  std::vector<RationalFunction> c(c_.size());
  for (size_t t = 0; t < c_.size(); ++t) c[t] = f * c_[t];
  return DOperator(std::move(c));
}

DOperator DOperator::derived() const {
  std::vector<RationalFunction> c(c_.size() + 1);
  for (size_t t = 0; t < c_.size(); ++t) {
    c[t] = c[t] + c_[t].derivative();
    c[t + 1] = c[t + 1] + c_[t];
  }
  return DOperator(std::move(c));
}

DOperator DOperator::conjugated_by_multiplier(const RationalFunction& h) const {
  // g_t = u^(t)/u: g_0 = 1, g_{t+1} = g_t' + g_t h.
  int s = order();
  std::vector<RationalFunction> g(s + 1);
  g[0] = RationalFunction(Rational(1));
  for (int t = 1; t <= s; ++t) g[t] = g[t - 1].derivative() + g[t - 1] * h;
  std::vector<RationalFunction> c(s + 1);
  for (int k = 0; k <= s; ++k) {
    RationalFunction acc;
    for (int t = 0; k + t <= s; ++t)
      acc = acc + RationalFunction(Rational(binomial(Int(k + t), t))) * c_[k + t] * g[t];
    c[k] = acc;
  }
  return DOperator(std::move(c));
}

Poly falling_factorial(int k) {
  Poly p(Rational(1));
  for (int i = 0; i < k; ++i) p *= Poly::linear(1, Rational(-i));
  return p;
}

std::vector<std::vector<Int>> stirling2_table(int nmax) {
  std::vector<std::vector<Int>> s(nmax + 1);
  for (int n = 0; n <= nmax; ++n) {
    s[n].assign(n + 1, Int(0));
    s[n][0] = (n == 0) ? 1 : 0;
    for (int k = 1; k <= n; ++k)
      s[n][k] = (n == k) ? Int(1) : Int(k) * s[n - 1][k] + s[n - 1][k - 1];
  }
  return s;
}

namespace {

Poly poly_lcm(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly();
  Poly g = Poly::gcd(a, b);
  Poly q, r;
  Poly::divmod(a * b, g, q, r);
  return q.scaled(Rational(1) / q.leading());
}

}  // namespace

ThetaOperator theta_from_dop(const DOperator& op) {
  int s = op.order();
  // L = sum_t c_t z^{-t} theta^(t); clear the rational denominators by a
  // single left multiplier.
  std::vector<RationalFunction> b(s + 1);
  Poly zpow(Rational(1));
  for (int t = 0; t <= s; ++t) {
    b[t] = op.coeff(t) / RationalFunction(zpow);
    zpow *= Poly::x();
  }
  Poly m(Rational(1));
  for (int t = 0; t <= s; ++t)
    if (!b[t].is_zero()) m = poly_lcm(m, b[t].den());
  std::vector<Poly> p(s + 1);
  int zdeg = 0;
  for (int t = 0; t <= s; ++t) {
    RationalFunction v = b[t] * RationalFunction(m);
    Poly q, r;
    Poly::divmod(v.num(), v.den(), q, r);
    if (!r.is_zero()) throw CyopError("theta_from_dop: coefficients are not rational functions of z");
    p[t] = q;
    zdeg = std::max(zdeg, p[t].degree());
  }
  std::vector<Poly> out(zdeg + 1);
  for (int t = 0; t <= s; ++t) {
    Poly ff = falling_factorial(t);
    for (int i = 0; i <= p[t].degree(); ++i)
      if (!cyop::is_zero(p[t][i])) out[i] += ff.scaled(p[t][i]);
  }
  return ThetaOperator(std::move(out)).canonical();
}

DOperator dop_from_theta(const ThetaOperator& op) {
  int s = op.order();
  auto s2 = stirling2_table(s);
  std::vector<RationalFunction> c(s + 1);
  Poly z = Poly::x();
  for (int i = 0; i <= op.zdeg(); ++i) {
    const Poly& qi = op.coeff(i);
    for (int j = 0; j <= qi.degree(); ++j) {
      if (cyop::is_zero(qi[j])) continue;
      for (int t = 0; t <= j; ++t) {
        if (s2[j][t] == 0) continue;
        // z^i * S2(j,t) z^t D^t
        Poly mono = z.pow(i + t).scaled(qi[j] * Rational(s2[j][t]));
        c[t] = c[t] + RationalFunction(mono);
      }
    }
  }
  return DOperator(std::move(c));
}

DzOperator theta_to_dz(const ThetaOperator& op) {
  DOperator d = dop_from_theta(op.canonical());
  int s = d.order();
  DzOperator out;
  out.order = s;
  out.a.resize(s);
  for (int t = 0; t < s; ++t) out.a[t] = d.coeff(t) / d.coeff(s);
  return out;
}

ThetaOperator dz_to_theta(const DzOperator& op) { return theta_from_dop(dop_from_dz(op)); }

DOperator dop_from_dz(const DzOperator& op) {
  std::vector<RationalFunction> c(op.order + 1);
  c[op.order] = RationalFunction(Rational(1));
  for (int t = 0; t < op.order; ++t) c[t] = op.a[t];
  return DOperator(std::move(c));
}

Poly indicial_polynomial(const ThetaOperator& op) { return op.canonical().coeff(0); }

bool is_mum(const ThetaOperator& op) {
  Poly ind = indicial_polynomial(op);
  int s = op.canonical().order();
  if (ind.degree() != s) return false;
  for (int j = 0; j < s; ++j)
    if (!cyop::is_zero(ind[j])) return false;
  return true;
}

PowerSeries apply(const ThetaOperator& op, const PowerSeries& f) {
  PowerSeries acc(f.trunc_order());
  for (int i = 0; i <= op.zdeg(); ++i) {
    const Poly& qi = op.coeff(i);
    if (qi.is_zero()) continue;
    PowerSeries pw = f;  // theta^j f, built up
    PowerSeries term = f.scaled(qi[0]);
    for (int j = 1; j <= qi.degree(); ++j) {
      pw = ps_theta(pw);
      term += pw.scaled(qi[j]);
    }
    acc += term.shifted_up(i);
  }
  return acc;
}

LogSeries apply(const ThetaOperator& op, const LogSeries& f) {
  LogSeries acc = LogSeries(PowerSeries(f.trunc_order()));
  for (int i = 0; i <= op.zdeg(); ++i) {
    const Poly& qi = op.coeff(i);
    if (qi.is_zero()) continue;
    LogSeries pw = f;
    LogSeries term = f.scaled(qi[0]);
    for (int j = 1; j <= qi.degree(); ++j) {
      pw = ls_theta(pw);
      term = term + pw.scaled(qi[j]);
    }
    acc = acc + ls_shift_up(term, i);
  }
  return acc;
}

std::vector<std::pair<int, int>> compare_operators(const ThetaOperator& a, const ThetaOperator& b) {
  ThetaOperator ca = a.canonical(), cb = b.canonical();
  std::vector<std::pair<int, int>> diffs;
  int zd = std::max(ca.zdeg(), cb.zdeg());
  int s = std::max(ca.order(), cb.order());
  for (int i = 0; i <= zd; ++i)
    for (int j = 0; j <= s; ++j)
      if (ca.coeff(i)[j] != cb.coeff(i)[j]) diffs.emplace_back(i, j);
  return diffs;
}

}  // namespace cyop
