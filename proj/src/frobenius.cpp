#include "cyop/frobenius.hpp"

namespace cyop {

RhoPoly operator+(const RhoPoly& x, const RhoPoly& y) {
  int s = std::max(x.size(), y.size());
  RhoPoly r = RhoPoly::with_size(s);
  for (int k = 0; k < s; ++k) r.set(k, x[k] + y[k]);
  return r;
}

RhoPoly operator*(const RhoPoly& x, const RhoPoly& y) {
  int s = std::max(x.size(), y.size());
  RhoPoly r = RhoPoly::with_size(s);
  for (int i = 0; i < s; ++i) {
    if (cyop::is_zero(x[i])) continue;
    for (int j = 0; i + j < s; ++j) {
      if (cyop::is_zero(y[j])) continue;
      r.set(i + j, r[i + j] + x[i] * y[j]);
    }
  }
  return r;
}

RhoPoly RhoPoly::inverse() const {
  if (cyop::is_zero(a_[0])) throw SingularRecursion("RhoPoly::inverse: zero constant term");
  int s = size();
  RhoPoly r = RhoPoly::with_size(s);
  Rational inv0 = Rational(1) / a_[0];
  r.set(0, inv0);
  for (int k = 1; k < s; ++k) {
    Rational acc = 0;
    for (int j = 1; j <= k; ++j) acc += a_[j] * r[k - j];
    r.set(k, -acc * inv0);
  }
  return r;
}

namespace {

// Q(n + rho) in Q[rho]/(rho^s), by Horner with the ring element n + rho.
RhoPoly eval_shifted(const Poly& q, long n, int s) {
  RhoPoly x = RhoPoly::with_size(s);
  x.set(0, Rational(n));
  if (s > 1) x.set(1, 1);
  RhoPoly acc = RhoPoly::with_size(s);
  for (int j = q.degree(); j >= 0; --j) {
    RhoPoly c = RhoPoly::with_size(s);
    c.set(0, q[j]);
    acc = acc * x + c;
  }
  return acc;
}

}  // namespace

std::vector<LogSeries> frobenius_basis(const ThetaOperator& op_in, int N) {
  ThetaOperator op = op_in.canonical();
  if (!is_mum(op)) throw NotMUM("frobenius_basis: operator is not MUM");
  int s = op.order();
  int d = op.zdeg();
  // A(n, rho) from Q_0(n+rho) A(n) = -sum_{i>=1} Q_i(n-i+rho) A(n-i).
  std::vector<RhoPoly> A(N + 1, RhoPoly::with_size(s));
  A[0].set(0, 1);
  for (long n = 1; n <= N; ++n) {
    RhoPoly rhs = RhoPoly::with_size(s);
    for (int i = 1; i <= d && i <= n; ++i) {
      RhoPoly qi = eval_shifted(op.coeff(i), n - i, s);
      rhs = rhs + qi * A[n - i];
    }
    RhoPoly lead_el = eval_shifted(op.coeff(0), n, s);
    if (cyop::is_zero(lead_el[0])) throw SingularRecursion("frobenius_basis: singular leading factor");
    RhoPoly negA = rhs * lead_el.inverse();
    RhoPoly an = RhoPoly::with_size(s);
    for (int k = 0; k < s; ++k) an.set(k, -negA[k]);
    A[n] = an;
  }
  std::vector<LogSeries> basis;
  basis.reserve(s);
  for (int j = 0; j < s; ++j) {
    std::vector<PowerSeries> parts(j + 1, PowerSeries(N));
    for (int l = 0; l <= j; ++l)
      for (long n = 0; n <= N; ++n) parts[l].set(n, A[n][j - l]);
    basis.emplace_back(std::move(parts));
  }
  return basis;
}

}  // namespace cyop
