#include "cyop/recurrence.hpp"

#include <algorithm>

namespace cyop {

Sequence hadamard_seq(const Sequence& a, const Sequence& b) {
  Sequence out;
  out.name = a.name + "*" + b.name;
  int n = std::min(a.length(), b.length());
  out.values.reserve(n);
  for (int i = 0; i < n; ++i) out.values.push_back(a.values[i] * b.values[i]);
  return out;
}

Recurrence Recurrence::from_printed(const std::vector<Poly>& r) {
  std::vector<Poly> q(r.size());
  for (size_t j = 0; j < r.size(); ++j) q[j] = r[j].shifted(-1);  // n -> n-1
  return Recurrence(std::move(q));
}

Sequence Recurrence::unroll(const std::vector<Rational>& initial, int N, const std::string& name) const {
  if (initial.empty()) throw CyopError("unroll: needs at least one initial value");
  Sequence out;
  out.name = name;
  out.values = initial;
  if (static_cast<int>(out.values.size()) > N + 1) out.values.resize(N + 1);
  for (int n = static_cast<int>(initial.size()); n <= N; ++n) {
    Rational lead = q_[0](Rational(n));
    if (cyop::is_zero(lead)) throw SingularStep(n);
    Rational s = 0;
    for (int i = 1; i <= order(); ++i) {
      if (n - i < 0) break;
      s += q_[i](Rational(n)) * out.values[n - i];
    }
    out.values.push_back(-s / lead);
  }
  return out;
}

bool Recurrence::annihilates(const std::vector<Rational>& values, int upto, int from) const {
  for (int n = from; n <= upto; ++n) {
    Rational s = 0;
    for (int i = 0; i <= order(); ++i) {
      if (n - i < 0) break;
      s += q_[i](Rational(n)) * values.at(n - i);
    }
    if (!cyop::is_zero(s)) return false;
  }
  return true;
}

Recurrence recurrence_from_operator(const ThetaOperator& op) {
  ThetaOperator c = op.canonical();
  std::vector<Poly> q(c.zdeg() + 1);
  for (int i = 0; i <= c.zdeg(); ++i) q[i] = c.coeff(i).shifted(Rational(-i));  // Q_i(n-i)
  return Recurrence(std::move(q));
}

ThetaOperator operator_from_recurrence(const Recurrence& rec) {
  std::vector<Poly> q(rec.order() + 1);
  for (int i = 0; i <= rec.order(); ++i) q[i] = rec.coeff(i).shifted(Rational(i));  // Q_i(th) = q_i(th+i)
  return ThetaOperator(std::move(q)).canonical();
}

}  // namespace cyop
