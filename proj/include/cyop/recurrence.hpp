#pragma once

#include <functional>
#include <string>
#include <vector>

#include "cyop/theta_op.hpp"

namespace cyop {

struct Sequence {
  std::string name;
  std::vector<Rational> values;

  int length() const { return static_cast<int>(values.size()); }
  const Rational& operator[](int n) const { return values.at(n); }
};

Sequence hadamard_seq(const Sequence& a, const Sequence& b);

/// Polynomial-coefficient linear recurrence in the fixed convention
///   sum_{i=0..order} q_i(n) A_{n-i} = 0   for all n >= order,
/// matching sum_i z^i Q_i(theta) via q_i(n) = Q_i(n-i).
class Recurrence {
 public:
  Recurrence() : q_(1, Poly(Rational(1))) {}
  explicit Recurrence(std::vector<Poly> q) : q_(std::move(q)) {
    if (q_.empty() || q_[0].is_zero()) throw CyopError("Recurrence: leading polynomial must be nonzero");
  }

  /// Builds from the printed shape sum_{j=0..m} r_j(n) A_{n+1-j} = 0
  /// (highest index first, as the paper prints multi-term recursions).
  static Recurrence from_printed(const std::vector<Poly>& r);

  int order() const { return static_cast<int>(q_.size()) - 1; }
  const Poly& coeff(int i) const {
    static const Poly zero;
    return (i >= 0 && i <= order()) ? q_[i] : zero;
  }

  /// Exact values A_0..A_N from initial values A_0..A_{k-1} (k = order
  /// allowed to be short when the early q_0(n) equations do not reach back).
  Sequence unroll(const std::vector<Rational>& initial, int N, const std::string& name = "") const;

  /// Checks sum_i q_i(n) A_{n-i} = 0 for from <= n <= upto (indices below 0
  /// read as 0, the power-series convention).
  bool annihilates(const std::vector<Rational>& values, int upto, int from = 0) const;

 private:
  std::vector<Poly> q_;
};

Recurrence recurrence_from_operator(const ThetaOperator& op);
ThetaOperator operator_from_recurrence(const Recurrence& rec);

}  // namespace cyop
