#pragma once

#include "cyop/recurrence.hpp"

namespace cyop {

/// Element of Q[rho]/(rho^s).
class RhoPoly {
 public:
  RhoPoly() : a_(1, Rational(0)) {}
  explicit RhoPoly(const Rational& c) : a_(1, c) {}
  RhoPoly(std::vector<Rational> a) : a_(std::move(a)) {}
  static RhoPoly with_size(int s) { return RhoPoly(std::vector<Rational>(s, Rational(0))); }

  int size() const { return static_cast<int>(a_.size()); }
  const Rational& operator[](int k) const {
    static const Rational zero(0);
    return (k >= 0 && k < size()) ? a_[k] : zero;
  }
  void set(int k, const Rational& v) { a_.at(k) = v; }

  friend RhoPoly operator+(const RhoPoly& x, const RhoPoly& y);
  friend RhoPoly operator*(const RhoPoly& x, const RhoPoly& y);
  RhoPoly inverse() const;  // needs a_[0] != 0

 private:
  std::vector<Rational> a_;
};

/// Frobenius basis y_0..y_{s-1} of a MUM operator at z = 0, analytic parts to
/// order N; y_j has log degree j and y_j(z) = sum_l f_{j,l} log^l z / l! with
/// f_{j,l} the rho^{j-l} component of A(n, rho).
std::vector<LogSeries> frobenius_basis(const ThetaOperator& op, int N);

}  // namespace cyop
