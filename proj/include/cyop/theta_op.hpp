#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cyop/log_series.hpp"
#include "cyop/poly.hpp"

namespace cyop {

/// Differential operator sum_i z^i Q_i(theta), theta = z d/dz, with
/// polynomial Q_i over Q. Canonical form: no common z power, integer
/// coefficients with content 1, and a positive leading theta^s coefficient at
/// the lowest z power that reaches degree s.
class ThetaOperator {
 public:
  ThetaOperator() : q_(1, Poly()) {}
  explicit ThetaOperator(std::vector<Poly> q) : q_(std::move(q)) {
    if (q_.empty()) q_.assign(1, Poly());
  }

  int zdeg() const { return static_cast<int>(q_.size()) - 1; }
  int order() const;
  const Poly& coeff(int i) const {
    static const Poly zero;
    return (i >= 0 && i <= zdeg()) ? q_[i] : zero;
  }
  const std::vector<Poly>& coeffs() const { return q_; }
  bool is_zero() const;

  ThetaOperator canonical() const;
  friend bool operator==(const ThetaOperator& a, const ThetaOperator& b) { return a.q_ == b.q_; }

  std::string str() const;

 private:
  std::vector<Poly> q_;
};

/// Monic d/dz-form operator y^(s) + a_{s-1} y^(s-1) + ... + a_0 y with
/// rational-function coefficients.
struct DzOperator {
  int order = 0;
  std::vector<RationalFunction> a;  // a[0..order-1]
};

/// General sum_t c_t(z) (d/dz)^t with rational-function coefficients; the
/// workhorse for symbolic constructions (exterior squares, conjugations).
class DOperator {
 public:
  DOperator() : c_(1) {}
  explicit DOperator(std::vector<RationalFunction> c) : c_(std::move(c)) {
    if (c_.empty()) c_.assign(1, RationalFunction());
  }

  int order() const { return static_cast<int>(c_.size()) - 1; }
  const RationalFunction& coeff(int t) const {
    static const RationalFunction zero;
    return (t >= 0 && t <= order()) ? c_[t] : zero;
  }

  friend DOperator operator+(const DOperator& a, const DOperator& b);
  friend DOperator operator-(const DOperator& a, const DOperator& b);
  DOperator scaled(const RationalFunction& f) const;
  /// D  L (the operator y -> (L y)').
  DOperator derived() const;
  /// u^{-1}  L  (u .), for any u with u'/u = h rational; the result is the
  /// operator annihilating y/u when L annihilates y.
  DOperator conjugated_by_multiplier(const RationalFunction& h) const;

 private:
  std::vector<RationalFunction> c_;
};

ThetaOperator theta_from_dop(const DOperator& op);
DOperator dop_from_theta(const ThetaOperator& op);

DzOperator theta_to_dz(const ThetaOperator& op);
ThetaOperator dz_to_theta(const DzOperator& op);
DOperator dop_from_dz(const DzOperator& op);

/// Q_0(lambda) of the canonical form.
Poly indicial_polynomial(const ThetaOperator& op);
bool is_mum(const ThetaOperator& op);

PowerSeries apply(const ThetaOperator& op, const PowerSeries& f);
LogSeries apply(const ThetaOperator& op, const LogSeries& f);

/// Positions (z power, theta power) where the canonical forms differ.
std::vector<std::pair<int, int>> compare_operators(const ThetaOperator& a, const ThetaOperator& b);

// Falling factorial x(x-1)...(x-k+1) as a polynomial.
Poly falling_factorial(int k);
// Stirling numbers of the second kind S(n, k) for 0 <= k <= n <= nmax.
std::vector<std::vector<Int>> stirling2_table(int nmax);

}  // namespace cyop
