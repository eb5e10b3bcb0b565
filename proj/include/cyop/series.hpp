#pragma once

#include <vector>

#include "cyop/poly.hpp"
#include "cyop/rational.hpp"

namespace cyop {

/// Truncated power series sum a_n z^n, n = 0..trunc_order, with exact
/// rational coefficients. Binary operations truncate to the minimum order of
/// their operands; truncation is never silently extended.
class PowerSeries {
 public:
  PowerSeries() : c_(1, Rational(0)) {}
  explicit PowerSeries(int trunc_order) : c_(trunc_order + 1, Rational(0)) {}
  PowerSeries(std::vector<Rational> coeffs) : c_(std::move(coeffs)) {
    if (c_.empty()) c_.assign(1, Rational(0));
  }
  static PowerSeries constant(const Rational& v, int trunc_order);
  static PowerSeries identity(int trunc_order);  // z
  static PowerSeries geometric(int trunc_order);  // 1/(1-z)

  int trunc_order() const { return static_cast<int>(c_.size()) - 1; }
  const Rational& operator[](int n) const {
    static const Rational zero(0);
    return (n >= 0 && n <= trunc_order()) ? c_[n] : zero;
  }
  void set(int n, const Rational& v) { c_.at(n) = v; }
  const std::vector<Rational>& coeffs() const { return c_; }

  bool is_zero() const;
  PowerSeries truncated(int order) const;

  PowerSeries operator-() const;
  friend PowerSeries operator+(const PowerSeries& a, const PowerSeries& b);
  friend PowerSeries operator-(const PowerSeries& a, const PowerSeries& b);
  friend PowerSeries operator*(const PowerSeries& a, const PowerSeries& b);
  PowerSeries& operator+=(const PowerSeries& o) { return *this = *this + o; }
  PowerSeries& operator-=(const PowerSeries& o) { return *this = *this - o; }
  PowerSeries& operator*=(const PowerSeries& o) { return *this = *this * o; }
  friend bool operator==(const PowerSeries& a, const PowerSeries& b) { return a.c_ == b.c_; }

  PowerSeries scaled(const Rational& k) const;
  // Substitution z -> k z.
  PowerSeries dilated(const Rational& k) const;
  // Multiplication by z^k (top k coefficients fall off the truncation).
  PowerSeries shifted_up(int k) const;
  // Division by z^k; requires the low k coefficients to vanish.
  PowerSeries shifted_down(int k) const;

  std::string str(const std::string& var = "z", int max_terms = -1) const;

 private:
  std::vector<Rational> c_;
};

PowerSeries ps_mul(const PowerSeries& a, const PowerSeries& b);
PowerSeries ps_reciprocal(const PowerSeries& a);
PowerSeries ps_div(const PowerSeries& a, const PowerSeries& b);
PowerSeries ps_exp(const PowerSeries& a);
PowerSeries ps_log(const PowerSeries& a);
PowerSeries ps_compose(const PowerSeries& f, const PowerSeries& g);
PowerSeries ps_revert(const PowerSeries& f);

struct NthRootResult {
  PowerSeries root;
  bool integral;  // all coefficients integers up to the truncation order
};
NthRootResult ps_nth_root(const PowerSeries& f, long m);

PowerSeries ps_derive(const PowerSeries& a);
PowerSeries ps_theta(const PowerSeries& a);
// Antiderivative with zero constant term, exact to order trunc+1.
PowerSeries ps_integrate(const PowerSeries& a);

// Series expansion to the given order of a rational function regular at 0.
PowerSeries expand_at_zero(const RationalFunction& f, int order);

bool all_integral(const PowerSeries& f);
// Primes dividing any coefficient denominator.
std::vector<Int> denominator_prime_support(const PowerSeries& f);

}  // namespace cyop
