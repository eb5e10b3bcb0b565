#pragma once

#include <initializer_list>
#include <vector>

#include "cyop/rational.hpp"

namespace cyop {

/// Dense univariate polynomial over Q, coefficients in ascending order.
class Poly {
 public:
  Poly() = default;
  Poly(const Rational& c) { if (!cyop::is_zero(c)) c_ = {c}; }
  Poly(long c) : Poly(Rational(c)) {}
  Poly(std::initializer_list<Rational> coeffs) : c_(coeffs) { trim(); }
  explicit Poly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

  static Poly x() { return Poly({Rational(0), Rational(1)}); }
  // a*x + b
  static Poly linear(const Rational& a, const Rational& b) { return Poly({b, a}); }

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  const Rational& operator[](int i) const {
    static const Rational zero(0);
    return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[i] : zero;
  }
  void set_coeff(int i, const Rational& v);
  const std::vector<Rational>& coeffs() const { return c_; }
  const Rational& leading() const { return c_.back(); }

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  Poly& operator*=(const Poly& o) { return *this = *this * o; }
  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

  Poly scaled(const Rational& k) const;
  Rational operator()(const Rational& x) const;
  // Evaluation over any commutative ring element supporting +, *, and
  // construction from Rational (used with truncated rho-polynomials).
  template <class R>
  R eval(const R& x) const {
    R acc(Rational(0));
    for (int i = degree(); i >= 0; --i) acc = acc * x + R(c_[i]);
    return acc;
  }

  Poly derivative() const;
  Poly shifted(const Rational& h) const;  // p(x+h)
  // p(a*x + b)
  Poly composed_linear(const Rational& a, const Rational& b) const;
  Poly pow(int e) const;

  static void divmod(const Poly& a, const Poly& b, Poly& q, Poly& r);
  static Poly gcd(Poly a, Poly b);  // monic gcd
  // lcm of the integer content denominators: smallest positive integer D with
  // D*p having integer coefficients.
  Int denominator_lcm() const;
  // gcd of integer coefficients (call on integer polynomials).
  Int integer_content() const;

  std::string str(const std::string& var = "x") const;

 private:
  void trim();
  std::vector<Rational> c_;
};

/// Quotient of two polynomials, normalized so the denominator is monic and
/// gcd(num, den) = 1.
class RationalFunction {
 public:
  RationalFunction() : num_(), den_(1) {}
  RationalFunction(const Rational& c) : num_(c), den_(1) {}
  RationalFunction(long c) : num_(Rational(c)), den_(1) {}
  RationalFunction(Poly num) : num_(std::move(num)), den_(1) {}
  RationalFunction(Poly num, Poly den);

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  RationalFunction operator-() const;
  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);
  RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
  RationalFunction& operator-=(const RationalFunction& o) { return *this = *this - o; }
  RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }
  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  RationalFunction derivative() const;
  // Value at x (den(x) must be nonzero).
  Rational operator()(const Rational& x) const;

  std::string str(const std::string& var = "z") const;

 private:
  Poly num_, den_;
};

}  // namespace cyop
