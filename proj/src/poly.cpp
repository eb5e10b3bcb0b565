#include "cyop/poly.hpp"

#include <sstream>

namespace cyop {

void Poly::trim() {
  while (!c_.empty() && cyop::is_zero(c_.back())) c_.pop_back();
}

void Poly::set_coeff(int i, const Rational& v) {
  if (i >= static_cast<int>(c_.size())) {
    if (cyop::is_zero(v)) return;
    c_.resize(i + 1, Rational(0));
  }
  c_[i] = v;
  trim();
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

Poly& Poly::operator+=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly();
  std::vector<Rational> c(a.c_.size() + b.c_.size() - 1, Rational(0));
  for (size_t i = 0; i < a.c_.size(); ++i)
    for (size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  return Poly(std::move(c));
}

Poly Poly::scaled(const Rational& k) const {
  if (cyop::is_zero(k)) return Poly();
  Poly r = *this;
  for (auto& c : r.c_) c *= k;
  return r;
}

Rational Poly::operator()(const Rational& x) const {
  Rational acc = 0;
  for (int i = degree(); i >= 0; --i) acc = acc * x + c_[i];
  return acc;
}

Poly Poly::derivative() const {
  if (c_.size() <= 1) return Poly();
  std::vector<Rational> d(c_.size() - 1);
  for (size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * Rational(static_cast<long>(i));
  return Poly(std::move(d));
}

Poly Poly::shifted(const Rational& h) const { return composed_linear(1, h); }

Poly Poly::composed_linear(const Rational& a, const Rational& b) const {
  // Horner in (a*x+b).
  Poly lin = Poly::linear(a, b);
  Poly acc;
  for (int i = degree(); i >= 0; --i) acc = acc * lin + Poly(c_[i]);
  return acc;
}

Poly Poly::pow(int e) const {
  Poly acc(Rational(1));
  for (int i = 0; i < e; ++i) acc *= *this;
  return acc;
}

void Poly::divmod(const Poly& a, const Poly& b, Poly& q, Poly& r) {
  if (b.is_zero()) throw CyopError("polynomial division by zero");
  q = Poly();
  r = a;
  while (!r.is_zero() && r.degree() >= b.degree()) {
    Rational f = r.leading() / b.leading();
    int shift = r.degree() - b.degree();
    std::vector<Rational> mono(shift + 1, Rational(0));
    mono[shift] = f;
    Poly m(std::move(mono));
    q += m;
    r -= m * b;
  }
}

Poly Poly::gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly q, r;
    divmod(a, b, q, r);
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero()) return a;
  return a.scaled(Rational(1) / a.leading());  // monic
}

Int Poly::denominator_lcm() const {
  Int l = 1;
  for (const auto& c : c_) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den().get_mpz_t());
  return l;
}

Int Poly::integer_content() const {
  Int g = 0;
  for (const auto& c : c_) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_num().get_mpz_t());
  return g;
}

std::string Poly::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const Rational& c = (*this)[i];
    if (cyop::is_zero(c)) continue;
    if (!first) out << (sgn(c) < 0 ? " - " : " + ");
    else if (sgn(c) < 0) out << "-";
    first = false;
    Rational a = abs(c);
    if (i == 0 || a != 1) out << to_string(a);
    if (i > 0) {
      if (a != 1) out << "*";
      out << var;
      if (i > 1) out << "^" << i;
    }
  }
  return out.str();
}

RationalFunction::RationalFunction(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw CyopError("rational function with zero denominator");
  if (num_.is_zero()) {
    den_ = Poly(Rational(1));
    return;
  }
  Poly g = Poly::gcd(num_, den_);
  if (g.degree() > 0) {
    Poly q, r;
    Poly::divmod(num_, g, q, r);
    num_ = q;
    Poly::divmod(den_, g, q, r);
    den_ = q;
  }
  Rational lead = den_.leading();
  if (lead != 1) {
    num_ = num_.scaled(Rational(1) / lead);
    den_ = den_.scaled(Rational(1) / lead);
  }
}

RationalFunction RationalFunction::operator-() const {
  RationalFunction r = *this;
  r.num_ = -r.num_;
  return r;
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
  return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
  return RationalFunction(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
  return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
  if (b.is_zero()) throw CyopError("rational function division by zero");
  return RationalFunction(a.num_ * b.den_, a.den_ * b.num_);
}

RationalFunction RationalFunction::derivative() const {
  return RationalFunction(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
}

Rational RationalFunction::operator()(const Rational& x) const {
  Rational d = den_(x);
  if (cyop::is_zero(d)) throw CyopError("rational function pole");
  return num_(x) / d;
}

std::string RationalFunction::str(const std::string& var) const {
  if (den_ == Poly(Rational(1))) return num_.str(var);
  return "(" + num_.str(var) + ")/(" + den_.str(var) + ")";
}

}  // namespace cyop
