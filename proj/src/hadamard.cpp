#include "cyop/hadamard.hpp"

namespace cyop {

namespace {

RationalFunction shifted(const RationalFunction& f, long h) {
  return RationalFunction(f.num().shifted(Rational(h)), f.den().shifted(Rational(h)));
}

Poly poly_lcm(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly();
  Poly g = Poly::gcd(a, b);
  Poly q, r;
  Poly::divmod(a * b, g, q, r);
  return q.scaled(Rational(1) / q.leading());
}

// Clears denominators of rational-function recurrence coefficients (in the
// convention sum_i q_i(n) C_{n-i} = 0) into a polynomial Recurrence.
Recurrence clear_denominators(const std::vector<RationalFunction>& q) {
  Poly l(Rational(1));
  for (const auto& f : q)
    if (!f.is_zero()) l = poly_lcm(l, f.den());
  std::vector<Poly> out(q.size());
  for (size_t i = 0; i < q.size(); ++i) {
    RationalFunction v = q[i] * RationalFunction(l);
    Poly quo, rem;
    Poly::divmod(v.num(), v.den(), quo, rem);
    if (!rem.is_zero()) throw CyopError("clear_denominators: inexact division");
    out[i] = quo;
  }
  // Divide by rational content.
  Int den = 1;
  for (const auto& p : out) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), p.denominator_lcm().get_mpz_t());
  for (auto& p : out) p = p.scaled(Rational(den));
  Int content = 0;
  for (const auto& p : out) mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), p.integer_content().get_mpz_t());
  if (content > 1)
    for (auto& p : out) p = p.scaled(Rational(1) / Rational(content));
  return Recurrence(std::move(out));
}

}  // namespace

NormalForm2 meurman_normal_form(const Recurrence& rec) {
  if (rec.order() == 1) {
    // A two-term recurrence q0(n) A_n + q1(n) A_{n-1} = 0 also satisfies the
    // order-2 relation 2 q0(n) q0(n-1) A_n + q1(n) q0(n-1) A_{n-1}
    // - q1(n) q1(n-1) A_{n-2} = 0, which keeps the composition formulas
    // nondegenerate (the hypergeometric right factors enter this way).
    Poly q0 = rec.coeff(0), q1 = rec.coeff(1);
    Recurrence widened(
        {q0 * q0.shifted(Rational(-1)) * Poly(Rational(2)), q1 * q0.shifted(Rational(-1)), -(q1 * q1.shifted(Rational(-1)))});
    return meurman_normal_form(widened);
  }
  if (rec.order() != 2) throw ShapeMismatch("meurman: input recurrence must have order 2");
  Poly lead = rec.coeff(0).shifted(Rational(2));
  if (lead.is_zero()) throw DegenerateLeading("meurman: zero leading polynomial");
  NormalForm2 nf;
  nf.p = RationalFunction(-rec.coeff(1).shifted(Rational(2)), lead);
  nf.q = RationalFunction(-rec.coeff(2).shifted(Rational(2)), lead);
  return nf;
}

Recurrence meurman_product(const Recurrence& rec_a, const Recurrence& rec_b) {
  NormalForm2 a = meurman_normal_form(rec_a);
  NormalForm2 b = meurman_normal_form(rec_b);
  const RationalFunction &p1 = a.p, &q1 = a.q, &p2 = b.p, &q2 = b.q;

  auto R = [](const RationalFunction& p, const RationalFunction& q) {
    return shifted(p, 1) * p + shifted(q, 1);
  };
  auto S = [](const RationalFunction& p, const RationalFunction& q) { return shifted(p, 1) * q; };
  RationalFunction r1 = R(p1, q1), s1 = S(p1, q1), r2 = R(p2, q2), s2 = S(p2, q2);
  RationalFunction u1 = shifted(p1, 2) * r1 + shifted(q1, 2) * p1;
  RationalFunction v1 = shifted(p1, 2) * s1 + shifted(q1, 2) * q1;
  RationalFunction u2 = shifted(p2, 2) * r2 + shifted(q2, 2) * p2;
  RationalFunction v2 = shifted(p2, 2) * s2 + shifted(q2, 2) * q2;

  RationalFunction t2 = r2 * s1 * u1 * v2 - r1 * s2 * u2 * v1;
  RationalFunction t3 = p1 * q2 * u2 * v1 - p2 * q1 * u1 * v2;
  RationalFunction t4 = r1 * s2 * p2 * q1 - r2 * s1 * p1 * q2;
  RationalFunction w0 = q1 * q2 * t2 + s1 * s2 * t3 + v1 * v2 * t4;
  RationalFunction w1 = p1 * p2 * t2 + r1 * r2 * t3 + u1 * u2 * t4;
  if (t4.is_zero()) throw DegenerateLeading("meurman_product: T4 vanishes identically");

  // T4(n) C_{n+4} + T3(n) C_{n+3} + T2(n) C_{n+2} - W1(n) C_{n+1} - W0(n) C_n = 0.
  std::vector<RationalFunction> q(5);
  q[0] = shifted(t4, -4);
  q[1] = shifted(t3, -4);
  q[2] = shifted(t2, -4);
  q[3] = -shifted(w1, -4);
  q[4] = -shifted(w0, -4);
  return clear_denominators(q);
}

Recurrence meurman_square(const Recurrence& rec) {
  NormalForm2 nf = meurman_normal_form(rec);
  const RationalFunction &p = nf.p, &q = nf.q;
  RationalFunction r = shifted(p, 1) * p + shifted(q, 1);
  RationalFunction s = shifted(p, 1) * q;
  RationalFunction t = r * q - p * s;
  RationalFunction lead = p * q;
  if (lead.is_zero()) throw DegenerateLeading("meurman_square: P*Q vanishes identically");

  // PQ C_{n+3} - RS C_{n+2} - PRT C_{n+1} + QST C_n = 0.
  std::vector<RationalFunction> out(4);
  out[0] = shifted(lead, -3);
  out[1] = -shifted(r * s, -3);
  out[2] = -shifted(p * r * t, -3);
  out[3] = shifted(q * s * t, -3);
  return clear_denominators(out);
}

namespace {

// Splits theta^2 - zP(T) - c z^2 (T+1)^2 into (P, c); order must be 2.
void split_zagier_shape(const ThetaOperator& op_in, Poly& p, Rational& c, bool allow_z2) {
  ThetaOperator op = op_in.canonical();
  Poly t2({Rational(0), Rational(0), Rational(1)});
  if (op.order() != 2 || op.zdeg() > (allow_z2 ? 2 : 1)) throw ShapeMismatch("not a theta^2 - zP - cz^2(T+1)^2 shape");
  Rational k = op.coeff(0)[2];
  if (op.coeff(0) != t2.scaled(k)) throw ShapeMismatch("Q0 is not c*theta^2");
  p = op.coeff(1).scaled(-Rational(1) / k);
  c = 0;
  if (op.zdeg() == 2) {
    Poly t1sq = Poly::linear(1, 1).pow(2);
    Poly q2 = op.coeff(2);
    Poly quo, rem;
    Poly::divmod(q2, t1sq, quo, rem);
    if (!rem.is_zero() || quo.degree() > 0) throw ShapeMismatch("z^2 term is not c*(theta+1)^2");
    c = -quo[0] / k;
  }
}

}  // namespace

ThetaOperator had_closed_2x2(const ThetaOperator& left, const ThetaOperator& right) {
  Poly p, q;
  Rational c, cr;
  split_zagier_shape(left, p, c, true);
  split_zagier_shape(right, q, cr, false);
  Poly t = Poly::x();
  Poly q0 = t.pow(4);
  Poly q1 = -(p * q);
  Poly q2 = (q.shifted(Rational(1)) * q).scaled(-c);
  return ThetaOperator({q0, q1, q2}).canonical();
}

ThetaOperator had_square_closed(const Rational& a, const Rational& b) {
  Poly t = Poly::x();
  Poly two_t_1 = Poly::linear(2, 1);
  Poly q0 = t.pow(4);
  Poly q1 = -(t.pow(4).scaled(2 * b) + two_t_1.pow(2).scaled(a * a));
  Poly q2 = (two_t_1 * Poly({4 * a * a + b, 2 * b, 2 * b})).scaled(-b);
  // Linear coefficient 4A^2 + 8B: forced by annihilation of the squared
  // sequences (an undetermined-coefficients refit of (k)*(k) pins it).
  Poly q3 = Poly({a * a + 2 * b, 4 * a * a + 8 * b, 4 * a * a + 12 * b, 8 * b, 2 * b}).scaled(b * b);
  Poly q4 = Poly::linear(1, 1).pow(4).scaled(-rpow(b, 4));
  return ThetaOperator({q0, q1, q2, q3, q4}).canonical();
}

ThetaOperator had_closed_2x3(const ThetaOperator& left, const ThetaOperator& right) {
  ThetaOperator op3 = left.canonical();
  Poly t = Poly::x();
  if (op3.order() != 3 || op3.zdeg() != 2) throw ShapeMismatch("left factor is not an order-3, z-degree-2 operator");
  Rational k = op3.coeff(0)[3];
  if (op3.coeff(0) != t.pow(3).scaled(k)) throw ShapeMismatch("Q0 is not c*theta^3");
  Poly two_t_1 = Poly::linear(2, 1);
  Poly quo, rem;
  Poly::divmod(op3.coeff(1), two_t_1, quo, rem);
  if (!rem.is_zero()) throw ShapeMismatch("z term is not (2 theta + 1) P(theta)");
  Poly p = quo.scaled(-Rational(1) / k);
  Poly::divmod(op3.coeff(2), Poly::linear(1, 1).pow(3), quo, rem);
  if (!rem.is_zero() || quo.degree() > 0) throw ShapeMismatch("z^2 term is not c*(theta+1)^3");
  Rational c = -quo[0] / k;

  Poly q;
  Rational cr;
  split_zagier_shape(right, q, cr, false);

  Poly q0 = t.pow(5);
  Poly q1 = -(two_t_1 * p * q);
  Poly q2 = (Poly::linear(1, 1) * q.shifted(Rational(1)) * q).scaled(-c);
  return ThetaOperator({q0, q1, q2}).canonical();
}

}  // namespace cyop
