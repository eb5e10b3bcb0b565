#include "cyop/transforms.hpp"

#include <algorithm>

namespace cyop {

namespace {

Int central_binomial(long k) { return binomial(Int(2 * k), k); }

Rational odd_product(const Rational& start, long count) {
  // prod_{j=0}^{count-1} (start + 4j)
  Rational r = 1;
  for (long j = 0; j < count; ++j) r *= (start + 4 * j);
  return r;
}

void check_lower_parameter(const Rational& p, int N) {
  // (p)_n with n <= N vanishes iff p in {0, -1, ..., -(N-1)}.
  if (is_integer(p) && p <= 0 && p > Rational(-(N - 1)) - 1)
    throw ParameterPole("lower hypergeometric parameter hits a pole");
}

PowerSeries binomial_series(const Rational& expo, int N) {
  // (1+z)^expo
  PowerSeries s(N);
  for (int k = 0; k <= N; ++k) s.set(k, binomial(expo, k));
  return s;
}

}  // namespace

Rational quad_plus_seq(int n) {
  if (n < 0) throw CyopError("quad_plus_seq: n must be >= 0");
  Rational pre(factorial(4 * n), factorial(2 * n) * ipow(factorial(n), 2));
  pre.canonicalize();
  Rational s = 0;
  for (int v = 0; v <= n; ++v)
    s += Rational(ipow(2, 2 * (n - v)) * ipow(central_binomial(v), 2) * central_binomial(n - v));
  return pre * s;
}

Rational quad_minus_seq(int n) {
  if (n < 0) throw CyopError("quad_minus_seq: n must be >= 0");
  Rational pre = Rational(ipow(2, 2 * n)) * odd_product(1, n) / Rational(factorial(n));
  Rational s = 0;
  for (int mu = 0; mu <= n; ++mu) {
    Rational inner = 0;
    for (int v = 0; v <= mu; ++v) {
      Rational t = Rational(ipow(2, 2 * (mu - v)) * central_binomial(v) * binomial(Int(mu), v));
      inner += (v % 2 == 0) ? t : -t;
    }
    Rational t = Rational(ipow(2, 4 * (n - mu)) * central_binomial(mu)) * odd_product(1, n - mu) /
                 Rational(factorial(n - mu)) * odd_product(3, mu) / Rational(factorial(mu)) * inner;
    s += t;
  }
  return pre * s;
}

std::pair<PowerSeries, PowerSeries> verify_quad_transform(const Rational& a, const Rational& b, const Rational& c,
                                                          const Rational& d, int N) {
  Rational ab = 1 + a - b, ac = 1 + a - c, ad = 1 + a - d;
  check_lower_parameter(ab, N);
  check_lower_parameter(ac, N);
  check_lower_parameter(ad, N);

  PowerSeries lhs(N);
  for (int n = 0; n <= N; ++n) {
    Rational t = pochhammer(a, n) * pochhammer(b, n) * pochhammer(c, n) * pochhammer(d, n) /
                 (Rational(factorial(n)) * pochhammer(ab, n) * pochhammer(ac, n) * pochhammer(ad, n));
    lhs.set(n, t);
  }

  // First form: (1+z)^{-a} sum_n (a/2)_n (1/2+a/2)_n / ((1+a-b)_n (1+a-c)_n) W^n S_n,
  // W = 4z/(1+z)^2.
  PowerSeries one_plus = PowerSeries::identity(N) + PowerSeries::constant(1, N);
  PowerSeries w_plus = ps_div(PowerSeries::identity(N).scaled(4), ps_mul(one_plus, one_plus));
  PowerSeries rhs1(N);
  PowerSeries wpow = PowerSeries::constant(1, N);
  for (int n = 0; n <= N; ++n) {
    Rational sn = 0;
    for (int v = 0; v <= n; ++v)
      sn += pochhammer(b, v) * pochhammer(c, v) * pochhammer(1 + a - b - c, n - v) /
            (Rational(factorial(v)) * Rational(factorial(n - v)) * pochhammer(ad, v));
    Rational coef = pochhammer(a / 2, n) * pochhammer(a / 2 + rat(1, 2), n) / (pochhammer(ab, n) * pochhammer(ac, n));
    rhs1 += wpow.scaled(coef * sn);
    wpow = ps_mul(wpow, w_plus);
  }
  rhs1 = ps_mul(rhs1, binomial_series(-a, N));

  // Second form: (1-z)^{-a} sum_n (a/2)_n / (1+a-b)_n V^n T_n, V = -4z/(1-z)^2.
  PowerSeries one_minus = PowerSeries::constant(1, N) - PowerSeries::identity(N);
  PowerSeries v_minus = ps_div(PowerSeries::identity(N).scaled(-4), ps_mul(one_minus, one_minus));
  PowerSeries rhs2(N);
  PowerSeries vpow = PowerSeries::constant(1, N);
  for (int n = 0; n <= N; ++n) {
    Rational tn = 0;
    for (int mu = 0; mu <= n; ++mu) {
      Rational inner = 0;
      for (int v = 0; v <= mu; ++v) {
        Rational t = pochhammer(c, v) / (Rational(factorial(v)) * Rational(factorial(mu - v)) * pochhammer(ad, v));
        inner += (v % 2 == 0) ? t : -t;
      }
      tn += pochhammer(b, mu) * pochhammer(a / 2 + rat(1, 2), mu) * pochhammer(a / 2 + rat(1, 2) - b, n - mu) /
            (Rational(factorial(n - mu)) * pochhammer(ac, mu)) * inner;
    }
    rhs2 += vpow.scaled(pochhammer(a / 2, n) / pochhammer(ab, n) * tn);
    vpow = ps_mul(vpow, v_minus);
  }
  PowerSeries dil = binomial_series(-a, N);
  // (1-z)^{-a} = (1+(-z))^{-a}
  rhs2 = ps_mul(rhs2, dil.dilated(-1));

  return {lhs - rhs1, lhs - rhs2};
}

Sequence prop7_transform_seq(const Sequence& a, const Rational& p) {
  Sequence out;
  out.name = a.name + "-prop7";
  for (int n = 0; n < a.length(); ++n) {
    Rational s = 0;
    for (int k = 0; k <= n; ++k) s += rpow(p, n - k) * Rational(central_binomial(n - k)) * a[k];
    out.values.push_back(s);
  }
  return out;
}

ThetaOperator prop7_transform_op(const ThetaOperator& op, const RationalFunction& u_log_deriv) {
  return theta_from_dop(dop_from_theta(op).conjugated_by_multiplier(u_log_deriv));
}

ThetaOperator prop7_transform_op(const ThetaOperator& op, const Rational& p) {
  // u = sqrt(1-4pz): u'/u = -2p/(1-4pz).
  RationalFunction h(Poly(Rational(-2) * p), Poly({Rational(1), Rational(-4) * p}));
  return prop7_transform_op(op, h);
}

Sequence prop8_transform(const Sequence& a, const Rational& p, int r) {
  Sequence out;
  out.name = a.name + "-prop8";
  for (int n = 0; n < a.length(); ++n) {
    Rational s = 0;
    for (int k = 0; r * k <= n; ++k) s += rpow(p, n - r * k) * Rational(binomial(Int(n), r * k)) * a[k];
    out.values.push_back(s);
  }
  return out;
}

std::optional<ThetaOperator> fit_operator(const std::vector<Rational>& a, int order, int max_zdeg) {
  const int len = static_cast<int>(a.size());
  for (int d = 1; d <= max_zdeg; ++d) {
    const int unknowns = (d + 1) * (order + 1);
    const int rows = unknowns + order + 6;
    if (rows > len) break;  // not enough data to overdetermine
    // M[n][col(i,j)] = (n-i)^j a_{n-i}.
    std::vector<std::vector<Rational>> m(rows, std::vector<Rational>(unknowns, Rational(0)));
    for (int n = 0; n < rows; ++n)
      for (int i = 0; i <= std::min(n, d); ++i) {
        Rational pw = 1;
        for (int j = 0; j <= order; ++j) {
          m[n][i * (order + 1) + j] = pw * a[n - i];
          pw *= Rational(n - i);
        }
      }
    // Row-reduce.
    std::vector<int> pivot_col;
    int row = 0;
    for (int col = 0; col < unknowns && row < rows; ++col) {
      int pr = -1;
      for (int r2 = row; r2 < rows; ++r2)
        if (!is_zero(m[r2][col])) {
          pr = r2;
          break;
        }
      if (pr < 0) continue;
      std::swap(m[row], m[pr]);
      Rational inv = Rational(1) / m[row][col];
      for (int c2 = col; c2 < unknowns; ++c2) m[row][c2] *= inv;
      for (int r2 = 0; r2 < rows; ++r2) {
        if (r2 == row || is_zero(m[r2][col])) continue;
        Rational f = m[r2][col];
        for (int c2 = col; c2 < unknowns; ++c2) m[r2][c2] -= f * m[row][c2];
      }
      pivot_col.push_back(col);
      ++row;
    }
    std::vector<bool> is_pivot(unknowns, false);
    for (int c2 : pivot_col) is_pivot[c2] = true;
    for (int free_col = 0; free_col < unknowns; ++free_col) {
      if (is_pivot[free_col]) continue;
      std::vector<Rational> x(unknowns, Rational(0));
      x[free_col] = 1;
      for (size_t r2 = 0; r2 < pivot_col.size(); ++r2) x[pivot_col[r2]] = -m[r2][free_col];
      std::vector<Poly> q(d + 1);
      for (int i = 0; i <= d; ++i) {
        std::vector<Rational> coeffs(x.begin() + i * (order + 1), x.begin() + (i + 1) * (order + 1));
        q[i] = Poly(std::move(coeffs));
      }
      ThetaOperator cand = ThetaOperator(std::move(q)).canonical();
      if (cand.is_zero()) continue;
      if (recurrence_from_operator(cand).annihilates(a, len - 1)) return cand;
    }
  }
  return std::nullopt;
}

namespace {

// Exact polynomial quotient, throws ShapeMismatch on a nonzero remainder.
Poly exact_div(const Poly& a, const Poly& b) {
  Poly q, r;
  Poly::divmod(a, b, q, r);
  if (!r.is_zero()) throw ShapeMismatch("operator does not have the required factored shape");
  return q;
}

}  // namespace

ThetaOperator central_binomial_lift(const ThetaOperator& op3_in) {
  ThetaOperator op3 = op3_in.canonical();
  if (op3.zdeg() > 2 || op3.order() != 3) throw ShapeMismatch("central_binomial_lift: need theta^3 shape, z-degree 2");
  Poly t = Poly::x();
  Poly t3 = t * t * t;
  // Normalize so Q0 = theta^3 exactly.
  Rational lead = op3.coeff(0)[3];
  if (op3.coeff(0) != t3.scaled(lead)) throw ShapeMismatch("central_binomial_lift: Q0 is not c*theta^3");
  Poly two_t_1 = Poly::linear(2, 1);
  Poly p = exact_div(op3.coeff(1), two_t_1).scaled(-Rational(1) / lead);
  Poly t1_cubed = Poly::linear(1, 1).pow(3);
  Poly cpoly = exact_div(op3.coeff(2), t1_cubed);
  if (cpoly.degree() > 0) throw ShapeMismatch("central_binomial_lift: z^2 term is not c*(theta+1)^3");
  Rational c = cpoly[0] / lead;
  // theta^4 - 2z(2T+1)^2 P + 4c z^2 (T+1)^2 (2T+1)(2T+3).
  Poly q0 = t.pow(4);
  Poly q1 = (two_t_1 * two_t_1 * p).scaled(-2);
  Poly q2 = (Poly::linear(1, 1).pow(2) * two_t_1 * Poly::linear(2, 3)).scaled(4 * c);
  return ThetaOperator({q0, q1, q2}).canonical();
}

SymmetricSquareRoot symmetric_square_criterion(const ThetaOperator& op3) {
  DzOperator dz = theta_to_dz(op3);
  if (dz.order != 3) throw ShapeMismatch("symmetric_square_criterion: operator must have order 3");
  const RationalFunction &s0 = dz.a[0], &s1 = dz.a[1], &s2 = dz.a[2];
  RationalFunction res = s1 * s2 * RationalFunction(rat(1, 3)) - s2 * s2 * s2 * RationalFunction(rat(2, 27)) +
                         s1.derivative() * RationalFunction(rat(1, 2)) -
                         s2.derivative().derivative() * RationalFunction(rat(1, 6)) -
                         s2 * s2.derivative() * RationalFunction(rat(1, 3)) - s0;
  SymmetricSquareRoot out;
  out.criterion_residual = res;
  out.is_symmetric_square = res.is_zero();
  if (out.is_symmetric_square) {
    DzOperator root;
    root.order = 2;
    root.a.resize(2);
    root.a[1] = s2 * RationalFunction(rat(1, 3));
    root.a[0] = s1 * RationalFunction(rat(1, 4)) - s2 * s2 * RationalFunction(rat(1, 18)) -
                s2.derivative() * RationalFunction(rat(1, 12));
    out.root = dz_to_theta(root);
  }
  return out;
}

ThetaOperator symmetric_square_root(const ThetaOperator& op3) {
  SymmetricSquareRoot r = symmetric_square_criterion(op3);
  if (!r.is_symmetric_square) throw NotASymmetricSquare("criterion residual is nonzero");
  return r.root;
}

ThetaOperator prop9_root_closed_form(const Rational& a, const Rational& b, const Rational& c) {
  Poly q0 = Poly::x() * Poly::x();
  Poly q1 = -Poly({b / 2, a, 2 * a});
  Poly q2 = Poly::linear(Rational(1), rat(1, 2)).pow(2).scaled(c);
  return ThetaOperator({q0, q1, q2}).canonical();
}

ThetaOperator dualize(const ThetaOperator& op_in, const Rational& c) {
  ThetaOperator op = op_in.canonical();
  int d = op.zdeg();
  int s = op.order();
  const Poly& top = op.coeff(d);
  Rational shift;
  if (top == Poly::linear(1, 1).pow(s).scaled(top.leading()))
    shift = 1;
  else if (top == Poly::linear(2, 1).pow(s).scaled(top.leading() / rpow(Rational(2), s)))
    shift = rat(1, 2);
  else
    throw ShapeMismatch("dualize: top term is neither (theta+1)^s nor (2 theta+1)^s shaped");
  std::vector<Poly> q(d + 1);
  for (int j = 0; j <= d; ++j) q[j] = op.coeff(d - j).composed_linear(-1, -shift).scaled(rpow(c, d - j));
  return ThetaOperator(std::move(q)).canonical();
}

}  // namespace cyop
