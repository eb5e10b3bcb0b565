#include "cyop/wronskian.hpp"

#include "cyop/catalog.hpp"

namespace cyop {

namespace {

// Operator (in D-form, acting on Y) annihilating Wronskians of solution
// pairs, following the elimination chain of the exterior-square proof.
DOperator exterior_square_for_y(const DzOperator& dz) {
  const RationalFunction &a0 = dz.a[0], &a1 = dz.a[1], &a2 = dz.a[2], &a3 = dz.a[3];
  RationalFunction half(rat(1, 2));

  // U = Y''' + a3 Y'' + a2 Y' + a1 Y.
  DOperator opU(std::vector<RationalFunction>{a1, a2, a3, RationalFunction(Rational(1))});
  DOperator opU1 = opU.derived();
  DOperator opU2 = opU1.derived();

  // W = U'' + (3/2) a3 U' + (a2 + a3^2/4) U - 4 a0 Y' - 2 (a0' + a0 a3) Y.
  DOperator low(std::vector<RationalFunction>{
      RationalFunction(Rational(2)) * (a0.derivative() + a0 * a3), RationalFunction(Rational(4)) * a0});
  DOperator opW = opU2 + opU1.scaled(RationalFunction(rat(3, 2)) * a3) +
                  opU.scaled(a2 + RationalFunction(rat(1, 4)) * a3 * a3) - low;

  // V = 0 is exactly the condition22 identity; then W = 0 is the 5th-order equation.
  RationalFunction V = a3.derivative().derivative() - RationalFunction(Rational(2)) * a2.derivative() +
                       RationalFunction(rat(3, 2)) * a3 * a3.derivative() - a2 * a3 +
                       RationalFunction(rat(1, 4)) * a3 * a3 * a3 + RationalFunction(Rational(2)) * a1;
  if (V.is_zero()) return opW;
  // V W' = (1/2) V^2 U + (V' - a3 V / 2) W.
  return opW.derived().scaled(V) - opW.scaled(V.derivative() - half * a3 * V) - opU.scaled(half * V * V);
}

}  // namespace

ThetaOperator exterior_square(const ThetaOperator& op4) {
  DzOperator dz = theta_to_dz(op4);
  if (dz.order != 4) throw ShapeMismatch("exterior_square: operator must have order 4");
  DOperator for_y = exterior_square_for_y(dz);
  // w = z Y: conjugate by the multiplier 1/z.
  RationalFunction h(Poly(Rational(-1)), Poly::x());
  return theta_from_dop(for_y.conjugated_by_multiplier(h)).canonical();
}

std::vector<LogSeries> w_basis(const std::vector<LogSeries>& b) {
  if (b.size() < 4) throw CyopError("w_basis: need an order-4 basis");
  Rational half = rat(1, 2);
  std::vector<LogSeries> w;
  w.push_back(z_wronskian(b[0], b[1]));
  w.push_back(z_wronskian(b[0], b[2]));
  w.push_back(z_wronskian(b[0], b[3]));
  w.push_back(z_wronskian(b[1], b[3]).scaled(half));
  w.push_back(z_wronskian(b[2], b[3]).scaled(half));
  return w;
}

BeukersResult beukers_check(const std::vector<LogSeries>& w, int k) {
  if (w.size() != 5) throw CyopError("beukers_check: need the five w_j");
  std::vector<LogSeries> d;
  d.reserve(5);
  for (const auto& wj : w) d.push_back(ls_theta_falling(wj, k));
  LogSeries comb = (d[0] * d[4]).scaled(2) - (d[1] * d[3]).scaled(2) + d[2] * d[2];
  BeukersResult res;
  res.log_free = comb.is_log_free();
  res.zero = comb.is_zero();
  res.scaled_residual = comb.analytic();
  res.nu_min = -2 * k;
  if (!res.log_free) return res;
  Rational p9 = rpow(Rational(9), res.nu_min);
  for (int i = 0; i <= res.scaled_residual.trunc_order(); ++i) {
    res.c_nu.push_back(res.scaled_residual[i] / p9);
    p9 *= 9;
  }
  return res;
}

PseudoCoupling pseudo_coupling(const ThetaOperator& op, int N, const Rational& n0) {
  auto basis = frobenius_basis(op, N);
  PseudoCoupling out;
  out.mirror = mirror_map(basis, N);
  out.k_of_z = coupling_in_z(basis).scaled(n0);
  out.k_of_q = ps_compose(out.k_of_z, out.mirror.z_over_q.truncated(N).shifted_up(1));
  out.lambert = lambert_decompose(out.k_of_q, 2);
  return out;
}

bool verify_prop5() {
  const ThetaOperator op4 = catalog_case("zeta4-op4").op.value();
  const ThetaOperator op5 = catalog_case("zeta4-op5").op.value();
  return exterior_square(op4) == op5.canonical();
}

}  // namespace cyop
