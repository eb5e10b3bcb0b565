#include "cyop/catalog.hpp"
#include "cyop/mum.hpp"
#include "cyop/wronskian.hpp"
#include "doctest.h"

using namespace cyop;

namespace {

ThetaOperator theta_pow(int s) {
  Poly t(Rational(1));
  for (int i = 0; i < s; ++i) t *= Poly::x();
  return ThetaOperator({t});
}

// theta^4 - z theta: MUM but fails the coupling condition.
ThetaOperator perturbed() {
  return ThetaOperator({Poly({Rational(0), Rational(0), Rational(0), Rational(0), Rational(1)}),
                        Poly({Rational(0), Rational(-1)})});
}

}  // namespace

TEST_CASE("coupling condition on the dz coefficients") {
  CHECK(condition22(theta_pow(4)).holds);
  CHECK(condition22(catalog_case("zeta4-op4").op.value()).holds);
  auto bad = condition22(perturbed());
  CHECK(!bad.holds);
  CHECK(!bad.residual.is_zero());
  // Cross-check: failing condition22 means the exterior square stays at order 6.
  CHECK(exterior_square(perturbed()).order() == 6);
}

TEST_CASE("mirror map for theta^s") {
  for (int s = 2; s <= 6; ++s) {
    auto basis = frobenius_basis(theta_pow(s), 12);
    MirrorData m = mirror_map(basis, 12);
    CHECK(m.q_over_z == PowerSeries::constant(1, 12));
    CHECK(m.z_over_q == PowerSeries::constant(1, 12));
    if (s >= 3) {
      PowerSeries k = yukawa(basis, m, 1, 12);
      CHECK(k == PowerSeries::constant(1, 12));
    }
  }
}

TEST_CASE("mirror map round trip") {
  auto basis = frobenius_basis(catalog_case("b").op.value(), 20);
  MirrorData m = mirror_map(basis, 20);
  PowerSeries q = m.q_over_z.shifted_up(1);
  PowerSeries z = m.z_over_q.shifted_up(1);
  CHECK(ps_compose(z, q) == PowerSeries::identity(20));
  CHECK(ps_compose(q, z) == PowerSeries::identity(20));
}

TEST_CASE("zeta(4) mirror map cubes") {
  auto basis = frobenius_basis(catalog_case("zeta4-op5").op.value(), 12);
  MirrorData m = mirror_map(basis, 12);
  CHECK(all_integral(m.q_over_z));
  auto cbrt = ps_nth_root(m.q_over_z, 3);
  CHECK(cbrt.integral);
  CHECK(cbrt.root[1] == 15);
  CHECK(cbrt.root[2] == 1145);
  auto inv_cbrt = ps_nth_root(m.z_over_q, 3);
  CHECK(inv_cbrt.integral);
  CHECK(inv_cbrt.root[1] == -15);
  CHECK(inv_cbrt.root[2] == -245);
  CHECK(inv_cbrt.root[3] == -20138);
  CHECK(inv_cbrt.root[4] == -2043703);
}

TEST_CASE("zeta35-op6 mirror map and weight-2 numbers") {
  const ThetaOperator& op = catalog_case("zeta35-op6").op.value();
  CHECK(is_mum(op));
  CHECK(op.order() == 6);
  auto pc = pseudo_coupling(op, 12);
  const PowerSeries z_of_q = pc.mirror.z_over_q.shifted_up(1);
  CHECK(z_of_q[1] == 1);
  CHECK(z_of_q[2] == 230);
  CHECK(z_of_q[3] == -26827);
  CHECK(z_of_q[4] == 24147708);
  CHECK(z_of_q[5] == Rational(Int("-23334210874")));
  CHECK(z_of_q[6] == Rational(Int("26542920855790")));
  CHECK(z_of_q[7] == Rational(Int("-33500728089853156")));
  CHECK(z_of_q[8] == Rational(Int("45492345805504886104")));

  REQUIRE(pc.lambert.n.size() >= 5);
  CHECK(pc.lambert.n[0] == -320);
  CHECK(pc.lambert.n[1] == 118264);
  CHECK(pc.lambert.n[2] == -84117876);
  CHECK(pc.lambert.n[3] == Rational(Int("80349364184")));
  CHECK(pc.lambert.n[4] == Rational(Int("-90632838175404")));
}

TEST_CASE("yukawa via a3 agrees with the Wronskian formula") {
  for (const char* id : {"zeta4-op4", "hyp-quintic-op4"}) {
    const ThetaOperator& op = catalog_case(id).op.value();
    auto basis = frobenius_basis(op, 25);
    MirrorData m = mirror_map(basis, 25);
    PowerSeries k1 = yukawa(basis, m, 1, 25);
    PowerSeries k2 = yukawa_via_a3(op, basis, m, 25);
    CHECK(k1 == k2);
  }
  // theta^4: both routes give the constant coupling.
  auto basis = frobenius_basis(theta_pow(4), 10);
  MirrorData m = mirror_map(basis, 10);
  CHECK(yukawa_via_a3(theta_pow(4), basis, m, 10) == PowerSeries::constant(1, 10));
}

TEST_CASE("case #9* instanton numbers") {
  const ThetaOperator& op = catalog_case("case9star").op.value();
  CHECK(is_mum(op));
  CHECK(condition22(op).holds);
  auto basis = frobenius_basis(op, 8);
  MirrorData m = mirror_map(basis, 8);
  PowerSeries k = yukawa(basis, m, 1, 8);
  LambertSeries l = lambert_decompose(k, 3);
  REQUIRE(l.n.size() >= 3);
  CHECK(l.n[0] == -480);
  CHECK(l.n[1] == -226848);
  CHECK(l.n[2] == 16034720);
}

TEST_CASE("(k)*(m) coupling after q -> q/3") {
  const ThetaOperator& op = catalog_case("had-km").op.value();
  CHECK(is_mum(op));
  CHECK(condition22(op).holds);
  auto basis = frobenius_basis(op, 8);
  MirrorData m = mirror_map(basis, 8);
  PowerSeries k = yukawa(basis, m, 1, 8);
  CHECK(yukawa_via_a3(op, basis, m, 8) == k);
  PowerSeries kt = rescale_coupling(k, rat(1, 3), 1);
  LambertSeries l = lambert_decompose(kt, 3);
  REQUIRE(l.n.size() >= 5);
  CHECK(l.all_integral());
  CHECK(l.n[0] == -48);
  CHECK(l.n[1] == -426);
  CHECK(l.n[2] == -2864);
  CHECK(l.n[3] == 77958);
  CHECK(l.n[4] == 4942032);
}

TEST_CASE("lambert decomposition") {
  // Constant coupling.
  LambertSeries l = lambert_decompose(PowerSeries::constant(1, 10), 3);
  CHECK(l.n0 == 1);
  for (const auto& v : l.n) CHECK(v == 0);

  // Single Lambert term: 1 + q/(1-q).
  PowerSeries c = PowerSeries::geometric(10);
  l = lambert_decompose(c, 3);
  CHECK(l.n0 == 1);
  CHECK(l.n[0] == 1);
  for (size_t i = 1; i < l.n.size(); ++i) CHECK(l.n[i] == 0);

  // Reconstruction round-trips on pseudo-random integer data.
  PowerSeries r(12);
  r.set(0, 7);
  for (int n = 1; n <= 12; ++n) r.set(n, Rational((n * 37 + 11) % 23 - 9));
  for (int w : {1, 2, 3}) {
    LambertSeries d = lambert_decompose(r, w);
    CHECK(lambert_reconstruct(d, 12) == r);
  }
}

TEST_CASE("lambert in z") {
  // f = 1/(1-z): C_n = 1 for n >= 1, so L_1 = 1 and the rest vanish.
  LambertSeries l = lambert_in_z(PowerSeries::geometric(10), 3);
  CHECK(l.n[0] == 1);
  for (size_t i = 1; i < l.n.size(); ++i) CHECK(l.n[i] == 0);

  LambertSeries k = lambert_in_z(PowerSeries::constant(5, 8), 2);
  for (const auto& v : k.n) CHECK(v == 0);
}

TEST_CASE("Wronskian identity of order-4 bases") {
  CHECK(prop2_check(frobenius_basis(theta_pow(4), 10)));
  CHECK(prop2_check(frobenius_basis(catalog_case("zeta4-op4").op.value(), 30)));
  CHECK(!prop2_check(frobenius_basis(perturbed(), 10)));
}

TEST_CASE("rescale coupling") {
  PowerSeries one = PowerSeries::constant(1, 9);
  CHECK(rescale_coupling(one, rat(5, 7), 1) == one);
  CHECK(rescale_coupling(one, rat(5, 7), 3) == PowerSeries::constant(1, 3));

  PowerSeries k(6);
  k.set(0, 1);
  k.set(2, 10);
  k.set(4, 100);
  PowerSeries r = rescale_coupling(k, rat(1, 3), 2);
  CHECK(r[0] == 1);
  CHECK(r[1] == rat(10, 3));
  CHECK(r[2] == rat(100, 9));
  k.set(3, 1);
  CHECK_THROWS_AS(rescale_coupling(k, rat(1, 3), 2), FractionalPowersPresent);
}

TEST_CASE("auto n0 picks the denominator lcm") {
  LambertSeries l;
  l.weight = 3;
  l.n0 = 1;
  l.n = {rat(3, 61), rat(5, 61), rat(7, 1)};
  auto n0 = auto_n0(l);
  REQUIRE(n0.has_value());
  CHECK(*n0 == 61);
}

TEST_CASE("case #14*: coupling after q -> (q/3)^(1/2)") {
  const ThetaOperator& op = catalog_case("case14star").op.value();
  auto basis = frobenius_basis(op, 10);
  MirrorData m = mirror_map(basis, 10);
  PowerSeries k = yukawa(basis, m, 1, 10);
  PowerSeries kt = rescale_coupling(k, rat(1, 3), 2);
  LambertSeries l = lambert_decompose(kt, 3);
  CHECK(l.n[0] == -2592);
  CHECK(l.n[1] == -307800);
  CHECK(l.n[2] == 81451104);
}

TEST_CASE("case #9* power structure and deeper instanton numbers") {
  auto basis = frobenius_basis(catalog_case("case9star").op.value(), 12);
  auto r8 = ps_nth_root(basis[0].analytic(), 8);
  CHECK(r8.integral);
  CHECK(r8.root[1] == 246);
  CHECK(r8.root[2] == 768132);
  MirrorData m = mirror_map(basis, 12);
  auto r288 = ps_nth_root(m.q_over_z, 288);
  CHECK(r288.integral);
  CHECK(r288.root[1] == 12);
  CHECK(r288.root[2] == 33333);

  PowerSeries k = yukawa(basis, m, 1, 12);
  CHECK(yukawa_via_a3(catalog_case("case9star").op.value(), basis, m, 12) == k);
  LambertSeries l = lambert_decompose(k, 3);
  CHECK(l.n[3] == Rational(Int("10943202744")));
  CHECK(l.n[4] == Rational(Int("4352645747040")));

  // #9** carries the same coupling up to q -> -q.
  auto b2 = frobenius_basis(catalog_case("case9starstar").op.value(), 12);
  MirrorData m2 = mirror_map(b2, 12);
  CHECK(yukawa(b2, m2, 1, 12) == k.dilated(-1));
}

TEST_CASE("guillera pullback instanton numbers") {
  auto numbers = [](const char* id) {
    auto b = frobenius_basis(catalog_case(id).op.value(), 7);
    MirrorData m = mirror_map(b, 7);
    return lambert_decompose(yukawa(b, m, 1, 7), 3);
  };
  LambertSeries g1 = numbers("guillera1-op4");
  CHECK(g1.n[0] == 2710944);
  CHECK(g1.n[1] == Rational(Int("-717640978896")));
  CHECK(g1.n[2] == Rational(Int("302270555492914464")));
  LambertSeries g2 = numbers("guillera2-op4");
  CHECK(g2.n[0] == -2710944);
  CHECK(g2.n[1] == Rational(Int("-717640301160")));
}

TEST_CASE("both coupling routes agree on every order-4 catalog case") {
  for (const auto& c : catalog()) {
    if (!c.has_operator()) continue;
    ThetaOperator op = c.op->canonical();
    if (op.order() != 4 || !is_mum(op)) continue;
    if (!condition22(op).holds) continue;
    int order = (c.id.rfind("guillera", 0) == 0) ? 12 : 25;
    auto basis = frobenius_basis(op, order);
    MirrorData m = mirror_map(basis, order);
    CHECK(yukawa(basis, m, 1, order) == yukawa_via_a3(op, basis, m, order));
  }
}

TEST_CASE("second coupling identity: order-3 quotient is t times the order-2 one") {
  for (const char* id : {"zeta4-op4", "case9star"}) {
    auto basis = frobenius_basis(catalog_case(id).op.value(), 18);
    const PowerSeries y0 = basis[0].analytic();
    LogSeries t1 = basis[1].divided_by(y0);
    LogSeries t2 = basis[2].divided_by(y0);
    LogSeries t3 = basis[3].divided_by(y0);
    auto bracket = [](const LogSeries& u, const LogSeries& v) {
      return ls_theta(u) * ls_theta(ls_theta(v)) - ls_theta(ls_theta(u)) * ls_theta(v);
    };
    CHECK(bracket(t1, t3) == t1 * bracket(t1, t2));
  }
}

TEST_CASE("pullback integrality profile") {
  // The zeta(4) pullback: y0 is not in Z[[z]], yet z(q) and K(q) are, and
  // the Lambert numbers are negative integers once N0 absorbs the
  // denominator lcm (N0 = 4 here; with N0 = 1 the entries at l = 2, 6, 14
  // carry a denominator 4).
  auto basis = frobenius_basis(catalog_case("zeta4-op4").op.value(), 16);
  CHECK(!all_integral(basis[0].analytic()));
  MirrorData m = mirror_map(basis, 16);
  CHECK(all_integral(m.z_over_q));
  PowerSeries k = yukawa(basis, m, 1, 16);
  CHECK(all_integral(k));
  auto n0 = auto_n0(lambert_decompose(k, 3));
  REQUIRE(n0.has_value());
  CHECK(*n0 == 4);
  LambertSeries l = lambert_decompose(k.scaled(Rational(*n0)), 3);
  CHECK(l.all_integral());
  for (const auto& v : l.n) CHECK(sgn(v) < 0);  // N_l / N_0 < 0 throughout
}
