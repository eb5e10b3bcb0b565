#include "cyop/catalog.hpp"
#include "cyop/wronskian.hpp"
#include "doctest.h"

using namespace cyop;

namespace {

ThetaOperator theta_pow(int s) {
  Poly t(Rational(1));
  for (int i = 0; i < s; ++i) t *= Poly::x();
  return ThetaOperator({t});
}

ThetaOperator perturbed() {
  return ThetaOperator({Poly({Rational(0), Rational(0), Rational(0), Rational(0), Rational(1)}),
                        Poly({Rational(0), Rational(-1)})});
}

}  // namespace

TEST_CASE("exterior square of theta^4 is theta^5") {
  CHECK(exterior_square(theta_pow(4)) == theta_pow(5).canonical());
}

TEST_CASE("exterior square of the zeta4 pullback is the 5th-order operator") {
  CHECK(verify_prop5());
  CHECK(exterior_square(catalog_case("zeta4-op4").op.value()) == catalog_case("zeta4-op5").op.value());

  // Negative control: a corrupted pullback must not reproduce (4.1).
  DzOperator dz = theta_to_dz(catalog_case("zeta4-op4").op.value());
  dz.a[2] = dz.a[2] + RationalFunction(Rational(1));
  ThetaOperator corrupted = dz_to_theta(dz);
  CHECK(!(exterior_square(corrupted) == catalog_case("zeta4-op5").op.value()));
}

TEST_CASE("order-6 exterior square annihilates all Wronskian pairs") {
  ThetaOperator op = perturbed();
  ThetaOperator ext = exterior_square(op);
  CHECK(ext.order() == 6);
  auto basis = frobenius_basis(op, 25);
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) {
      LogSeries w = z_wronskian(basis[i], basis[j]);
      CHECK(apply(ext, w).is_zero());
    }
}

TEST_CASE("w-basis closed form for theta^4") {
  auto w = w_basis(frobenius_basis(theta_pow(4), 10));
  for (int j = 0; j < 5; ++j) CHECK(w[j] == LogSeries::log_power(j, 10));
}

TEST_CASE("w-basis of the pullback equals the direct Frobenius basis") {
  auto b4 = frobenius_basis(catalog_case("zeta4-op4").op.value(), 30);
  auto w = w_basis(b4);
  CHECK(w[0].analytic()[0] == 1);
  CHECK(w[0].analytic()[1] == 12);
  CHECK(w[0].analytic()[2] == 804);

  // Both formulas for w2 agree (Prop 4).
  CHECK(z_wronskian(b4[0], b4[3]) == z_wronskian(b4[1], b4[2]));

  auto direct = frobenius_basis(catalog_case("zeta4-op5").op.value(), 30);
  for (int j = 0; j < 5; ++j) CHECK(w[j] == direct[j]);

  // Annihilated by the exterior square to full order.
  ThetaOperator ext = exterior_square(catalog_case("zeta4-op4").op.value());
  for (const auto& wj : w) CHECK(apply(ext, wj).is_zero());
}

TEST_CASE("Beukers relations") {
  // theta^5 log basis, k = 0: the log^4 coefficient identity 1/12-1/3+1/4 = 0.
  auto w5 = frobenius_basis(theta_pow(5), 8);
  auto r0 = beukers_check(w5, 0);
  CHECK(r0.zero);

  auto w = frobenius_basis(catalog_case("zeta4-op5").op.value(), 50);
  CHECK(beukers_check(w, 0).zero);
  CHECK(beukers_check(w, 1).zero);

  auto r2 = beukers_check(w, 2);
  CHECK(r2.log_free);
  CHECK(!r2.zero);
  CHECK(r2.nu_min == -4);
  // Integer c_{2,nu} against (9z)^nu from nu = -4 up to nu = 13; the window
  // is sharp (nu = 14 is the first non-integer; the residual is a rational
  // function, see the structure check below).
  CHECK(r2.c_nu.at(0) == 6561);  // c_{2,-4} = 9^4
  for (int nu = -4; nu <= 13; ++nu) CHECK(is_integer(r2.c_nu.at(nu - r2.nu_min)));
  CHECK(!is_integer(r2.c_nu.at(14 - r2.nu_min)));

  // Structure: z^4 * residual * (1 - 270z - 27z^2) is the constant 1.
  PowerSeries sing(50);
  sing.set(0, 1);
  sing.set(1, -270);
  sing.set(2, -27);
  CHECK(ps_mul(r2.scaled_residual, sing) == PowerSeries::constant(1, 50));

  auto r3 = beukers_check(w, 3);
  CHECK(r3.log_free);
  CHECK(r3.nu_min == -6);
  for (int nu = -6; nu <= 15; ++nu) CHECK(is_integer(r3.c_nu.at(nu - r3.nu_min)));

  // The theta^5 log basis at k = 2 gives exactly z^-4, i.e. 9^4 (9z)^-4.
  auto t2 = beukers_check(frobenius_basis(theta_pow(5), 8), 2);
  CHECK(t2.scaled_residual == PowerSeries::constant(1, 8));
}

TEST_CASE("pseudo-coupling of theta^5 is constant") {
  auto pc = pseudo_coupling(theta_pow(5), 10);
  CHECK(pc.k_of_q == PowerSeries::constant(1, 10));
}

TEST_CASE("pseudo-coupling of zeta4-op5 has positive integer N~") {
  auto pc = pseudo_coupling(catalog_case("zeta4-op5").op.value(), 17);
  REQUIRE(pc.lambert.n.size() >= 15);
  for (int l = 0; l < 15; ++l) {
    CHECK(is_integer(pc.lambert.n[l]));
    CHECK(sgn(pc.lambert.n[l]) > 0);
  }
}

TEST_CASE("Lambert numbers of 2*w0 are positive integers") {
  Sequence a = catalog_y0("zeta4-op5", 16);
  PowerSeries w0(16);
  for (int n = 0; n <= 16; ++n) w0.set(n, a[n]);
  LambertSeries l = lambert_in_z(w0.scaled(2), 3);
  REQUIRE(l.n.size() >= 15);
  for (int i = 0; i < 15; ++i) {
    CHECK(is_integer(l.n[i]));
    CHECK(sgn(l.n[i]) > 0);
  }
}

TEST_CASE("w0 is the square of an integer series") {
  Sequence a = catalog_y0("zeta4-op5", 40);
  PowerSeries w0(40);
  for (int n = 0; n <= 40; ++n) w0.set(n, a[n]);
  auto r = ps_nth_root(w0, 2);
  CHECK(r.integral);
  CHECK(r.root[1] == 6);
  CHECK(r.root[2] == 384);
  CHECK(r.root[3] == 42036);
  CHECK(r.root[4] == 5867226);
}

TEST_CASE("w-basis and Beukers relations across the order-4 catalog") {
  for (const auto& c : catalog()) {
    if (!c.has_operator()) continue;
    ThetaOperator op = c.op->canonical();
    if (op.order() != 4 || !is_mum(op)) continue;
    if (!condition22(op).holds) continue;
    int order = (c.id.rfind("guillera", 0) == 0) ? 12 : 20;
    ThetaOperator ext = exterior_square(op);
    CHECK(ext.order() == 5);
    auto w = w_basis(frobenius_basis(op, order));
    for (const auto& wj : w) CHECK(apply(ext, wj).is_zero());
    CHECK(beukers_check(w, 0).zero);
    CHECK(beukers_check(w, 1).zero);
  }
}
