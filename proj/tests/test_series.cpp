#include <random>

#include "cyop/log_series.hpp"
#include "cyop/series.hpp"
#include "doctest.h"

using namespace cyop;

namespace {

PowerSeries from_longs(std::initializer_list<long> v) {
  std::vector<Rational> c;
  for (long x : v) c.emplace_back(x);
  return PowerSeries(std::move(c));
}

PowerSeries random_series(std::mt19937& rng, int order, bool unit_constant) {
  std::uniform_int_distribution<long> num(-9, 9);
  std::uniform_int_distribution<long> den(1, 7);
  PowerSeries f(order);
  for (int n = 0; n <= order; ++n) f.set(n, rat(num(rng), den(rng)));
  if (unit_constant) f.set(0, 1);
  return f;
}

}  // namespace

TEST_CASE("multiplication") {
  PowerSeries a = from_longs({1, 1, 0, 0});
  PowerSeries b = from_longs({1, -1, 0, 0});
  CHECK(ps_mul(a, b) == from_longs({1, 0, -1, 0}));

  PowerSeries geo = PowerSeries::geometric(10);
  PowerSeries one_minus = from_longs({1, -1, 0, 0, 0, 0, 0, 0, 0, 0, 0});
  CHECK(ps_mul(geo, one_minus) == PowerSeries::constant(1, 10));

  // Head of the zeta(4) w0 series, squared by hand.
  PowerSeries w0 = from_longs({1, 12, 804});
  CHECK(ps_mul(w0, w0) == from_longs({1, 24, 1752}));
}

TEST_CASE("reciprocal") {
  CHECK(ps_reciprocal(from_longs({1, -1, 0, 0, 0})) == PowerSeries::geometric(4));
  CHECK(ps_reciprocal(PowerSeries::constant(1, 6)) == PowerSeries::constant(1, 6));

  PowerSeries w0 = from_longs({1, 12, 804});
  PowerSeries r = ps_reciprocal(w0);
  CHECK(r == from_longs({1, -12, -660}));
  CHECK(ps_mul(w0, r) == PowerSeries::constant(1, 2));

  CHECK_THROWS_AS(ps_reciprocal(from_longs({0, 1})), ZeroConstantTerm);
}

TEST_CASE("exp and log") {
  PowerSeries e = ps_exp(PowerSeries::identity(6));
  for (int n = 0; n <= 6; ++n) CHECK(e[n] == Rational(Int(1), factorial(n)));

  PowerSeries l = ps_log(from_longs({1, 1, 0, 0, 0}));
  CHECK(l == PowerSeries({Rational(0), Rational(1), rat(-1, 2), rat(1, 3), rat(-1, 4)}));

  PowerSeries f = from_longs({1, 3, 5, 0, 0, 0});
  CHECK(ps_exp(ps_log(f)) == f);

  CHECK_THROWS_AS(ps_exp(PowerSeries::constant(1, 3)), BadConstantTerm);
  CHECK_THROWS_AS(ps_log(from_longs({2, 1})), BadConstantTerm);
}

TEST_CASE("composition") {
  PowerSeries f = from_longs({0, 1, 1});
  PowerSeries g = from_longs({0, 2, 0});
  CHECK(ps_compose(f, g) == from_longs({0, 2, 4}));

  std::mt19937 rng(7);
  PowerSeries h = random_series(rng, 8, false);
  CHECK(ps_compose(h, PowerSeries::identity(8)) == h);

  // 1/(1 - z/(1+z)) = 1 + z.
  PowerSeries inner = ps_mul(PowerSeries::identity(10), ps_reciprocal(from_longs({1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0})));
  PowerSeries composed = ps_compose(PowerSeries::geometric(10), inner);
  PowerSeries expect(10);
  expect.set(0, 1);
  expect.set(1, 1);
  CHECK(composed == expect);

  CHECK_THROWS_AS(ps_compose(f, from_longs({1, 1})), NonzeroInnerConstant);
}

TEST_CASE("reversion") {
  CHECK(ps_revert(PowerSeries::identity(5)) == PowerSeries::identity(5));

  // z - z^2 reverts to the Catalan generating head.
  PowerSeries f = from_longs({0, 1, -1, 0, 0, 0});
  CHECK(ps_revert(f) == from_longs({0, 1, 1, 2, 5, 14}));

  CHECK_THROWS_AS(ps_revert(from_longs({1, 1})), NotInvertible);
  CHECK_THROWS_AS(ps_revert(from_longs({0, 0, 1})), NotInvertible);
}

TEST_CASE("nth root") {
  PowerSeries sq = from_longs({1, 2, 1, 0});
  auto r = ps_nth_root(sq, 2);
  CHECK(r.root == from_longs({1, 1, 0, 0}));
  CHECK(r.integral);

  auto half = ps_nth_root(from_longs({1, 1, 0, 0}), 2);
  CHECK(!half.integral);
  CHECK(half.root[1] == rat(1, 2));
}

TEST_CASE("derive and theta") {
  PowerSeries z2 = from_longs({0, 0, 1});
  CHECK(ps_derive(z2) == from_longs({0, 2}));
  PowerSeries geo = PowerSeries::geometric(8);
  PowerSeries th = ps_theta(geo);
  for (int n = 0; n <= 8; ++n) CHECK(th[n] == Rational(n));
  CHECK(ps_theta(PowerSeries::constant(1, 4)).is_zero());
}

TEST_CASE("round trips on random series") {
  std::mt19937 rng(20040216);
  for (int iter = 0; iter < 12; ++iter) {
    PowerSeries f = random_series(rng, 30, true);

    CHECK(ps_mul(f, ps_reciprocal(f)) == PowerSeries::constant(1, 30));

    PowerSeries g = f;
    g.set(0, 0);
    CHECK(ps_log(ps_exp(g)) == g);

    PowerSeries h = g;
    h.set(1, rat(1 + iter % 3));
    PowerSeries inv = ps_revert(h);
    CHECK(ps_compose(h, inv) == PowerSeries::identity(30));
    CHECK(ps_compose(inv, h) == PowerSeries::identity(30));

    for (long m : {2L, 3L, 5L}) {
      auto root = ps_nth_root(f, m);
      PowerSeries pw = PowerSeries::constant(1, 30);
      for (long i = 0; i < m; ++i) pw = ps_mul(pw, root.root);
      CHECK(pw == f);
    }
  }
}

TEST_CASE("log series arithmetic") {
  int N = 8;
  LogSeries logz = LogSeries::log_power(1, N);
  LogSeries th = ls_theta(logz);
  CHECK(th.is_log_free());
  CHECK(th.analytic() == PowerSeries::constant(1, N));

  // theta(log^2/2) = log z.
  CHECK(ls_theta(LogSeries::log_power(2, N)) == logz);

  // log^i/i! * log^j/j! = C(i+j,i) log^{i+j}/(i+j)!.
  LogSeries prod = LogSeries::log_power(1, N) * LogSeries::log_power(2, N);
  LogSeries expect = LogSeries::log_power(3, N).scaled(3);
  CHECK(prod == expect);

  LogSeries w = z_wronskian(LogSeries(PowerSeries::constant(1, N)), logz);
  CHECK(w.is_log_free());
  CHECK(w.analytic() == PowerSeries::constant(1, N));
}

TEST_CASE("theta is a derivation on log series") {
  std::mt19937 rng(97);
  std::uniform_int_distribution<long> num(-6, 6);
  std::uniform_int_distribution<long> den(1, 5);
  auto random_log_series = [&](int deg, int order) {
    std::vector<PowerSeries> parts;
    for (int j = 0; j <= deg; ++j) {
      PowerSeries p(order);
      for (int n = 0; n <= order; ++n) p.set(n, rat(num(rng), den(rng)));
      parts.push_back(p);
    }
    return LogSeries(std::move(parts));
  };
  for (int iter = 0; iter < 8; ++iter) {
    LogSeries f = random_log_series(iter % 4, 12);
    LogSeries g = random_log_series((iter + 2) % 4, 12);
    CHECK(ls_theta(f * g) == ls_theta(f) * g + f * ls_theta(g));
    // Wronskian antisymmetry.
    CHECK(z_wronskian(f, g) == -z_wronskian(g, f));
  }
}
