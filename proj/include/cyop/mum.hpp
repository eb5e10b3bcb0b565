#pragma once

#include <optional>

#include "cyop/frobenius.hpp"
#include "cyop/theta_op.hpp"

namespace cyop {

/// Mirror map data: t_series = t - log z (analytic), q(z)/z and z(q)/q (both
/// with constant term 1).
struct MirrorData {
  PowerSeries t_series;
  PowerSeries q_over_z;
  PowerSeries z_over_q;

  PowerSeries q_of_z() const { return q_over_z.shifted_up(1); }
  PowerSeries z_of_q() const { return z_over_q.shifted_up(1); }
};

/// Lambert decomposition N_0 + sum_l N_l l^w q^l/(1-q^l).
struct LambertSeries {
  int weight = 3;
  Rational n0;
  std::vector<Rational> n;  // n[0] = N_1

  bool all_integral() const;
  int first_noninteger_index() const;  // 0 if none
  std::vector<Int> denominator_prime_support() const;
};

struct Condition22Result {
  bool holds;
  RationalFunction residual;  // a1 minus the coupling combination; zero iff holds
};

/// Exact rational-function test of a1 = 1/2 a2 a3 - 1/8 a3^3 + a2' - 3/4 a3 a3' - 1/2 a3''.
Condition22Result condition22(const ThetaOperator& op4);

MirrorData mirror_map(const std::vector<LogSeries>& basis, int N);

/// Coupling d^2/dt^2 (y_k/y_0) as a series in z (the Wronskian-quotient
/// formula), with t = y_1/y_0. k = 2 gives the Yukawa/pseudo-coupling source.
PowerSeries coupling_in_z(const std::vector<LogSeries>& basis, int k = 2);

/// K(q) = N0 * d^2/dt^2 (y_2/y_0) composed with z(q).
PowerSeries yukawa(const std::vector<LogSeries>& basis, const MirrorData& mirror, const Rational& n0, int N);

/// K(q) via the first identity of (2.3): exp(-1/2 int a3)/(y0^2 (dt/dz)^3),
/// composed with z(q). Must agree with yukawa() whenever defined.
PowerSeries yukawa_via_a3(const ThetaOperator& op4, const std::vector<LogSeries>& basis,
                          const MirrorData& mirror, int N);

/// Moebius function.
int moebius(long n);

/// N_0 = C_0; N_l = l^{-w} sum_{d|l} mu(l/d) C_d.
LambertSeries lambert_decompose(const PowerSeries& c, int weight);
/// Reconstruction C_n = N_0 + sum_{l|n} N_l l^w (n >= 1).
PowerSeries lambert_reconstruct(const LambertSeries& l, int order);
/// Lambert expansion of f - f(0) in the z variable.
LambertSeries lambert_in_z(const PowerSeries& f, int weight);

/// Smallest positive integer multiplier making N_1..N_lmax integral, if one
/// exists not exceeding `bound`.
std::optional<Int> auto_n0(const LambertSeries& base, const Int& bound = 1000000);

/// W(y0,y3) - W(y1,y2) = 0 for order-4 MUM bases under condition22.
bool prop2_check(const std::vector<LogSeries>& basis);

/// K(cq) for m = 1; K((cq)^{1/m}) for m > 1 (requires support on multiples
/// of m): output_n = input_{mn} c^n.
PowerSeries rescale_coupling(const PowerSeries& k, const Rational& c, int m);

}  // namespace cyop
