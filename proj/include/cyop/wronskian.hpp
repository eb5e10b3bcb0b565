#pragma once

#include "cyop/mum.hpp"

namespace cyop {

/// Operator annihilating w = z W(y, y~) for all solution pairs of op4.
/// Order 5 when condition22 holds, order 6 otherwise.
ThetaOperator exterior_square(const ThetaOperator& op4);

/// Frobenius basis of the exterior square via the closed Wronskian formulas:
/// w0 = zW(y0,y1), w1 = zW(y0,y2), w2 = zW(y0,y3) = zW(y1,y2),
/// w3 = zW(y1,y3)/2, w4 = zW(y2,y3)/2.
std::vector<LogSeries> w_basis(const std::vector<LogSeries>& basis4);

struct BeukersResult {
  bool log_free = false;
  bool zero = false;
  /// z^{2k} (2 w0^(k) w4^(k) - 2 w1^(k) w3^(k) + (w2^(k))^2), analytic part.
  /// The relation itself lives in z^{-2k} Q[[z]]: for the zeta(4) case and
  /// k >= 2 its expansion against powers of 9z starts at nu = -2k (for the
  /// theta^5 log basis at k = 2 it is exactly z^-4).
  PowerSeries scaled_residual;
  int nu_min = 0;  // = -2k
  /// c_nu[i] = scaled_residual[i] / (9z)^{nu_min + i} coefficientwise.
  std::vector<Rational> c_nu;
};

BeukersResult beukers_check(const std::vector<LogSeries>& w, int k);

struct PseudoCoupling {
  PowerSeries k_of_q;
  PowerSeries k_of_z;  // before composing with z(q)
  LambertSeries lambert;
  MirrorData mirror;
};

/// t = w1/w0, K~ = N0 d^2/dt^2 (w2/w0) composed with z(q), weight-2 Lambert.
PseudoCoupling pseudo_coupling(const ThetaOperator& op, int N, const Rational& n0 = 1);

/// exterior_square(zeta4-op4) equals zeta4-op5, canonically.
bool verify_prop5();

}  // namespace cyop
