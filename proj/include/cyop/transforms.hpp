#pragma once

#include <optional>

#include "cyop/mum.hpp"
#include "cyop/recurrence.hpp"

namespace cyop {

/// A_n^(+) and A_n^(-) of the a=b=c=d=1/2 specialization of the quadratic
/// transformations.
Rational quad_plus_seq(int n);
Rational quad_minus_seq(int n);

/// Expands both sides of the two quadratic transformations to
/// order N and returns the residual pair (zero when the identities hold).
std::pair<PowerSeries, PowerSeries> verify_quad_transform(const Rational& a, const Rational& b, const Rational& c,
                                                          const Rational& d, int N);

/// A_n -> sum_k p^{n-k} C(2n-2k, n-k) A_k, the u = sqrt(1-4pz) family.
Sequence prop7_transform_seq(const Sequence& a, const Rational& p);
/// Operator annihilating y/u for u with u'/u = h (rational); for the
/// sqrt(1-4pz) family pass h = -2p/(1-4pz).
ThetaOperator prop7_transform_op(const ThetaOperator& op, const RationalFunction& u_log_deriv);
ThetaOperator prop7_transform_op(const ThetaOperator& op, const Rational& p);

/// A_n -> sum_k p^{n-rk} C(n, rk) A_k.
Sequence prop8_transform(const Sequence& a, const Rational& p, int r);

/// Smallest-degree operator of the given order annihilating the sequence,
/// found by undetermined coefficients over z-degree <= max_zdeg.
std::optional<ThetaOperator> fit_operator(const std::vector<Rational>& a, int order, int max_zdeg);

/// theta^3 - z(2T+1)P + c z^2 (T+1)^3  ->  theta^4 - 2z(2T+1)^2 P + 4c z^2 (T+1)^2 (2T+1)(2T+3).
ThetaOperator central_binomial_lift(const ThetaOperator& op3);

struct SymmetricSquareRoot {
  bool is_symmetric_square;
  RationalFunction criterion_residual;
  ThetaOperator root;  // order 2, set when is_symmetric_square
};
SymmetricSquareRoot symmetric_square_criterion(const ThetaOperator& op3);
/// Throws NotASymmetricSquare when the criterion fails.
ThetaOperator symmetric_square_root(const ThetaOperator& op3);
/// Closed-form root for the factored third-order shape:
/// theta^2 - z(2a T^2 + a T + b/2) + c z^2 (T + 1/2)^2.
ThetaOperator prop9_root_closed_form(const Rational& a, const Rational& b, const Rational& c);

/// z -> c/z duality: top z-degree term proportional to (theta+1)^s or
/// (2 theta+1)^s decides the exponent shift.
ThetaOperator dualize(const ThetaOperator& op, const Rational& c);

}  // namespace cyop
