#pragma once

#include "cyop/recurrence.hpp"

namespace cyop {

/// Order-2 recurrence in Meurman normal form A_{n+2} = P(n) A_{n+1} + Q(n) A_n
/// with rational-function P, Q.
struct NormalForm2 {
  RationalFunction p, q;
};

/// Normalizes an order-2 recurrence (3 terms) to the monic A_{n+2} shape.
NormalForm2 meurman_normal_form(const Recurrence& rec);

/// Meurman's discrete Wronskian composition: a 5-term recurrence for the
/// pointwise product C_n = A_n B_n.
Recurrence meurman_product(const Recurrence& rec_a, const Recurrence& rec_b);

/// The modified method for C_n = A_n^2 (4-term recurrence).
Recurrence meurman_square(const Recurrence& rec);

/// (theta^2 - zP - c z^2 (T+1)^2) * (theta^2 - zQ) = theta^4 - zPQ - c z^2 Q(T+1)Q(T).
ThetaOperator had_closed_2x2(const ThetaOperator& left, const ThetaOperator& right);

/// (theta^2 - Az(2T+1) - Bz^2 (T+1)^2)^(*2), the printed quartic-in-z formula.
ThetaOperator had_square_closed(const Rational& a, const Rational& b);

/// (theta^3 - z(2T+1)P - c z^2 (T+1)^3) * (theta^2 - zQ)
///   = theta^5 - z(2T+1)PQ - c z^2 (T+1) Q(T+1) Q(T).
ThetaOperator had_closed_2x3(const ThetaOperator& left, const ThetaOperator& right);

}  // namespace cyop
