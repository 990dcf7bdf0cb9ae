#pragma once

#include "qvitali/qparam.hpp"
#include "qvitali/rational.hpp"

/// Deformed arithmetic of the nonextensive q-algebra.
///
/// The q-sum and q-difference map rationals to rationals when q is rational,
/// so they have exact overloads; the q-product, q-division, q-exponential and
/// q-logarithm involve fractional powers and are binary64 only. The cutoff
/// [A]_+ = max(A, 0) yields 0 as an ordinary value, never an error.
///
/// At q = 1 each function takes an explicit classical branch.
namespace qvitali {

// x + y + (1-q) x y
Rational q_sum(const Rational& x, const Rational& y, const QParam& q);
double q_sum(double x, double y, const QParam& q);

// (x - y) / (1 + (1-q) y); throws SingularOperand when the denominator is 0.
Rational q_diff(const Rational& x, const Rational& y, const QParam& q);
double q_diff(double x, double y, const QParam& q);

// The q-additive inverse -r / (1 + (1-q) r), so that q_sum(r, q_neg(r)) == 0.
Rational q_neg(const Rational& r, const QParam& q);

// [x^(1-q) + y^(1-q) - 1]_+^(1/(1-q)); x, y > 0 else DomainError.
double q_prod(double x, double y, const QParam& q);
// [x^(1-q) - y^(1-q) + 1]_+^(1/(1-q)); x, y > 0 else DomainError.
double q_div(double x, double y, const QParam& q);

// [1 + (1-q) x]_+^(1/(1-q)).
double q_exp(double x, const QParam& q);
// (x^(1-q) - 1) / (1-q); x > 0 else DomainError.
double q_log(double x, const QParam& q);

// Whether the [.]_+ cutoff clamps the result to 0.
bool q_exp_cutoff(double x, const QParam& q);
bool q_prod_cutoff(double x, double y, const QParam& q);
bool q_div_cutoff(double x, double y, const QParam& q);

/// Deformed number x_q = ln(e_q(x)) = log1p((1-q) x) / (1-q).
///
/// The rational overload forms (1-q) x exactly before the single rounding
/// into log1p, which keeps the relative error near machine precision even
/// as q -> 1. Throws DomainError unless x > lambda.
double deformed(const Rational& x, const QParam& q);
double deformed(double x, const QParam& q);

// expm1((1-q) u) / (1-q), the inverse of deformed().
double deformed_inv(double u, const QParam& q);

} // namespace qvitali
