#pragma once

#include <functional>

#include "qvitali/qparam.hpp"

namespace qvitali {

using RealFunction = std::function<double(double)>;

inline constexpr double kDefaultDerivativeStep = 1e-6;

// (D_q f)(x) = (1 + (1-q) x) f'(x), with f' taken as the central difference
// (f(x+h) - f(x-h)) / 2h. Throws DomainError unless x > lambda and
// PreconditionViolation unless h > 0.
double q_derivative(const RealFunction& f, double x, const QParam& q,
                    double h = kDefaultDerivativeStep);

struct Quadrature {
  double abs_tol = 1e-10;
  int max_depth = 40;
};

struct QuadratureResult {
  double value = 0.0;
  // Sum of the local |S2 - S1| / 15 estimates.
  double error_estimate = 0.0;
  // False when some subinterval reached max_depth before meeting its share
  // of abs_tol; value is still the best available estimate.
  bool converged = true;
};

/// Adaptive Simpson approximation of the q-integral
///   int_a^b f(x) / (1 + (1-q) x) dx.
///
/// This evaluates the integrand directly and is used as an oracle for the
/// closed-form measures, so it must not call into qmeasure or deformed().
/// Lower endpoints within 1e-12 of lambda are rejected with DomainError (the
/// integral diverges at lambda).
QuadratureResult q_integrate(const RealFunction& f, double a, double b, const QParam& q,
                             const Quadrature& quad = {});

} // namespace qvitali
