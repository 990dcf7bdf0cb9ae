#include "qvitali/qcalculus.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "qvitali/errors.hpp"

namespace qvitali {

namespace {

constexpr double kSingularityGuard = 1e-12;

struct Panel {
  double a, fa, m, fm, b, fb, whole;
};

Panel make_panel(const RealFunction& g, double a, double fa, double b, double fb) {
  const double m = 0.5 * (a + b);
  const double fm = g(m);
  return {a, fa, m, fm, b, fb, (b - a) / 6.0 * (fa + 4.0 * fm + fb)};
}

void simpson(const RealFunction& g, const Panel& p, double tol, int depth, QuadratureResult& out) {
  const Panel left = make_panel(g, p.a, p.fa, p.m, p.fm);
  const Panel right = make_panel(g, p.m, p.fm, p.b, p.fb);
  const double delta = left.whole + right.whole - p.whole;
  // Halving tol eventually drops below what binary64 can resolve on this
  // panel; treat that as converged instead of recursing to max_depth.
  const double floor = 64.0 * std::numeric_limits<double>::epsilon() * std::abs(left.whole + right.whole);
  if (std::abs(delta) <= 15.0 * std::max(tol, floor)) {
    out.value += left.whole + right.whole + delta / 15.0;
    out.error_estimate += std::abs(delta) / 15.0;
    return;
  }
  if (depth <= 0 || !(left.m > p.a && right.m < p.b)) {
    out.value += left.whole + right.whole + delta / 15.0;
    out.error_estimate += std::abs(delta) / 15.0;
    out.converged = false;
    return;
  }
  simpson(g, left, 0.5 * tol, depth - 1, out);
  simpson(g, right, 0.5 * tol, depth - 1, out);
}

} // namespace

double q_derivative(const RealFunction& f, double x, const QParam& q, double h) {
  if (!q.in_domain(x)) throw DomainError("q-derivative point lies outside the q-domain");
  if (!(h > 0.0)) throw PreconditionViolation("finite-difference step must be positive");
  const double slope = (f(x + h) - f(x - h)) / (2.0 * h);
  return (1.0 + q.one_minus_q_d() * x) * slope;
}

QuadratureResult q_integrate(const RealFunction& f, double a, double b, const QParam& q,
                             const Quadrature& quad) {
  if (!(quad.abs_tol > 0.0) || quad.max_depth < 1) {
    throw PreconditionViolation("quadrature needs abs_tol > 0 and max_depth >= 1");
  }
  if (!q.is_classical() && !(a > q.lambda_d() + kSingularityGuard)) {
    throw DomainError("q-integral lower limit " + std::to_string(a) +
                      " is not inside the q-domain (lambda = " + q.lambda()->str() + ")");
  }
  if (a > b) throw PreconditionViolation("q-integral requires a <= b");

  QuadratureResult out;
  if (a == b) return out;

  const double c = q.one_minus_q_d();
  const RealFunction g = [&f, c](double x) { return f(x) / (1.0 + c * x); };
  const Panel whole = make_panel(g, a, g(a), b, g(b));
  simpson(g, whole, quad.abs_tol, quad.max_depth, out);
  return out;
}

} // namespace qvitali
