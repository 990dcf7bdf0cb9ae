#include "qvitali/qalgebra.hpp"

#include <cmath>

#include "qvitali/errors.hpp"

namespace qvitali {

namespace {

void require_positive(double x, double y, const char* op) {
  if (!(x > 0.0) || !(y > 0.0)) {
    throw DomainError(std::string(op) + " requires positive operands");
  }
}

// [base]_+^(1/(1-q)) for q < 1.
double cutoff_power(double base, const QParam& q) {
  if (!(base > 0.0)) return 0.0;
  return std::exp(std::log(base) / q.one_minus_q_d());
}

} // namespace

Rational q_sum(const Rational& x, const Rational& y, const QParam& q) {
  if (q.is_classical()) return x + y;
  return x + y + q.one_minus_q() * x * y;
}

double q_sum(double x, double y, const QParam& q) {
  if (q.is_classical()) return x + y;
  return x + y + q.one_minus_q_d() * x * y;
}

Rational q_diff(const Rational& x, const Rational& y, const QParam& q) {
  if (q.is_classical()) return x - y;
  const Rational denom = Rational(1) + q.one_minus_q() * y;
  if (denom.is_zero()) {
    throw SingularOperand("q-difference undefined: 1 + (1-q)y = 0 at y = " + y.str());
  }
  return (x - y) / denom;
}

double q_diff(double x, double y, const QParam& q) {
  if (q.is_classical()) return x - y;
  const double denom = 1.0 + q.one_minus_q_d() * y;
  if (denom == 0.0) throw SingularOperand("q-difference undefined: 1 + (1-q)y = 0");
  return (x - y) / denom;
}

Rational q_neg(const Rational& r, const QParam& q) {
  if (q.is_classical()) return -r;
  const Rational denom = Rational(1) + q.one_minus_q() * r;
  if (denom.is_zero()) {
    throw SingularOperand("q-negation undefined: 1 + (1-q)r = 0 at r = " + r.str());
  }
  return -r / denom;
}

double q_prod(double x, double y, const QParam& q) {
  require_positive(x, y, "q-product");
  if (q.is_classical()) return x * y;
  const double a = q.one_minus_q_d();
  return cutoff_power(std::pow(x, a) + std::pow(y, a) - 1.0, q);
}

double q_div(double x, double y, const QParam& q) {
  require_positive(x, y, "q-division");
  if (q.is_classical()) return x / y;
  const double a = q.one_minus_q_d();
  return cutoff_power(std::pow(x, a) - std::pow(y, a) + 1.0, q);
}

bool q_prod_cutoff(double x, double y, const QParam& q) {
  require_positive(x, y, "q-product");
  if (q.is_classical()) return false;
  const double a = q.one_minus_q_d();
  return !(std::pow(x, a) + std::pow(y, a) - 1.0 > 0.0);
}

bool q_div_cutoff(double x, double y, const QParam& q) {
  require_positive(x, y, "q-division");
  if (q.is_classical()) return false;
  const double a = q.one_minus_q_d();
  return !(std::pow(x, a) - std::pow(y, a) + 1.0 > 0.0);
}

double q_exp(double x, const QParam& q) {
  if (q.is_classical()) return std::exp(x);
  if (q_exp_cutoff(x, q)) return 0.0;
  return std::exp(std::log1p(q.one_minus_q_d() * x) / q.one_minus_q_d());
}

bool q_exp_cutoff(double x, const QParam& q) {
  return !q.is_classical() && !(q.one_minus_q_d() * x > -1.0);
}

double q_log(double x, const QParam& q) {
  if (!(x > 0.0)) throw DomainError("q-logarithm requires x > 0");
  if (q.is_classical()) return std::log(x);
  return std::expm1(q.one_minus_q_d() * std::log(x)) / q.one_minus_q_d();
}

double deformed(const Rational& x, const QParam& q) {
  if (q.is_classical()) return x.to_double();
  if (!q.in_domain(x)) {
    throw DomainError("deformed number undefined: " + x.str() + " <= lambda = " + q.lambda()->str());
  }
  const Rational t = q.one_minus_q() * x;
  // Near lambda, 1 + t is tiny; form it exactly rather than rounding t first.
  if (t < Rational(-1, 2)) return std::log((Rational(1) + t).to_double()) / q.one_minus_q_d();
  return std::log1p(t.to_double()) / q.one_minus_q_d();
}

double deformed(double x, const QParam& q) {
  if (q.is_classical()) return x;
  if (!q.in_domain(x)) throw DomainError("deformed number undefined below lambda");
  return std::log1p(q.one_minus_q_d() * x) / q.one_minus_q_d();
}

double deformed_inv(double u, const QParam& q) {
  if (q.is_classical()) return u;
  return std::expm1(q.one_minus_q_d() * u) / q.one_minus_q_d();
}

} // namespace qvitali
