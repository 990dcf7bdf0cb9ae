#include "qvitali/qparam.hpp"

#include <limits>

#include "qvitali/errors.hpp"

namespace qvitali {

QParam::QParam(Rational q) : q_(std::move(q)) {
  if (q_ > Rational(1)) {
    throw DomainError("q must satisfy q <= 1, got " + q_.str());
  }
  one_minus_q_ = Rational(1) - q_;
  if (!one_minus_q_.is_zero()) lambda_ = Rational(-1) / one_minus_q_;
  one_minus_q_d_ = one_minus_q_.to_double();
  q_d_ = q_.to_double();
}

QParam QParam::parse(std::string_view text) { return QParam(Rational::parse(text)); }

double QParam::lambda_d() const {
  return lambda_ ? lambda_->to_double() : -std::numeric_limits<double>::infinity();
}

bool QParam::in_domain(const Rational& x) const { return !lambda_ || x > *lambda_; }

bool QParam::in_domain(double x) const {
  // 1 + (1-q) x > 0 is the same condition without rounding lambda.
  return !lambda_ || 1.0 + one_minus_q_d_ * x > 0.0;
}

} // namespace qvitali
