#pragma once

#include <optional>
#include <string_view>

#include "qvitali/rational.hpp"

namespace qvitali {

/// The deformation parameter q, restricted to exact rationals q <= 1.
///
/// For q < 1 the q-domain is the half line (lambda, +inf) with
/// lambda = -1/(1-q). At q = 1 there is no boundary and every deformed
/// operation takes its classical branch.
class QParam {
public:
  // Throws DomainError when q > 1.
  explicit QParam(Rational q);
  // Parses an exact literal ("1/2", "0.75"); throws DomainError for q > 1 and
  // std::invalid_argument for malformed text.
  static QParam parse(std::string_view text);

  const Rational& q() const { return q_; }
  bool is_classical() const { return !lambda_.has_value(); }
  // -1/(1-q); empty at q = 1.
  const std::optional<Rational>& lambda() const { return lambda_; }

  // 1 - q, exact and converted to double.
  const Rational& one_minus_q() const { return one_minus_q_; }
  double one_minus_q_d() const { return one_minus_q_d_; }
  double q_d() const { return q_d_; }
  // lambda as a double, -inf at q = 1.
  double lambda_d() const;

  // x > lambda (always true at q = 1).
  bool in_domain(const Rational& x) const;
  bool in_domain(double x) const;

  friend bool operator==(const QParam& a, const QParam& b) { return a.q_ == b.q_; }

private:
  Rational q_;
  Rational one_minus_q_;
  std::optional<Rational> lambda_;
  double one_minus_q_d_;
  double q_d_;
};

} // namespace qvitali
