#include "qvitali/vitali.hpp"

#include <cmath>
#include <numeric>

#include "qvitali/errors.hpp"
#include "qvitali/qalgebra.hpp"

namespace qvitali {

EquivWitness equiv_witness(const Rational& x, const Rational& y, const QParam& q) {
  return {q_diff(x, y, q)};
}

bool witnesses(const EquivWitness& w, const Rational& x, const Rational& y, const QParam& q) {
  return q_sum(y, w.r, q) == x;
}

Rational symmetry_witness(const Rational& r, const QParam& q) { return q_neg(r, q); }

Rational transitivity_witness(const Rational& r1, const Rational& r2, const QParam& q) {
  return q_sum(r2, r1, q);
}

Rational RationalEnumerator::next() {
  if (negative_pending_) {
    negative_pending_ = false;
    return Rational(-(num_ - 1), den_);
  }
  if (den_ == 1 && num_ == 0) {
    num_ = 1;
    return Rational(0);
  }
  // Next reduced positive numerator with num_ <= den_.
  while (true) {
    if (num_ > den_) {
      ++den_;
      num_ = 1;
    }
    if (std::gcd(num_, den_) == 1) break;
    ++num_;
  }
  Rational out(num_, den_);
  negative_pending_ = true;
  ++num_;
  return out;
}

std::vector<Rational> enumerate_rationals(std::size_t n) {
  if (n < 1) throw PreconditionViolation("enumeration length must be at least 1");
  RationalEnumerator e;
  std::vector<Rational> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back(e.next());
  return out;
}

namespace {

bool in_closed(const Rational& x, const Rational& lo, const Rational& hi) {
  return lo <= x && x <= hi;
}

} // namespace

Lemma1Report lemma1_checks(const Rational& v, const Rational& x, const Rational& r_k,
                           const Rational& r_l, const QParam& q) {
  const Rational zero(0), one(1);
  if (!in_closed(v, zero, one) || !in_closed(x, zero, one)) {
    throw PreconditionViolation("lemma 1 needs v, x in [0,1]");
  }
  if (!in_closed(r_k, -one, one) || !in_closed(r_l, -one, one)) {
    throw PreconditionViolation("lemma 1 needs r_k, r_l in [-1,1]");
  }
  if (q.q() < zero) throw PreconditionViolation("lemma 1 needs 0 <= q <= 1");

  Lemma1Report rep;
  // 1 + (1-q) v >= 1 here, so the witness is always defined.
  rep.witness = q_diff(x, v, q);
  rep.witness_in_range = in_closed(rep.witness, -one, one);

  rep.translate_k = q_sum(v, r_k, q);
  if (q.is_classical()) {
    rep.translate_in_domain = true;
  } else if (q.q().is_zero()) {
    rep.translate_in_domain = rep.translate_k >= *q.lambda();
  } else {
    rep.translate_in_domain = rep.translate_k > *q.lambda();
  }
  rep.translate_contained = in_closed(rep.translate_k, Rational(-2), Rational(3));

  rep.translate_l = q_sum(v, r_l, q);
  rep.injective = (r_k == r_l) == (rep.translate_k == rep.translate_l);
  return rep;
}

BoundsRow theorem_bounds(const QParam& q) {
  if (q.q() < Rational(1, 2)) {
    throw PreconditionViolation("bounds are defined for 1/2 <= q <= 1, got q = " + q.q().str());
  }
  BoundsRow row{q.q(), 0.0, {}};
  row.lower = measure_interval(Interval(Rational(0), Rational(1)), q).value();
  row.upper = measure_interval(Interval(Rational(-2), Rational(3)), q);
  return row;
}

std::vector<BoundsRow> divergence_scan(const std::vector<Rational>& eps_list) {
  std::vector<BoundsRow> rows;
  rows.reserve(eps_list.size());
  for (const auto& eps : eps_list) {
    if (eps.sign() <= 0) throw PreconditionViolation("eps must be positive, got " + eps.str());
    const Rational q = Rational(1, 2) + eps;
    if (q > Rational(1)) throw PreconditionViolation("1/2 + eps exceeds 1 for eps = " + eps.str());
    rows.push_back(theorem_bounds(QParam(q)));
  }
  return rows;
}

double lower_bound_half_limit() { return 2.0 * std::log(1.5); }

double published_half_limit() { return 3.0 * std::log(4.0 / 3.0); }

} // namespace qvitali
