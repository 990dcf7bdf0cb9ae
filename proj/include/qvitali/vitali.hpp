#pragma once

#include <cstdint>
#include <vector>

#include "qvitali/qmeasure.hpp"
#include "qvitali/qparam.hpp"
#include "qvitali/rational.hpp"

/// Computable content of the generalized Vitali construction.
///
/// The Vitali set itself (one representative per ~_q class) needs the Axiom
/// of Choice and is never materialized. What is checked here is the exact
/// witness algebra behind the proofs: x ~_q y iff x = y (+)_q r for a
/// rational r, the containment [0,1] within the union of translates within
/// [-2,3], and the bounds mu_q([0,1]) and mu_q([-2,3]).
namespace qvitali {

// r with x = y (+)_q r.
struct EquivWitness {
  Rational r;
  friend bool operator==(const EquivWitness&, const EquivWitness&) = default;
};

// r = (x - y) / (1 + (1-q) y). For rational inputs a witness always exists;
// throws SingularOperand when 1 + (1-q) y = 0.
EquivWitness equiv_witness(const Rational& x, const Rational& y, const QParam& q);
// q_sum(y, w.r) == x, exactly.
bool witnesses(const EquivWitness& w, const Rational& x, const Rational& y, const QParam& q);

// If x = y (+) r then y = x (+) symmetry_witness(r).
Rational symmetry_witness(const Rational& r, const QParam& q);
// (z (+) r2) (+) r1 = z (+) transitivity_witness(r1, r2).
Rational transitivity_witness(const Rational& r1, const Rational& r2, const QParam& q);

/// Enumerates Q intersect [-1,1] without repetition: denominators s = 1, 2, ...
/// and, within each s, reduced numerators by ascending |p| with +p before -p.
/// Starts 0, 1, -1, 1/2, -1/2, 1/3, -1/3, 2/3, -2/3, ...
class RationalEnumerator {
public:
  Rational next();

private:
  std::int64_t den_ = 1;
  std::int64_t num_ = 0;
  bool negative_pending_ = false;
};

std::vector<Rational> enumerate_rationals(std::size_t n);

struct Lemma1Report {
  Rational witness;          // (x - v) / (1 + (1-q) v)
  bool witness_in_range;     // -1 <= witness <= 1
  Rational translate_k;      // v (+) r_k
  bool translate_in_domain;  // lambda <= v (+) r_k, strict when q > 0
  bool translate_contained;  // -2 <= v (+) r_k <= 3
  Rational translate_l;      // v (+) r_l
  bool injective;            // r_k != r_l implies the translates differ

  bool all_hold() const {
    return witness_in_range && translate_in_domain && translate_contained && injective;
  }
};

// Requires v, x in [0,1], r_k, r_l in [-1,1], 0 <= q <= 1; otherwise
// PreconditionViolation.
Lemma1Report lemma1_checks(const Rational& v, const Rational& x, const Rational& r_k,
                           const Rational& r_l, const QParam& q);

struct BoundsRow {
  Rational q;
  double lower;       // mu_q([0,1])
  MeasureValue upper; // mu_q([-2,3]), infinite at q = 1/2
};

// Defined for 1/2 <= q <= 1; PreconditionViolation otherwise.
BoundsRow theorem_bounds(const QParam& q);

// Rows for q = 1/2 + eps; each eps > 0 with q <= 1.
std::vector<BoundsRow> divergence_scan(const std::vector<Rational>& eps_list);

// mu_q([0,1]) at q = 1/2, i.e. 2 ln(3/2), the actual q -> 1/2 limit of the
// lower bound.
double lower_bound_half_limit();
// 3 ln(4/3): the q -> 1/2 limit as originally published. It is the lower
// bound at q = 2/3, not at q = 1/2.
double published_half_limit();

} // namespace qvitali
