#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qvitali/qparam.hpp"
#include "qvitali/rational.hpp"

namespace qvitali {

/// Nonnegative extended real: a finite double or +inf.
class MeasureValue {
public:
  MeasureValue() = default;
  // Throws PreconditionViolation for negative or NaN input.
  static MeasureValue finite(double v);
  static MeasureValue infinite();

  bool is_infinite() const { return infinite_; }
  // +inf as a double when infinite.
  double value() const;

  MeasureValue& operator+=(const MeasureValue& rhs);
  friend MeasureValue operator+(MeasureValue a, const MeasureValue& b) { return a += b; }
  friend bool operator==(const MeasureValue&, const MeasureValue&) = default;

private:
  double value_ = 0.0;
  bool infinite_ = false;
};

/// Closed interval [lo, hi] with exact endpoints. Open/closed endpoint
/// distinctions are not modeled; endpoints are null sets.
struct Interval {
  Rational lo;
  Rational hi;

  // Throws PreconditionViolation when lo > hi.
  Interval(Rational lo, Rational hi);

  bool empty_interior() const { return lo == hi; }
  std::string str() const;
  friend bool operator==(const Interval&, const Interval&) = default;
};

// lo >= lambda for q < 1. lo == lambda is valid and has infinite measure.
bool valid_for(const Interval& iv, const QParam& q);

/// Finite union of intervals in normal form: sorted, pairwise disjoint, and
/// non-touching. Overlapping or adjacent inputs are merged on construction,
/// so two sets are equal iff they cover the same points.
class IntervalSet {
public:
  IntervalSet() = default;
  explicit IntervalSet(std::vector<Interval> intervals);

  const std::vector<Interval>& intervals() const { return intervals_; }
  bool empty() const { return intervals_.empty(); }
  std::size_t size() const { return intervals_.size(); }

  std::string str() const;
  friend bool operator==(const IntervalSet&, const IntervalSet&) = default;

private:
  std::vector<Interval> intervals_;
};

IntervalSet unite(const IntervalSet& a, const IntervalSet& b);
// True when no two members share more than an endpoint.
bool interiors_disjoint(const IntervalSet& a, const IntervalSet& b);
// Every member of a lies inside some member of b.
bool is_subset(const IntervalSet& a, const IntervalSet& b);

// Throws DomainError naming the first member with lo < lambda.
void require_valid(const IntervalSet& s, const QParam& q);

/// mu_q([lo, hi]) = hi_q - lo_q, i.e. (1/(1-q)) ln((1+(1-q)hi)/(1+(1-q)lo)).
/// The ratio is formed exactly, so the only roundings are one conversion to
/// double and the log1p. Returns +inf when lo == lambda < hi, and throws
/// DomainError when lo < lambda.
MeasureValue measure_interval(const Interval& iv, const QParam& q);
MeasureValue measure_set(const IntervalSet& s, const QParam& q);

// Image of s under x -> x (+)_q v, computed endpoint-wise in exact arithmetic.
// The map is strictly increasing when v > lambda, so normal form is kept.
IntervalSet translate_set(const IntervalSet& s, const Rational& v, const QParam& q);

struct ScaledSet {
  IntervalSet set; // alpha * s
  QParam q_prime;  // 1 - (1-q) alpha
};

// mu_q(alpha A) = alpha * mu_{q'}(A) with q' = 1 - (1-q) alpha.
ScaledSet scale_set(const IntervalSet& s, const Rational& alpha, const QParam& q);

/// Finite-measure cells covering the q-domain:
///   A_n = [lambda + 1/(n+1), lambda + 1/n),  B_k = [lambda + k, lambda + k + 1)
/// returned as A_1..A_n followed by B_1..B_n. Cells are half-open, so
/// consecutive ones share an endpoint but no points. At q = 1 the unit cells
/// [k, k+1) for k = -n..n-1 are returned instead.
std::vector<Interval> sigma_finite_partition(const QParam& q, int n_cells);

// Measure of the i-th cell of either family, (1/(1-q)) ln((i+1)/i).
double partition_cell_measure(int i, const QParam& q);
// The value printed with the published partition, (1/(1-q)) ln(1 + (1-q)/i).
// Differs from partition_cell_measure for q != 0; kept for reports.
double published_cell_measure(int i, const QParam& q);

/// Parses the CLI set format: comma-separated "[lo,hi]" items with rational
/// or decimal endpoints, e.g. "[0,1],[3/2,2]". Whitespace is ignored. Throws
/// PreconditionViolation on malformed text or lo > hi.
IntervalSet parse_interval_set(std::string_view text);

} // namespace qvitali
