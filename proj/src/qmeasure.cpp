#include "qvitali/qmeasure.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "qvitali/errors.hpp"
#include "qvitali/qalgebra.hpp"

namespace qvitali {

MeasureValue MeasureValue::finite(double v) {
  if (!(v >= 0.0)) throw PreconditionViolation("measure must be nonnegative");
  if (std::isinf(v)) return infinite();
  MeasureValue m;
  m.value_ = v;
  return m;
}

MeasureValue MeasureValue::infinite() {
  MeasureValue m;
  m.infinite_ = true;
  return m;
}

double MeasureValue::value() const {
  return infinite_ ? std::numeric_limits<double>::infinity() : value_;
}

MeasureValue& MeasureValue::operator+=(const MeasureValue& rhs) {
  if (infinite_ || rhs.infinite_) {
    *this = infinite();
  } else {
    value_ += rhs.value_;
  }
  return *this;
}

Interval::Interval(Rational lo_, Rational hi_) : lo(std::move(lo_)), hi(std::move(hi_)) {
  if (lo > hi) throw PreconditionViolation("interval " + str() + " has lo > hi");
}

std::string Interval::str() const { return "[" + lo.str() + "," + hi.str() + "]"; }

bool valid_for(const Interval& iv, const QParam& q) {
  return q.is_classical() || iv.lo >= *q.lambda();
}

IntervalSet::IntervalSet(std::vector<Interval> intervals) {
  std::sort(intervals.begin(), intervals.end(),
            [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
  for (auto& iv : intervals) {
    if (!intervals_.empty() && iv.lo <= intervals_.back().hi) {
      if (iv.hi > intervals_.back().hi) intervals_.back().hi = std::move(iv.hi);
    } else {
      intervals_.push_back(std::move(iv));
    }
  }
}

std::string IntervalSet::str() const {
  std::string out;
  for (const auto& iv : intervals_) {
    if (!out.empty()) out += ',';
    out += iv.str();
  }
  return out;
}

IntervalSet unite(const IntervalSet& a, const IntervalSet& b) {
  std::vector<Interval> all = a.intervals();
  all.insert(all.end(), b.intervals().begin(), b.intervals().end());
  return IntervalSet(std::move(all));
}

bool interiors_disjoint(const IntervalSet& a, const IntervalSet& b) {
  for (const auto& x : a.intervals()) {
    for (const auto& y : b.intervals()) {
      if (x.lo < y.hi && y.lo < x.hi) return false;
    }
  }
  return true;
}

bool is_subset(const IntervalSet& a, const IntervalSet& b) {
  return std::all_of(a.intervals().begin(), a.intervals().end(), [&](const Interval& x) {
    return std::any_of(b.intervals().begin(), b.intervals().end(),
                       [&](const Interval& y) { return y.lo <= x.lo && x.hi <= y.hi; });
  });
}

void require_valid(const IntervalSet& s, const QParam& q) {
  for (const auto& iv : s.intervals()) {
    if (!valid_for(iv, q)) {
      throw DomainError("interval " + iv.str() + " extends below lambda = " + q.lambda()->str());
    }
  }
}

MeasureValue measure_interval(const Interval& iv, const QParam& q) {
  if (iv.empty_interior()) {
    if (!valid_for(iv, q)) throw DomainError("interval " + iv.str() + " lies below lambda");
    return MeasureValue::finite(0.0);
  }
  if (q.is_classical()) return MeasureValue::finite((iv.hi - iv.lo).to_double());

  const Rational& lambda = *q.lambda();
  if (iv.lo < lambda) {
    throw DomainError("interval " + iv.str() + " extends below lambda = " + lambda.str());
  }
  if (iv.lo == lambda) return MeasureValue::infinite();

  // (1+(1-q)hi)/(1+(1-q)lo) - 1, exactly.
  const Rational& c = q.one_minus_q();
  const Rational growth = c * (iv.hi - iv.lo) / (Rational(1) + c * iv.lo);
  return MeasureValue::finite(std::log1p(growth.to_double()) / q.one_minus_q_d());
}

MeasureValue measure_set(const IntervalSet& s, const QParam& q) {
  MeasureValue total;
  for (const auto& iv : s.intervals()) total += measure_interval(iv, q);
  return total;
}

IntervalSet translate_set(const IntervalSet& s, const Rational& v, const QParam& q) {
  if (!q.in_domain(v)) {
    throw DomainError("translation " + v.str() + " is not inside the q-domain");
  }
  require_valid(s, q);
  std::vector<Interval> moved;
  moved.reserve(s.size());
  for (const auto& iv : s.intervals()) moved.emplace_back(q_sum(iv.lo, v, q), q_sum(iv.hi, v, q));
  return IntervalSet(std::move(moved));
}

ScaledSet scale_set(const IntervalSet& s, const Rational& alpha, const QParam& q) {
  if (alpha.sign() <= 0) throw PreconditionViolation("scale factor must be positive");
  QParam q_prime(Rational(1) - q.one_minus_q() * alpha);
  std::vector<Interval> scaled;
  scaled.reserve(s.size());
  for (const auto& iv : s.intervals()) scaled.emplace_back(alpha * iv.lo, alpha * iv.hi);
  IntervalSet out(std::move(scaled));
  require_valid(out, q);
  return {std::move(out), std::move(q_prime)};
}

std::vector<Interval> sigma_finite_partition(const QParam& q, int n_cells) {
  if (n_cells < 1) throw PreconditionViolation("partition needs at least one cell");
  std::vector<Interval> cells;
  cells.reserve(2 * static_cast<std::size_t>(n_cells));
  if (q.is_classical()) {
    for (int k = -n_cells; k < n_cells; ++k) cells.emplace_back(Rational(k), Rational(k + 1));
    return cells;
  }
  const Rational& lambda = *q.lambda();
  for (int n = 1; n <= n_cells; ++n) {
    cells.emplace_back(lambda + Rational(1, n + 1), lambda + Rational(1, n));
  }
  for (int k = 1; k <= n_cells; ++k) {
    cells.emplace_back(lambda + Rational(k), lambda + Rational(k + 1));
  }
  return cells;
}

double partition_cell_measure(int i, const QParam& q) {
  if (i < 1) throw PreconditionViolation("cell index starts at 1");
  if (q.is_classical()) return 1.0;
  return std::log1p(1.0 / i) / q.one_minus_q_d();
}

double published_cell_measure(int i, const QParam& q) {
  if (i < 1) throw PreconditionViolation("cell index starts at 1");
  if (q.is_classical()) return 1.0;
  return std::log1p(q.one_minus_q_d() / i) / q.one_minus_q_d();
}

namespace {

class SetParser {
public:
  explicit SetParser(std::string_view text) : text_(text) {}

  IntervalSet run() {
    std::vector<Interval> items;
    skip_ws();
    if (at_end()) return {};
    while (true) {
      expect('[');
      Rational lo = number();
      expect(',');
      Rational hi = number();
      expect(']');
      if (lo > hi) fail("interval has lo > hi");
      items.emplace_back(std::move(lo), std::move(hi));
      skip_ws();
      if (at_end()) break;
      expect(',');
    }
    return IntervalSet(std::move(items));
  }

private:
  [[noreturn]] void fail(const std::string& what) const {
    throw PreconditionViolation("malformed interval set at column " + std::to_string(pos_ + 1) +
                                ": " + what);
  }

  bool at_end() const { return pos_ >= text_.size(); }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  void expect(char c) {
    skip_ws();
    if (at_end() || text_[pos_] != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  Rational number() {
    skip_ws();
    const std::size_t start = pos_;
    while (!at_end() && text_[pos_] != ',' && text_[pos_] != ']' &&
           !std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
    try {
      return Rational::parse(text_.substr(start, pos_ - start));
    } catch (const std::exception& e) {
      pos_ = start;
      fail(e.what());
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

} // namespace

IntervalSet parse_interval_set(std::string_view text) { return SetParser(text).run(); }

} // namespace qvitali
