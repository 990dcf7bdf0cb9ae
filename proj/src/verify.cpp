#include "qvitali/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <unordered_set>

#include "qvitali/errors.hpp"
#include "qvitali/qalgebra.hpp"
#include "qvitali/qcalculus.hpp"
#include "qvitali/qexpr.hpp"
#include "qvitali/qmeasure.hpp"
#include "qvitali/sampling.hpp"
#include "qvitali/vitali.hpp"

namespace qvitali {

namespace {

std::string num(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

// Records pass/fail per case and keeps the first counterexample.
class Checker {
public:
  Checker(std::string suite, std::string name, std::size_t cases, std::uint64_t seed)
      : rng(seed, suite + "/" + name), cases_(cases) {
    result_.suite = std::move(suite);
    result_.name = std::move(name);
  }

  std::size_t cases() const { return cases_; }

  void check(bool ok, const std::function<std::string()>& describe) {
    ++result_.cases;
    if (ok) return;
    if (result_.failures++ == 0) result_.counterexample = describe();
  }

  // Runs body(i) for each case; an exception inside the body is a failure.
  template <class Body>
  PropertyResult run(Body body) {
    for (std::size_t i = 0; i < cases_; ++i) {
      try {
        body(i);
      } catch (const std::exception& e) {
        check(false, [&] { return "case " + std::to_string(i) + " threw: " + e.what(); });
      }
    }
    return result_;
  }

  Rng rng;

private:
  std::size_t cases_;
  PropertyResult result_;
};

bool close(double a, double b, double tol) { return std::abs(a - b) <= tol; }

bool rel_close(double a, double b, double rel) {
  return std::abs(a - b) <= rel * std::max(std::abs(a), std::abs(b));
}

// Rational in (lambda, hi]; [-hi, hi] at q = 1.
Rational domain_point(Rng& rng, const QParam& q, const Rational& hi) {
  if (q.is_classical()) return rng.rational(-hi, hi);
  while (true) {
    Rational x = rng.rational(*q.lambda(), hi);
    if (x != *q.lambda()) return x;
  }
}

// Point with 1 + (1-q) x >= 1/10, where binary64 evaluation of the q-exponential
// stays well conditioned. Next to the cutoff, rounding x alone perturbs the
// base 1 + (1-q) x by a large relative amount.
Rational conditioned_point(Rng& rng, const QParam& q, const Rational& hi) {
  if (q.is_classical()) return rng.rational(-hi, hi);
  return rng.rational(Rational(-9, 10) / q.one_minus_q(), hi);
}

Interval domain_interval(Rng& rng, const QParam& q, const Rational& hi) {
  Rational a = domain_point(rng, q, hi);
  Rational b = domain_point(rng, q, hi);
  if (b < a) std::swap(a, b);
  return {std::move(a), std::move(b)};
}

// 2k sorted domain points paired into k intervals.
IntervalSet domain_set(Rng& rng, const QParam& q, const Rational& hi, int max_pieces) {
  const int k = static_cast<int>(rng.uniform_int(1, max_pieces));
  std::vector<Rational> pts;
  for (int i = 0; i < 2 * k; ++i) pts.push_back(domain_point(rng, q, hi));
  std::sort(pts.begin(), pts.end());
  std::vector<Interval> out;
  for (int i = 0; i < k; ++i) out.emplace_back(pts[2 * i], pts[2 * i + 1]);
  return IntervalSet(std::move(out));
}

double quad_measure(const Interval& iv, const QParam& q) {
  return q_integrate([](double) { return 1.0; }, iv.lo.to_double(), iv.hi.to_double(), q,
                     Quadrature{1e-12, 50})
      .value;
}

std::string qstr(const QParam& q) { return "q=" + q.q().str(); }

const Rational kZero(0), kOne(1), kThousand(1000), kTen(10);

} // namespace

std::optional<Suite> parse_suite(std::string_view name) {
  if (name == "all") return Suite::All;
  if (name == "algebra") return Suite::Algebra;
  if (name == "calculus") return Suite::Calculus;
  if (name == "measure") return Suite::Measure;
  if (name == "vitali") return Suite::Vitali;
  if (name == "parser") return Suite::Parser;
  return std::nullopt;
}

namespace props {

PropertyResult exact_sum_laws(std::size_t cases, std::uint64_t seed) {
  Checker c("algebra", "exact-sum-laws", cases, seed);
  return c.run([&](std::size_t) {
    const QParam q(c.rng.rational(kZero, kOne));
    const Rational x = c.rng.rational(-kTen, kTen);
    const Rational y = c.rng.rational(-kTen, kTen);
    const Rational z = c.rng.rational(-kTen, kTen);
    const bool comm = q_sum(x, y, q) == q_sum(y, x, q);
    const bool assoc = q_sum(q_sum(x, y, q), z, q) == q_sum(x, q_sum(y, z, q), q);
    bool inverse = true;
    if (!(Rational(1) + q.one_minus_q() * y).is_zero()) inverse = q_diff(q_sum(x, y, q), y, q) == x;
    c.check(comm && assoc && inverse, [&] {
      return qstr(q) + " x=" + x.str() + " y=" + y.str() + " z=" + z.str();
    });
  });
}

PropertyResult homomorphism(std::size_t cases, std::uint64_t seed) {
  Checker c("algebra", "homomorphism", cases, seed);
  return c.run([&](std::size_t) {
    const QParam q = c.rng.tenths_q();
    const Rational x = domain_point(c.rng, q, Rational(100));
    const Rational y = domain_point(c.rng, q, Rational(100));
    const double xq = deformed(x, q);
    const double yq = deformed(y, q);
    const double sq = deformed(q_sum(x, y, q), q);
    c.check(close(sq, xq + yq, 1e-12 * (1.0 + std::abs(xq) + std::abs(yq))), [&] {
      return qstr(q) + " x=" + x.str() + " y=" + y.str() + " (x+y)_q=" + num(sq) + " x_q+y_q=" + num(xq + yq);
    });
  });
}

PropertyResult log_product_identity(std::size_t cases, std::uint64_t seed) {
  Checker c("algebra", "log-product-identity", cases, seed);
  return c.run([&](std::size_t) {
    const QParam q = c.rng.tenths_q();
    const double x = c.rng.log_uniform(1e-3, 1e3);
    const double y = c.rng.log_uniform(1e-3, 1e3);
    const double lx = q_log(x, q), ly = q_log(y, q);
    const double cross = q.one_minus_q_d() * lx * ly;
    const double lhs = q_log(x * y, q);
    const double scale = std::abs(lx) + std::abs(ly) + std::abs(cross);
    c.check(close(lhs, lx + ly + cross, 1e-10 * std::max(scale, std::abs(lhs))), [&] {
      return qstr(q) + " x=" + num(x) + " y=" + num(y);
    });
  });
}

PropertyResult exp_factorization(std::size_t cases, std::uint64_t seed) {
  Checker c("algebra", "exp-factorization", cases, seed);
  return c.run([&](std::size_t) {
    const QParam q = c.rng.tenths_q();
    const double x = conditioned_point(c.rng, q, kTen).to_double();
    const double y = conditioned_point(c.rng, q, kTen).to_double();
    const double lhs = q_exp(x, q) * q_exp(y, q);
    const double rhs = q_exp(q_sum(x, y, q), q);
    c.check(rel_close(lhs, rhs, 1e-10), [&] { return qstr(q) + " x=" + num(x) + " y=" + num(y); });
  });
}

PropertyResult round_trips(std::size_t cases, std::uint64_t seed) {
  Checker c("algebra", "round-trips", cases, seed);
  return c.run([&](std::size_t) {
    const QParam q = c.rng.tenths_q();
    const double x = domain_point(c.rng, q, kTen).to_double();
    const double p = c.rng.log_uniform(1e-3, 1e3);
    const double a = c.rng.log_uniform(0.1, 10.0);
    const double b = c.rng.log_uniform(0.1, 10.0);
    bool ok = true;
    if (!q_exp_cutoff(x, q)) ok = ok && rel_close(q_log(q_exp(x, q), q), x, 1e-10);
    ok = ok && rel_close(q_exp(q_log(p, q), q), p, 1e-10);
    if (!q_prod_cutoff(a, b, q)) ok = ok && rel_close(q_div(q_prod(a, b, q), b, q), a, 1e-10);
    const double u = deformed(x, q);
    ok = ok && close(deformed(deformed_inv(u, q), q), u, 1e-12 * (1.0 + std::abs(u)));
    c.check(ok, [&] {
      return qstr(q) + " x=" + num(x) + " p=" + num(p) + " a=" + num(a) + " b=" + num(b);
    });
  });
}

PropertyResult classical_degeneration(std::size_t cases, std::uint64_t seed) {
  Checker c("algebra", "classical-degeneration", cases, seed);
  const QParam one(Rational(1));
  return c.run([&](std::size_t) {
    const Rational x = c.rng.rational(-kTen, kTen);
    const Rational y = c.rng.rational(-kTen, kTen);
    const double a = c.rng.log_uniform(1e-3, 1e3);
    const double b = c.rng.log_uniform(1e-3, 1e3);
    const double t = c.rng.uniform_real(-20.0, 20.0);
    const bool ok = q_sum(x, y, one) == x + y && q_diff(x, y, one) == x - y && q_neg(x, one) == -x &&
                    q_prod(a, b, one) == a * b && q_div(a, b, one) == a / b &&
                    q_exp(t, one) == std::exp(t) && q_log(a, one) == std::log(a) &&
                    deformed(t, one) == t && deformed_inv(t, one) == t &&
                    deformed(x, one) == x.to_double();
    c.check(ok, [&] {
      return "x=" + x.str() + " y=" + y.str() + " a=" + num(a) + " b=" + num(b) + " t=" + num(t);
    });
  });
}

PropertyResult quadrature_matches_deformed(std::size_t cases, std::uint64_t seed) {
  Checker c("calculus", "quadrature-matches-deformed", cases, seed);
  return c.run([&](std::size_t) {
    const QParam q = c.rng.tenths_q();
    const Interval iv = domain_interval(c.rng, q, kThousand);
    const double lo = iv.lo.to_double(), hi = iv.hi.to_double();
    const double quad = q_integrate([](double) { return 1.0; }, lo, hi, q).value;
    const double closed = deformed(iv.hi, q) - deformed(iv.lo, q);
    c.check(close(quad, closed, 1e-8 * (1.0 + std::abs(quad))), [&] {
      return qstr(q) + " [a,b]=" + iv.str() + " quadrature=" + num(quad) + " closed=" + num(closed);
    });
  });
}

PropertyResult derivative_second_order(std::size_t cases, std::uint64_t seed) {
  Checker c("calculus", "derivative-second-order", cases, seed);
  return c.run([&](std::size_t) {
    const QParam q = c.rng.tenths_q();
    const double x = c.rng.uniform_real(std::max(q.lambda_d() + 0.5, -5.0), 5.0);
    const double k = q.one_minus_q_d();
    const double g = 1.0 + k * x;
    const auto f = [&q](double t) { return deformed(t, q); };
    // Central-difference error is h^2/6 |f'''| g = h^2 k^2 / (3 g^2);
    // allow a factor 3 on that plus a rounding term.
    const double coeff = k * k / (g * g);
    bool ok = true;
    for (double h : {1e-3, 1e-4, 1e-5}) {
      const double err = std::abs(q_derivative(f, x, q, h) - 1.0);
      const double rounding = 8.0 * 2.2e-16 * (1.0 + std::abs(f(x))) * g / h;
      ok = ok && err <= coeff * h * h + rounding;
    }
    c.check(ok, [&] { return qstr(q) + " x=" + num(x); });
  });
}

PropertyResult q_exp_eigenfunction(std::size_t cases, std::uint64_t seed) {
  Checker c("calculus", "q-exp-eigenfunction", cases, seed);
  return c.run([&](std::size_t) {
    const QParam q = c.rng.tenths_q();
    const double x = c.rng.uniform_real(std::max(q.lambda_d() + 0.5, -5.0), 5.0);
    const auto f = [&q](double t) { return q_exp(t, q); };
    const double e = q_exp(x, q);
    const double d = q_derivative(f, x, q, 1e-6);
    c.check(close(d, e, 1e-5 * (1.0 + e)), [&] { return qstr(q) + " x=" + num(x); });
  });
}

PropertyResult monotonicity(std::size_t cases, std::uint64_t seed) {
  Checker c("measure", "monotonicity", cases, seed);
  return c.run([&](std::size_t) {
    const QParam q = c.rng.tenths_q();
    const IntervalSet outer = domain_set(c.rng, q, kThousand, 4);
    std::vector<Interval> inner;
    for (const auto& iv : outer.intervals()) {
      if (c.rng.coin()) continue;
      Rational a = c.rng.rational(iv.lo, iv.hi);
      Rational b = c.rng.rational(iv.lo, iv.hi);
      if (b < a) std::swap(a, b);
      inner.emplace_back(std::move(a), std::move(b));
    }
    const IntervalSet sub(std::move(inner));
    const double ms = measure_set(sub, q).value();
    const double mt = measure_set(outer, q).value();
    c.check(is_subset(sub, outer) && ms <= mt + 1e-12, [&] {
      return qstr(q) + " s=" + sub.str() + " t=" + outer.str();
    });
  });
}

PropertyResult finite_additivity(std::size_t cases, std::uint64_t seed) {
  Checker c("measure", "finite-additivity", cases, seed);
  return c.run([&](std::size_t) {
    const QParam q = c.rng.tenths_q();
    const IntervalSet all = domain_set(c.rng, q, kThousand, 6);
    std::vector<Interval> left, right;
    for (const auto& iv : all.intervals()) (c.rng.coin() ? left : right).push_back(iv);
    const IntervalSet s(std::move(left)), t(std::move(right));
    const double whole = measure_set(unite(s, t), q).value();
    const double parts = measure_set(s, q).value() + measure_set(t, q).value();
    c.check(interiors_disjoint(s, t) && close(whole, parts, 1e-10 * (1.0 + whole)), [&] {
      return qstr(q) + " s=" + s.str() + " t=" + t.str();
    });
  });
}

PropertyResult translation_invariance(std::size_t cases, std::uint64_t seed) {
  Checker c("measure", "translation-invariance", cases, seed);
  return c.run([&](std::size_t) {
    const QParam q = c.rng.tenths_q();
    const IntervalSet s = domain_set(c.rng, q, kThousand, 3);
    const Rational v = domain_point(c.rng, q, kTen);
    const IntervalSet moved = translate_set(s, v, q);
    const double before = measure_set(s, q).value();
    const double after = measure_set(moved, q).value();
    c.check(close(before, after, 1e-10 * (1.0 + before)), [&] {
      return qstr(q) + " s=" + s.str() + " v=" + v.str() + " mu(s)=" + num(before) + " mu(s+v)=" + num(after);
    });
  });
}

PropertyResult corrected_scaling(std::size_t cases, std::uint64_t seed) {
  Checker c("measure", "corrected-scaling", cases, seed);
  return c.run([&](std::size_t) {
    const QParam q = c.rng.tenths_q();
    const Rational alpha = c.rng.rational(Rational(1, 100), Rational(4));
    const QParam q_prime(Rational(1) - q.one_minus_q() * alpha);
    // A lives in the q'-domain, which is exactly alpha*A in the q-domain.
    const Interval a = domain_interval(c.rng, q_prime, Rational(250));
    const ScaledSet scaled = scale_set(IntervalSet({a}), alpha, q);
    const double lhs = measure_set(scaled.set, q).value();
    const double rhs = alpha.to_double() * measure_interval(a, scaled.q_prime).value();
    const double lhs_quad = scaled.set.empty() ? 0.0 : quad_measure(scaled.set.intervals().front(), q);
    const double rhs_quad = alpha.to_double() * quad_measure(a, q_prime);
    const bool ok = scaled.q_prime == q_prime && close(lhs, rhs, 1e-9 * (1.0 + lhs)) &&
                    close(lhs, lhs_quad, 1e-8 * (1.0 + lhs)) && close(rhs, rhs_quad, 1e-8 * (1.0 + rhs));
    c.check(ok, [&] {
      return qstr(q) + " alpha=" + alpha.str() + " A=" + a.str() + " mu_q(aA)=" + num(lhs) +
             " a*mu_q'(A)=" + num(rhs);
    });
  });
}

PropertyResult measure_matches_quadrature(std::size_t cases, std::uint64_t seed) {
  Checker c("measure", "measure-matches-quadrature", cases, seed);
  return c.run([&](std::size_t) {
    const QParam q = c.rng.tenths_q();
    const Interval iv = domain_interval(c.rng, q, kThousand);
    const double closed = measure_interval(iv, q).value();
    const double quad = quad_measure(iv, q);
    c.check(std::abs(closed - quad) <= 1e-8 * std::abs(closed), [&] {
      return qstr(q) + " iv=" + iv.str() + " closed=" + num(closed) + " quadrature=" + num(quad);
    });
  });
}

PropertyResult divergence_at_lambda(std::size_t cases, std::uint64_t seed) {
  Checker c("measure", "divergence-at-lambda", cases, seed);
  return c.run([&](std::size_t) {
    const QParam q = c.rng.tenths_q_below_one();
    const Rational b = domain_point(c.rng, q, kThousand);
    const MeasureValue m = measure_interval(Interval(*q.lambda(), b), q);
    c.check(m.is_infinite(), [&] { return qstr(q) + " b=" + b.str(); });
  });
}

PropertyResult equivalence_axioms(std::size_t cases, std::uint64_t seed) {
  Checker c("vitali", "equivalence-axioms", cases, seed);
  return c.run([&](std::size_t) {
    const QParam q(c.rng.rational(kZero, kOne));
    const Rational x = c.rng.rational(kZero, kOne);
    const Rational y = c.rng.rational(kZero, kOne);
    const Rational z = c.rng.rational(kZero, kOne);
    const EquivWitness refl = equiv_witness(x, x, q);
    const EquivWitness xy = equiv_witness(x, y, q); // x = y (+) r1
    const EquivWitness yz = equiv_witness(y, z, q); // y = z (+) r2
    const bool reflexive = refl.r.is_zero() && witnesses(refl, x, x, q);
    const bool symmetric = q_sum(x, symmetry_witness(xy.r, q), q) == y;
    const bool transitive = q_sum(z, transitivity_witness(xy.r, yz.r, q), q) == x;
    c.check(reflexive && symmetric && transitive && witnesses(xy, x, y, q), [&] {
      return qstr(q) + " x=" + x.str() + " y=" + y.str() + " z=" + z.str();
    });
  });
}

namespace {

struct Lemma1Draw {
  QParam q;
  Rational v, x, r_k, r_l;
  std::string str() const {
    return qstr(q) + " v=" + v.str() + " x=" + x.str() + " r_k=" + r_k.str() + " r_l=" + r_l.str();
  }
};

Lemma1Draw draw_lemma1(Rng& rng, bool distinct) {
  QParam q(rng.rational(kZero, kOne));
  Rational v = rng.rational(kZero, kOne);
  Rational x = rng.rational(kZero, kOne);
  Rational r_k = rng.rational(-kOne, kOne);
  Rational r_l = rng.rational(-kOne, kOne);
  while (distinct && r_l == r_k) r_l = rng.rational(-kOne, kOne);
  return {std::move(q), std::move(v), std::move(x), std::move(r_k), std::move(r_l)};
}

} // namespace

PropertyResult containment(std::size_t cases, std::uint64_t seed) {
  Checker c("vitali", "containment", cases, seed);
  return c.run([&](std::size_t) {
    const Lemma1Draw d = draw_lemma1(c.rng, false);
    const Lemma1Report rep = lemma1_checks(d.v, d.x, d.r_k, d.r_l, d.q);
    c.check(rep.translate_in_domain && rep.translate_contained,
            [&] { return d.str() + " v(+)r_k=" + rep.translate_k.str(); });
  });
}

PropertyResult witness_range(std::size_t cases, std::uint64_t seed) {
  Checker c("vitali", "witness-range", cases, seed);
  return c.run([&](std::size_t) {
    const Lemma1Draw d = draw_lemma1(c.rng, false);
    const Lemma1Report rep = lemma1_checks(d.v, d.x, d.r_k, d.r_l, d.q);
    c.check(rep.witness_in_range, [&] { return d.str() + " witness=" + rep.witness.str(); });
  });
}

PropertyResult injectivity(std::size_t cases, std::uint64_t seed) {
  Checker c("vitali", "injectivity", cases, seed);
  return c.run([&](std::size_t) {
    const Lemma1Draw d = draw_lemma1(c.rng, true);
    const Lemma1Report rep = lemma1_checks(d.v, d.x, d.r_k, d.r_l, d.q);
    c.check(rep.injective && rep.translate_k != rep.translate_l, [&] { return d.str(); });
  });
}

PropertyResult bounds_match_quadrature(std::size_t, std::uint64_t seed) {
  Checker c("vitali", "bounds-match-quadrature", 0, seed);
  const Rational grid[] = {Rational(51, 100), Rational(6, 10), Rational(3, 4), Rational(9, 10), Rational(1)};
  for (const auto& qv : grid) {
    const QParam q(qv);
    const BoundsRow row = theorem_bounds(q);
    const double lower = quad_measure(Interval(Rational(0), Rational(1)), q);
    const double upper = quad_measure(Interval(Rational(-2), Rational(3)), q);
    c.check(!row.upper.is_infinite() && rel_close(row.lower, lower, 1e-8) &&
                rel_close(row.upper.value(), upper, 1e-8),
            [&] { return qstr(q) + " lower=" + num(row.lower) + " upper=" + num(row.upper.value()); });
  }
  return c.run([](std::size_t) {});
}

PropertyResult enumerator_distinct(std::size_t cases, std::uint64_t seed) {
  Checker c("vitali", "enumerator-distinct", 0, seed);
  RationalEnumerator e;
  std::unordered_set<Rational> seen;
  for (std::size_t i = 0; i < cases; ++i) {
    const Rational r = e.next();
    const bool fresh = seen.insert(r).second;
    c.check(fresh && -kOne <= r && r <= kOne, [&] { return "index " + std::to_string(i) + " r=" + r.str(); });
  }
  return c.run([](std::size_t) {});
}

namespace {

Rational random_literal(Rng& rng, bool nonnegative) {
  const Rational lo = nonnegative ? Rational(0) : Rational(-5);
  return rng.rational(lo, Rational(5), 20);
}

ExprPtr random_tree(Rng& rng, int depth, bool additive_only, bool nonnegative) {
  const auto kind = depth <= 0 ? 0 : rng.uniform_int(0, additive_only ? 1 : 2);
  if (kind == 0) return make_literal(random_literal(rng, nonnegative));
  if (kind == 2) {
    const Func f = static_cast<Func>(rng.uniform_int(0, 2));
    return make_call(f, random_tree(rng, depth - 1, additive_only, nonnegative));
  }
  const auto op = static_cast<BinaryOp>(rng.uniform_int(0, additive_only ? 1 : 3));
  ExprPtr l = random_tree(rng, depth - 1, additive_only, nonnegative);
  ExprPtr r = random_tree(rng, depth - 1, additive_only, nonnegative);
  return make_binary(op, std::move(l), std::move(r));
}

} // namespace

PropertyResult print_parse_round_trip(std::size_t cases, std::uint64_t seed) {
  Checker c("parser", "print-parse-round-trip", cases, seed);
  return c.run([&](std::size_t) {
    const ExprPtr tree = random_tree(c.rng, static_cast<int>(c.rng.uniform_int(0, 5)), false, false);
    const std::string text = to_string(*tree);
    const ExprPtr back = parse(tokenize(text));
    c.check(*back == *tree, [&] { return "expr: " + text + " reprinted: " + to_string(*back); });
  });
}

PropertyResult exact_float_agreement(std::size_t cases, std::uint64_t seed) {
  Checker c("parser", "exact-float-agreement", cases, seed);
  return c.run([&](std::size_t) {
    const QParam q = c.rng.tenths_q();
    // Nonnegative literals keep every intermediate value inside the q-domain.
    const ExprPtr tree = random_tree(c.rng, static_cast<int>(c.rng.uniform_int(0, 4)), true, true);
    const double exact = evaluate_exact(*tree, q).to_double();
    const double fl = evaluate_float(*tree, q);
    c.check(close(exact, fl, 1e-12 * (1.0 + std::abs(exact))), [&] {
      return qstr(q) + " expr: " + to_string(*tree) + " exact=" + num(exact) + " float=" + num(fl);
    });
  });
}

PropertyResult precedence(std::size_t cases, std::uint64_t seed) {
  Checker c("parser", "precedence", cases, seed);
  return c.run([&](std::size_t) {
    const QParam q = c.rng.tenths_q();
    const Rational a = c.rng.rational(Rational(1, 10), Rational(5), 100);
    const Rational b = c.rng.rational(Rational(1, 10), Rational(5), 100);
    const Rational cc = c.rng.rational(Rational(1, 10), Rational(5), 100);
    const auto ops = std::vector<std::pair<std::string, std::string>>{{"o+", "o*"}, {"o-", "o/"}, {"o+", "o/"}, {"o-", "o*"}};
    const auto& [add, mul] = ops[static_cast<std::size_t>(c.rng.uniform_int(0, 3))];
    const std::string flat = a.str() + " " + add + " " + b.str() + " " + mul + " " + cc.str();
    const std::string grouped = a.str() + " " + add + " (" + b.str() + " " + mul + " " + cc.str() + ")";
    const ExprPtr t1 = parse(flat);
    const ExprPtr t2 = parse(grouped);
    const double v1 = evaluate_float(*t1, q);
    const double v2 = evaluate_float(*t2, q);
    c.check(*t1 == *t2 && v1 == v2, [&] { return qstr(q) + " expr: " + flat; });
  });
}

} // namespace props

std::vector<PropertyResult> run_suite(Suite suite, std::size_t cases, std::uint64_t seed) {
  using Prop = PropertyResult (*)(std::size_t, std::uint64_t);
  struct Entry {
    Suite suite;
    Prop prop;
  };
  static const Entry table[] = {
      {Suite::Algebra, props::exact_sum_laws},
      {Suite::Algebra, props::homomorphism},
      {Suite::Algebra, props::log_product_identity},
      {Suite::Algebra, props::exp_factorization},
      {Suite::Algebra, props::round_trips},
      {Suite::Algebra, props::classical_degeneration},
      {Suite::Calculus, props::quadrature_matches_deformed},
      {Suite::Calculus, props::derivative_second_order},
      {Suite::Calculus, props::q_exp_eigenfunction},
      {Suite::Measure, props::monotonicity},
      {Suite::Measure, props::finite_additivity},
      {Suite::Measure, props::translation_invariance},
      {Suite::Measure, props::corrected_scaling},
      {Suite::Measure, props::measure_matches_quadrature},
      {Suite::Measure, props::divergence_at_lambda},
      {Suite::Vitali, props::equivalence_axioms},
      {Suite::Vitali, props::containment},
      {Suite::Vitali, props::witness_range},
      {Suite::Vitali, props::injectivity},
      {Suite::Vitali, props::bounds_match_quadrature},
      {Suite::Vitali, props::enumerator_distinct},
      {Suite::Parser, props::print_parse_round_trip},
      {Suite::Parser, props::exact_float_agreement},
      {Suite::Parser, props::precedence},
  };
  std::vector<PropertyResult> out;
  for (const auto& e : table) {
    if (suite == Suite::All || suite == e.suite) out.push_back(e.prop(cases, seed));
  }
  return out;
}

} // namespace qvitali
