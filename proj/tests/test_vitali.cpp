#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <unordered_set>

#include "qvitali/errors.hpp"
#include "qvitali/qalgebra.hpp"
#include "qvitali/vitali.hpp"

using namespace qvitali;

namespace {
const QParam half(Rational(1, 2));
const QParam one(Rational(1));
} // namespace

TEST_CASE("equivalence witness") {
  const EquivWitness w = equiv_witness(Rational(11, 12), Rational(1, 2), half);
  CHECK(w.r == Rational(1, 3));
  CHECK(witnesses(w, Rational(11, 12), Rational(1, 2), half));
  CHECK(q_sum(Rational(1, 2), Rational(1, 3), half) == Rational(11, 12));
  CHECK(equiv_witness(Rational(3, 8), Rational(3, 8), QParam(Rational(1, 5))).r.is_zero());
  CHECK(equiv_witness(Rational(7), Rational(3), one).r == Rational(4));
  CHECK_THROWS_AS(equiv_witness(Rational(0), Rational(-2), half), SingularOperand);
}

TEST_CASE("symmetry witness") {
  const Rational s = symmetry_witness(Rational(1, 3), half);
  CHECK(s == Rational(-2, 7));
  CHECK(q_sum(Rational(11, 12), s, half) == Rational(1, 2));
  CHECK(symmetry_witness(Rational(0), QParam(Rational(2, 9))).is_zero());
  CHECK(symmetry_witness(Rational(4), one) == Rational(-4));
  CHECK_THROWS_AS(symmetry_witness(Rational(-2), half), SingularOperand);
}

TEST_CASE("transitivity witness") {
  const Rational t = transitivity_witness(Rational(1, 3), Rational(1, 4), half);
  CHECK(t == Rational(5, 8));
  const Rational z(1, 5);
  CHECK(q_sum(q_sum(z, Rational(1, 4), half), Rational(1, 3), half) == q_sum(z, t, half));
  CHECK(transitivity_witness(Rational(0), Rational(-5, 6), half) == Rational(-5, 6));
  CHECK(transitivity_witness(Rational(2), Rational(3), one) == Rational(5));
}

TEST_CASE("enumeration order") {
  const auto r = enumerate_rationals(9);
  const std::vector<Rational> expected{Rational(0),     Rational(1),     Rational(-1),
                                       Rational(1, 2),  Rational(-1, 2), Rational(1, 3),
                                       Rational(-1, 3), Rational(2, 3),  Rational(-2, 3)};
  CHECK(r == expected);
  // s = 4 skips 2/4.
  const auto more = enumerate_rationals(13);
  CHECK(more[9] == Rational(1, 4));
  CHECK(more[11] == Rational(3, 4));
  CHECK_THROWS_AS(enumerate_rationals(0), PreconditionViolation);
}

TEST_CASE("enumeration has no duplicates and stays in [-1,1]") {
  const auto r = enumerate_rationals(5000);
  std::unordered_set<Rational> seen(r.begin(), r.end());
  CHECK(seen.size() == r.size());
  for (const auto& x : r) CHECK((Rational(-1) <= x && x <= Rational(1)));
}

TEST_CASE("enumeration covers every reduced fraction with small denominator") {
  // Count of rationals in [-1,1] with denominator <= 6: 1 + 2 * sum phi(s) = 1 + 2*12.
  const auto r = enumerate_rationals(25);
  std::unordered_set<Rational> seen(r.begin(), r.end());
  for (int s = 1; s <= 6; ++s) {
    for (int p = -s; p <= s; ++p) CHECK(seen.count(Rational(p, s)) == 1);
  }
}

TEST_CASE("lemma 1 witness") {
  const Lemma1Report rep = lemma1_checks(Rational(1, 2), Rational(0), Rational(0), Rational(1, 2), half);
  CHECK(rep.witness == Rational(-2, 5));
  CHECK(rep.witness_in_range);
  CHECK(rep.all_hold());
}

TEST_CASE("lemma 1 containment boundary is attained") {
  const QParam zero(Rational(0));
  const Lemma1Report top = lemma1_checks(Rational(1), Rational(1), Rational(1), Rational(-1), zero);
  CHECK(top.translate_k == Rational(3));
  CHECK(top.translate_contained);
  CHECK(top.all_hold());
  // v (+) (-1) = -1 = lambda at q = 0: on the domain boundary, still allowed.
  const Lemma1Report low = lemma1_checks(Rational(1, 3), Rational(0), Rational(-1), Rational(1), zero);
  CHECK(low.translate_k == Rational(-1));
  CHECK(low.translate_in_domain);
  CHECK(low.all_hold());
}

TEST_CASE("lemma 1 with coinciding translations") {
  const Lemma1Report rep = lemma1_checks(Rational(2, 7), Rational(1), Rational(1, 5), Rational(1, 5), half);
  CHECK(rep.translate_k == rep.translate_l);
  CHECK(rep.injective);
}

TEST_CASE("lemma 1 preconditions") {
  CHECK_THROWS_AS(lemma1_checks(Rational(2), Rational(0), Rational(0), Rational(0), half), PreconditionViolation);
  CHECK_THROWS_AS(lemma1_checks(Rational(0), Rational(-1), Rational(0), Rational(0), half), PreconditionViolation);
  CHECK_THROWS_AS(lemma1_checks(Rational(0), Rational(0), Rational(3, 2), Rational(0), half), PreconditionViolation);
  CHECK_THROWS_AS(lemma1_checks(Rational(0), Rational(0), Rational(0), Rational(-2), half), PreconditionViolation);
  CHECK_THROWS_AS(lemma1_checks(Rational(0), Rational(0), Rational(0), Rational(0), QParam(Rational(-1, 2))),
                  PreconditionViolation);
}

TEST_CASE("theorem bounds") {
  const BoundsRow classical = theorem_bounds(one);
  CHECK(classical.lower == 1.0);
  CHECK(classical.upper.value() == 5.0);

  // mpmath: 4 ln(5/4), 4 ln(7/2).
  const BoundsRow mid = theorem_bounds(QParam(Rational(3, 4)));
  CHECK(std::abs(mid.lower - 0.89257420525683902307) <= 1e-12);
  CHECK(std::abs(mid.upper.value() - 5.01105187398147198275) <= 1e-12);

  const BoundsRow edge = theorem_bounds(half);
  CHECK(std::abs(edge.lower - 0.81093021621632876396) <= 1e-12);
  CHECK(edge.upper.is_infinite());
  CHECK_THROWS_AS(theorem_bounds(QParam(Rational(49, 100))), PreconditionViolation);
}

TEST_CASE("bounds follow the closed forms") {
  for (int k = 51; k <= 99; k += 4) {
    const QParam q(Rational(k, 100));
    const double qd = k / 100.0;
    const BoundsRow row = theorem_bounds(q);
    CHECK(row.lower == doctest::Approx(std::log(2.0 - qd) / (1.0 - qd)).epsilon(1e-12));
    CHECK(row.upper.value() == doctest::Approx(std::log((4.0 - 3.0 * qd) / (2.0 * qd - 1.0)) / (1.0 - qd)).epsilon(1e-12));
    CHECK(row.lower > 0.0);
  }
}

TEST_CASE("published q -> 1/2 limit") {
  CHECK(std::abs(published_half_limit() - 0.86304621735534278232) <= 1e-15);
  CHECK(std::abs(lower_bound_half_limit() - 0.81093021621632876396) <= 1e-15);
  // It is the lower bound at q = 2/3 instead.
  CHECK(std::abs(theorem_bounds(QParam(Rational(2, 3))).lower - published_half_limit()) <= 1e-14);
}

TEST_CASE("divergence scan") {
  const auto rows = divergence_scan({Rational(1, 100), Rational(1, 10000), Rational(1, 1000000),
                                     Rational(1, 1000000000)});
  REQUIRE(rows.size() == 4);
  // mpmath: 9.829063583812310, 41.892818857906880
  CHECK(std::abs(rows[0].upper.value() - 9.82906358381230997) <= 1e-10);
  CHECK(std::abs(rows[3].upper.value() - 41.8928188579068795) <= 1e-9);
  CHECK(rows[3].upper.value() >= 20.0);
  for (std::size_t i = 1; i < rows.size(); ++i) CHECK(rows[i].upper.value() > rows[i - 1].upper.value());
  CHECK(std::abs(rows[3].lower - lower_bound_half_limit()) <= 1e-8);
  CHECK_THROWS_AS(divergence_scan({Rational(0)}), PreconditionViolation);
  CHECK_THROWS_AS(divergence_scan({Rational(3, 4)}), PreconditionViolation);
}
