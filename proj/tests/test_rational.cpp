#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>
#include <unordered_set>

#include "qvitali/rational.hpp"

using qvitali::Rational;

TEST_CASE("literals reduce to lowest terms") {
  CHECK(Rational::parse("6/8").str() == "3/4");
  CHECK(Rational::parse("-6/8").str() == "-3/4");
  CHECK(Rational::parse("10/5").str() == "2");
  CHECK(Rational(3, -6).str() == "-1/2");
  CHECK(Rational::parse("0/7").is_zero());
  CHECK(Rational::parse("+5").str() == "5");
}

TEST_CASE("decimals convert exactly") {
  CHECK(Rational::parse("0.25") == Rational(1, 4));
  CHECK(Rational::parse("-1.5") == Rational(-3, 2));
  CHECK(Rational::parse(".5") == Rational(1, 2));
  CHECK(Rational::parse("0.1") == Rational(1, 10));
  // 0.1 as a binary double is not 1/10; the exact path must not go through it.
  CHECK(Rational::parse("0.1") != Rational::parse("0.1000000000000000055511151231257827"));
}

TEST_CASE("malformed literals are rejected") {
  CHECK_THROWS_AS(Rational::parse(""), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("1/"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("a"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("1.2.3"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("1/-2"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("1/0"), std::domain_error);
  CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
  CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
}

TEST_CASE("arithmetic and ordering") {
  const Rational a(1, 2), b(1, 3);
  CHECK(a + b == Rational(5, 6));
  CHECK(a - b == Rational(1, 6));
  CHECK(a * b == Rational(1, 6));
  CHECK(a / b == Rational(3, 2));
  CHECK(-a == Rational(-1, 2));
  CHECK(b < a);
  CHECK(qvitali::abs(Rational(-7, 3)) == Rational(7, 3));
  CHECK(Rational(7, 2).to_double() == 3.5);
  CHECK(Rational(4).is_integer());
  CHECK_FALSE(a.is_integer());
}

TEST_CASE("no fixed-width overflow") {
  Rational x(1, 3);
  for (int i = 0; i < 10; ++i) x = x * x + Rational(1, 7);
  CHECK(x.size_in_bits() > 128);
  CHECK(x > Rational(0));
}

TEST_CASE("hash agrees with equality") {
  std::unordered_set<Rational> s{Rational(2, 4), Rational(1, 2), Rational::parse("0.5")};
  CHECK(s.size() == 1);
}
