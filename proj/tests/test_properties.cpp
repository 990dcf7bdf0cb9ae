#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qvitali/verify.hpp"

using namespace qvitali;

// Every invariant suite at its default size, for a few seeds.
TEST_CASE("all property suites pass") {
  for (std::uint64_t seed : {42ull, 1ull, 20261018ull}) {
    for (const auto& r : run_suite(Suite::All, 1000, seed)) {
      CAPTURE(seed);
      INFO(r.suite << "/" << r.name << ": " << r.counterexample);
      CHECK(r.cases > 0);
      CHECK(r.passed());
    }
  }
}

TEST_CASE("suites filter by name") {
  CHECK(run_suite(Suite::Parser, 5, 1).size() == 3);
  CHECK(run_suite(Suite::Measure, 5, 1).size() == 6);
  CHECK(parse_suite("calculus") == Suite::Calculus);
  CHECK_FALSE(parse_suite("everything").has_value());
}

TEST_CASE("properties do not depend on which others ran") {
  const auto alone = run_suite(Suite::Measure, 100, 9);
  const auto all = run_suite(Suite::All, 100, 9);
  for (const auto& r : alone) {
    bool found = false;
    for (const auto& s : all) {
      if (s.name == r.name) {
        found = true;
        CHECK(s.cases == r.cases);
        CHECK(s.failures == r.failures);
      }
    }
    CHECK(found);
  }
}
