#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace qvitali {

/// Outcome of one randomized property over `cases` seeded draws.
struct PropertyResult {
  std::string suite;
  std::string name;
  std::size_t cases = 0;
  std::size_t failures = 0;
  // Inputs of the first failing case, replayable with the same seed.
  std::string counterexample;

  bool passed() const { return failures == 0; }
};

enum class Suite { All, Algebra, Calculus, Measure, Vitali, Parser };

std::optional<Suite> parse_suite(std::string_view name);

/// Runs every property of a suite. Each property draws from its own stream
/// derived from (seed, property name), so results do not depend on which
/// other properties ran. Output order is fixed.
std::vector<PropertyResult> run_suite(Suite suite, std::size_t cases, std::uint64_t seed);

namespace props {

// algebra
PropertyResult exact_sum_laws(std::size_t cases, std::uint64_t seed);
PropertyResult homomorphism(std::size_t cases, std::uint64_t seed);
PropertyResult log_product_identity(std::size_t cases, std::uint64_t seed);
PropertyResult exp_factorization(std::size_t cases, std::uint64_t seed);
PropertyResult round_trips(std::size_t cases, std::uint64_t seed);
PropertyResult classical_degeneration(std::size_t cases, std::uint64_t seed);

// calculus
PropertyResult quadrature_matches_deformed(std::size_t cases, std::uint64_t seed);
PropertyResult derivative_second_order(std::size_t cases, std::uint64_t seed);
PropertyResult q_exp_eigenfunction(std::size_t cases, std::uint64_t seed);

// measure
PropertyResult monotonicity(std::size_t cases, std::uint64_t seed);
PropertyResult finite_additivity(std::size_t cases, std::uint64_t seed);
PropertyResult translation_invariance(std::size_t cases, std::uint64_t seed);
// Also compares both sides against the quadrature oracle.
PropertyResult corrected_scaling(std::size_t cases, std::uint64_t seed);
PropertyResult measure_matches_quadrature(std::size_t cases, std::uint64_t seed);
PropertyResult divergence_at_lambda(std::size_t cases, std::uint64_t seed);

// vitali
PropertyResult equivalence_axioms(std::size_t cases, std::uint64_t seed);
PropertyResult containment(std::size_t cases, std::uint64_t seed);
PropertyResult witness_range(std::size_t cases, std::uint64_t seed);
PropertyResult injectivity(std::size_t cases, std::uint64_t seed);
// Fixed q grid {0.51, 0.6, 0.75, 0.9, 1}; `cases` is ignored.
PropertyResult bounds_match_quadrature(std::size_t cases, std::uint64_t seed);
// Checks the first `cases` enumerated rationals.
PropertyResult enumerator_distinct(std::size_t cases, std::uint64_t seed);

// parser
PropertyResult print_parse_round_trip(std::size_t cases, std::uint64_t seed);
PropertyResult exact_float_agreement(std::size_t cases, std::uint64_t seed);
PropertyResult precedence(std::size_t cases, std::uint64_t seed);

} // namespace props

} // namespace qvitali
