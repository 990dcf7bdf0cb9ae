#pragma once

#include <cstdint>
#include <random>
#include <string_view>

#include "qvitali/qparam.hpp"
#include "qvitali/rational.hpp"

namespace qvitali {

/// Seeded generator for the randomized checks. Only the raw mt19937_64
/// stream is used (bounded draws are done here by rejection), so a seed
/// replays identically on every standard library.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  // Independent stream per named property, stable across runs.
  Rng(std::uint64_t seed, std::string_view stream);

  // Uniform on [lo, hi].
  std::int64_t uniform_int(std::int64_t lo, std::int64_t hi);
  // Uniform on [0, 1).
  double uniform_real();
  double uniform_real(double lo, double hi) { return lo + (hi - lo) * uniform_real(); }
  // exp of a uniform draw on [ln lo, ln hi].
  double log_uniform(double lo, double hi);
  bool coin() { return uniform_int(0, 1) == 1; }

  // p/s with s uniform on [1, max_den] and p uniform among the numerators
  // that keep p/s inside [lo, hi]. Requires lo <= hi with an admissible p.
  Rational rational(const Rational& lo, const Rational& hi, std::int64_t max_den = kMaxDen);

  // q uniform on {0, 1/10, ..., 1}.
  QParam tenths_q();
  // q uniform on {0, 1/10, ..., 9/10}.
  QParam tenths_q_below_one();

  static constexpr std::int64_t kMaxDen = 10000;

private:
  std::mt19937_64 engine_;
};

} // namespace qvitali
