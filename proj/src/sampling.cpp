#include "qvitali/sampling.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace qvitali {

namespace {

std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 1469598103934665603ull;
  for (char c : s) {
    h ^= static_cast<unsigned char>(c);
    h *= 1099511628211ull;
  }
  return h;
}

// floor(r * den) and ceil(r * den) for the numerator bounds.
mpz_class floor_scaled(const Rational& r, std::int64_t den) {
  mpz_class num = r.raw().get_num() * den;
  mpz_class out;
  mpz_fdiv_q(out.get_mpz_t(), num.get_mpz_t(), r.raw().get_den().get_mpz_t());
  return out;
}

mpz_class ceil_scaled(const Rational& r, std::int64_t den) {
  mpz_class num = r.raw().get_num() * den;
  mpz_class out;
  mpz_cdiv_q(out.get_mpz_t(), num.get_mpz_t(), r.raw().get_den().get_mpz_t());
  return out;
}

} // namespace

Rng::Rng(std::uint64_t seed, std::string_view stream) : engine_(seed ^ fnv1a(stream)) {}

std::int64_t Rng::uniform_int(std::int64_t lo, std::int64_t hi) {
  if (lo > hi) throw std::invalid_argument("uniform_int: empty range");
  const std::uint64_t span = static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo);
  if (span == std::numeric_limits<std::uint64_t>::max()) return static_cast<std::int64_t>(engine_());
  const std::uint64_t n = span + 1;
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % n;
  std::uint64_t draw;
  do {
    draw = engine_();
  } while (draw >= limit);
  return static_cast<std::int64_t>(static_cast<std::uint64_t>(lo) + draw % n);
}

double Rng::uniform_real() {
  // 53 random mantissa bits.
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double Rng::log_uniform(double lo, double hi) {
  return std::exp(uniform_real(std::log(lo), std::log(hi)));
}

Rational Rng::rational(const Rational& lo, const Rational& hi, std::int64_t max_den) {
  if (lo > hi) throw std::invalid_argument("rational draw: empty range");
  for (int attempt = 0; attempt < 1000; ++attempt) {
    const std::int64_t den = uniform_int(1, max_den);
    const mpz_class p_lo = ceil_scaled(lo, den);
    const mpz_class p_hi = floor_scaled(hi, den);
    if (p_lo > p_hi) continue;
    if (!p_lo.fits_slong_p() || !p_hi.fits_slong_p()) throw std::invalid_argument("rational draw: range too wide");
    const std::int64_t p = uniform_int(p_lo.get_si(), p_hi.get_si());
    return Rational(p, den);
  }
  throw std::invalid_argument("rational draw: no representable value in range");
}

QParam Rng::tenths_q() { return QParam(Rational(uniform_int(0, 10), 10)); }

QParam Rng::tenths_q_below_one() { return QParam(Rational(uniform_int(0, 9), 10)); }

} // namespace qvitali
