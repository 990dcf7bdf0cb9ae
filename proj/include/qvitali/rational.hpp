#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace qvitali {

/// Arbitrary-precision fraction, always in lowest terms with a positive
/// denominator.
///
/// Literals accepted by parse(): an optional sign followed by an integer
/// ("-3"), a fraction of integers ("22/7"), or a finite decimal ("0.25",
/// "-1.5"). Decimals are converted exactly, never through binary floating
/// point.
class Rational {
public:
  Rational() = default;
  Rational(std::int64_t value); // NOLINT(google-explicit-constructor)
  Rational(std::int64_t num, std::int64_t den);

  static Rational parse(std::string_view text);

  std::string str() const;
  double to_double() const;

  int sign() const { return sgn(value_); }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const;

  Rational operator-() const;
  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  // Throws std::domain_error on division by zero.
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

  friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.value_, b.value_) == 0; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  // Bit length of numerator plus denominator; used to watch denominator
  // growth in long chains of q-sums.
  std::size_t size_in_bits() const;

  const mpq_class& raw() const { return value_; }

private:
  explicit Rational(mpq_class v);
  mpq_class value_;
};

Rational abs(const Rational& r);

} // namespace qvitali

template <>
struct std::hash<qvitali::Rational> {
  std::size_t operator()(const qvitali::Rational& r) const noexcept {
    return std::hash<std::string>{}(r.str());
  }
};
