#include "qvitali/rational.hpp"

#include <cctype>
#include <stdexcept>
#include <utility>

namespace qvitali {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

mpz_class to_mpz(std::string_view digits) {
  return mpz_class(std::string(digits), 10);
}

} // namespace

Rational::Rational(std::int64_t value) : value_(static_cast<long>(value)) {}

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  value_ = mpq_class(mpz_class(static_cast<long>(num)), mpz_class(static_cast<long>(den)));
  value_.canonicalize();
}

Rational::Rational(mpq_class v) : value_(std::move(v)) { value_.canonicalize(); }

Rational Rational::parse(std::string_view text) {
  const std::string_view original = text;
  auto fail = [&]() -> Rational {
    throw std::invalid_argument("malformed rational literal '" + std::string(original) + "'");
  };

  bool negative = false;
  if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }

  mpq_class value;
  if (const auto slash = text.find('/'); slash != std::string_view::npos) {
    const auto num = text.substr(0, slash);
    const auto den = text.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) return fail();
    mpz_class d = to_mpz(den);
    if (d == 0) throw std::domain_error("rational literal '" + std::string(original) + "' has zero denominator");
    value = mpq_class(to_mpz(num), d);
  } else if (const auto dot = text.find('.'); dot != std::string_view::npos) {
    const auto whole = text.substr(0, dot);
    const auto frac = text.substr(dot + 1);
    if ((!whole.empty() && !all_digits(whole)) || !all_digits(frac)) return fail();
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
    const mpz_class whole_part = whole.empty() ? mpz_class(0) : to_mpz(whole);
    value = mpq_class(whole_part * scale + to_mpz(frac), scale);
  } else {
    if (!all_digits(text)) return fail();
    value = mpq_class(to_mpz(text));
  }
  value.canonicalize();
  if (negative) value = -value;
  return Rational(std::move(value));
}

std::string Rational::str() const {
  if (value_.get_den() == 1) return value_.get_num().get_str(10);
  return value_.get_num().get_str(10) + "/" + value_.get_den().get_str(10);
}

double Rational::to_double() const { return value_.get_d(); }

bool Rational::is_integer() const { return value_.get_den() == 1; }

Rational Rational::operator-() const { return Rational(mpq_class(-value_)); }

Rational& Rational::operator+=(const Rational& rhs) {
  value_ += rhs.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
  value_ -= rhs.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
  value_ *= rhs.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) throw std::domain_error("rational division by zero");
  value_ /= rhs.value_;
  return *this;
}

std::size_t Rational::size_in_bits() const {
  return mpz_sizeinbase(value_.get_num_mpz_t(), 2) + mpz_sizeinbase(value_.get_den_mpz_t(), 2);
}

Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

} // namespace qvitali
