#pragma once

#include <gmpxx.h>

#include <compare>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

namespace lipcert {

using BigInt = mpz_class;

/// Exact rational number, always held in canonical form: positive
/// denominator and gcd(|num|, den) = 1.
class Rational {
 public:
  Rational() = default;
  Rational(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  explicit Rational(const BigInt& integer) : value_(integer) {}
  /// Throws DomainError on a zero denominator.
  Rational(const BigInt& numerator, const BigInt& denominator);

  BigInt numerator() const { return value_.get_num(); }
  BigInt denominator() const { return value_.get_den(); }

  int sign() const { return sgn(value_); }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const { return value_.get_den() == 1; }

  Rational operator-() const { return Rational(mpq_class(-value_)); }
  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  /// Throws DomainError when dividing by zero.
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

  /// Exact "num/den" rendering (denominator always present, e.g. "5/1").
  std::string to_string() const;

  /// Nearest double; for diagnostics and timing output only.
  double to_double() const { return value_.get_d(); }

  const mpq_class& raw() const { return value_; }

  /// Wraps an mpq value, canonicalizing it.
  static Rational from_mpq(mpq_class value);

 private:
  explicit Rational(mpq_class value) : value_(std::move(value)) {}
  mpq_class value_;
};

std::ostream& operator<<(std::ostream& os, const Rational& x);

Rational abs(const Rational& x);
Rational square(const Rational& x);
/// 10^exponent for any integer exponent.
Rational pow10(long exponent);

/// Parses a decimal literal `[+-]digits[.digits][(e|E)[+-]digits]` exactly.
/// Throws ParseError naming the offending character.
Rational parse_decimal(std::string_view text);

/// Parses the exact serialization "num/den" (or a bare integer).
Rational parse_exact(std::string_view text);

struct Truncation {
  Rational value;  // floor(x * 10^places) / 10^places
  Rational error;  // x - value, in [0, 10^-places)
};

Truncation truncate(const Rational& x, unsigned places);

/// Smallest grid value k / 10^places with k / 10^places >= x.
Rational round_up(const Rational& x, unsigned places);

/// Decimal rendering with `digits` fractional digits, rounded toward +inf so
/// a printed upper bound is still an upper bound.
std::string format_decimal(const Rational& x, unsigned digits);

/// Shortest exact decimal literal for x, or nullopt when the expansion does
/// not terminate (denominator has a prime factor other than 2 and 5).
std::optional<std::string> exact_decimal(const Rational& x);

}  // namespace lipcert
