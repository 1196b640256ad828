#include "lipcert/rational.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <limits>

#include "lipcert/error.hpp"

namespace lipcert {
namespace {

// Bounds the work a single literal can request through its exponent.
constexpr long kMaxExponent = 100000;

BigInt pow10_int(unsigned long exponent) {
  BigInt result;
  mpz_ui_pow_ui(result.get_mpz_t(), 10, exponent);
  return result;
}

BigInt floor_div(const BigInt& num, const BigInt& den) {
  BigInt q;
  mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return q;
}

BigInt ceil_div(const BigInt& num, const BigInt& den) {
  BigInt q;
  mpz_cdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return q;
}

// Renders the integer `scaled` as a fixed-point number with `places`
// fractional digits.
std::string render_fixed(const BigInt& scaled, unsigned places) {
  const bool negative = sgn(scaled) < 0;
  std::string digits = BigInt(abs(scaled)).get_str();
  if (places > 0) {
    if (digits.size() <= places) digits.insert(0, places + 1 - digits.size(), '0');
    digits.insert(digits.size() - places, 1, '.');
  }
  return negative ? "-" + digits : digits;
}

[[noreturn]] void parse_fail(std::string_view text, std::size_t pos, const char* what) {
  std::string message = "invalid decimal literal '" + std::string(text) + "': " + what;
  if (pos < text.size()) {
    message += " '";
    message += text[pos];
    message += "'";
  }
  message += " at position " + std::to_string(pos);
  throw ParseError(message, std::string(text), pos);
}

bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

}  // namespace

Rational::Rational(const BigInt& numerator, const BigInt& denominator) {
  if (denominator == 0) throw DomainError("rational with zero denominator");
  value_ = mpq_class(numerator, denominator);
  value_.canonicalize();
}

Rational Rational::from_mpq(mpq_class value) {
  if (value.get_den() == 0) throw DomainError("rational with zero denominator");
  value.canonicalize();
  return Rational(std::move(value));
}

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
  if (rhs.is_zero()) throw DomainError("division by zero");
  value_ /= rhs.value_;
  return *this;
}

std::string Rational::to_string() const {
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& x) { return os << x.to_string(); }

Rational abs(const Rational& x) { return x.sign() < 0 ? -x : x; }

Rational square(const Rational& x) { return x * x; }

Rational pow10(long exponent) {
  if (exponent >= 0) return Rational(pow10_int(static_cast<unsigned long>(exponent)));
  return Rational(BigInt(1), pow10_int(static_cast<unsigned long>(-exponent)));
}

Rational parse_decimal(std::string_view text) {
  std::size_t pos = 0;
  bool negative = false;
  if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
    negative = text[pos] == '-';
    ++pos;
  }

  std::string mantissa;
  const std::size_t int_start = pos;
  while (pos < text.size() && is_digit(text[pos])) mantissa += text[pos++];
  if (pos == int_start) parse_fail(text, pos, "expected digit");

  long scale = 0;
  if (pos < text.size() && text[pos] == '.') {
    ++pos;
    const std::size_t frac_start = pos;
    while (pos < text.size() && is_digit(text[pos])) mantissa += text[pos++];
    if (pos == frac_start) parse_fail(text, pos, "expected digit after '.'");
    scale = static_cast<long>(pos - frac_start);
  }

  long exponent = 0;
  if (pos < text.size() && (text[pos] == 'e' || text[pos] == 'E')) {
    ++pos;
    bool exp_negative = false;
    if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
      exp_negative = text[pos] == '-';
      ++pos;
    }
    const std::size_t exp_start = pos;
    while (pos < text.size() && is_digit(text[pos])) {
      exponent = exponent * 10 + (text[pos] - '0');
      if (exponent > kMaxExponent) parse_fail(text, exp_start, "exponent out of range");
      ++pos;
    }
    if (pos == exp_start) parse_fail(text, pos, "expected exponent digit");
    if (exp_negative) exponent = -exponent;
  }
  if (pos != text.size()) parse_fail(text, pos, "unexpected character");

  Rational value(BigInt(mantissa, 10));
  value *= pow10(exponent - scale);
  return negative ? -value : value;
}

Rational parse_exact(std::string_view text) {
  const auto slash = text.find('/');
  auto parse_int = [&](std::string_view part, std::size_t offset, bool allow_sign) {
    std::size_t i = 0;
    if (allow_sign && i < part.size() && (part[i] == '-' || part[i] == '+')) ++i;
    if (i == part.size()) parse_fail(text, offset + i, "expected digit");
    for (std::size_t j = i; j < part.size(); ++j) {
      if (!is_digit(part[j])) parse_fail(text, offset + j, "unexpected character");
    }
    std::string digits(part);
    if (!digits.empty() && digits[0] == '+') digits.erase(0, 1);
    return BigInt(digits, 10);
  };
  if (slash == std::string_view::npos) return Rational(parse_int(text, 0, true));
  const BigInt num = parse_int(text.substr(0, slash), 0, true);
  const BigInt den = parse_int(text.substr(slash + 1), slash + 1, false);
  if (den == 0) parse_fail(text, slash + 1, "zero denominator");
  return Rational(num, den);
}

Truncation truncate(const Rational& x, unsigned places) {
  const BigInt grid = pow10_int(places);
  const BigInt k = floor_div(x.numerator() * grid, x.denominator());
  Rational value(k, grid);
  Rational error = x - value;
  return {std::move(value), std::move(error)};
}

Rational round_up(const Rational& x, unsigned places) {
  const BigInt grid = pow10_int(places);
  return Rational(ceil_div(x.numerator() * grid, x.denominator()), grid);
}

std::string format_decimal(const Rational& x, unsigned digits) {
  const BigInt k = ceil_div(x.numerator() * pow10_int(digits), x.denominator());
  return render_fixed(k, digits);
}

std::optional<std::string> exact_decimal(const Rational& x) {
  BigInt den = x.denominator();
  unsigned twos = 0;
  unsigned fives = 0;
  while (mpz_divisible_ui_p(den.get_mpz_t(), 2) != 0) {
    den /= 2;
    ++twos;
  }
  while (mpz_divisible_ui_p(den.get_mpz_t(), 5) != 0) {
    den /= 5;
    ++fives;
  }
  if (den != 1) return std::nullopt;
  const unsigned places = std::max(twos, fives);
  const BigInt scaled = x.numerator() * pow10_int(places) / x.denominator();
  std::string out = render_fixed(scaled, places);
  if (places > 0) {
    while (out.back() == '0') out.pop_back();
    if (out.back() == '.') out.pop_back();
  }
  return out;
}

}  // namespace lipcert
