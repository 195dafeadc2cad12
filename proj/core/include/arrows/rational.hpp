#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>

namespace arrows {

using BigInt = boost::multiprecision::cpp_int;

// Exact rational scalar, always held in canonical form: denominator > 0 and
// gcd(|numerator|, denominator) = 1. Every kernel predicate reduces to exact
// arithmetic on these; nothing in the library ever rounds (decimal rendering is
// display-only). Backed by boost::multiprecision::cpp_rational, which maintains
// the canonical form after every operation; this wrapper adds the sign
// normalization its constructor refuses to do, the literal grammar, and
// display-side helpers.
class Rational {
 public:
  Rational() = default;  // zero
  Rational(int n) : value_(n) {}
  Rational(long long n) : value_(n) {}
  Rational(const BigInt& n) : value_(n) {}

  // Normalizes sign and reduces; throws ZeroDenominator if den == 0.
  Rational(const BigInt& num, const BigInt& den);
  Rational(long long num, long long den)
      : Rational(BigInt(num), BigInt(den)) {}

  // Literal grammar: optional leading '-', then digits, optionally '/' and
  // digits with a nonzero denominator. No whitespace, no '+', locale-free.
  // Throws ParseError / ZeroDenominator.
  static Rational parse(std::string_view text);

  BigInt numerator() const;
  BigInt denominator() const;  // always > 0

  bool is_zero() const;
  bool is_integer() const;
  int sign() const;  // -1, 0, +1
  Rational abs() const;
  Rational squared() const { return *this * *this; }

  // Canonical "p/q", or just "p" for integers.
  std::string to_string() const;

  // Decimal approximation with exactly `digits` fractional digits, rounded
  // half away from zero. Display-only; never feeds back into arithmetic.
  std::string to_decimal(unsigned digits) const;

  Rational operator-() const;
  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  Rational& operator/=(const Rational& rhs);  // throws ZeroDenominator

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

  friend bool operator==(const Rational& lhs, const Rational& rhs);
  friend std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs);

  friend std::ostream& operator<<(std::ostream& os, const Rational& value);

 private:
  using Rep = boost::multiprecision::cpp_rational;

  explicit Rational(Rep value) : value_(std::move(value)) {}

  Rep value_;
};

}  // namespace arrows
