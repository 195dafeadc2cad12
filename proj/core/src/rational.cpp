#include "arrows/rational.hpp"

#include <cctype>
#include <ostream>
#include <utility>

#include "arrows/error.hpp"

namespace arrows {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

}  // namespace

Rational::Rational(const BigInt& num, const BigInt& den) {
  if (den.is_zero()) {
    raise(ErrorCode::ZeroDenominator, "rational with denominator 0");
  }
  // cpp_rational's (num, den) constructor throws on negative denominators
  // rather than normalizing, so flip signs up front; it gcd-reduces itself.
  if (den < 0) {
    value_ = Rep(-num, -den);
  } else {
    value_ = Rep(num, den);
  }
}

Rational Rational::parse(std::string_view text) {
  std::string_view rest = text;
  bool negative = false;
  if (!rest.empty() && rest.front() == '-') {
    negative = true;
    rest.remove_prefix(1);
  }
  std::string_view num_part = rest;
  std::string_view den_part;
  if (auto slash = rest.find('/'); slash != std::string_view::npos) {
    num_part = rest.substr(0, slash);
    den_part = rest.substr(slash + 1);
    if (!all_digits(den_part)) {
      raise(ErrorCode::ParseError,
            "bad rational literal '" + std::string(text) + "'");
    }
  }
  if (!all_digits(num_part)) {
    raise(ErrorCode::ParseError,
          "bad rational literal '" + std::string(text) + "'");
  }
  BigInt num{std::string(num_part)};
  if (negative) num = -num;
  BigInt den = den_part.empty() ? BigInt(1) : BigInt(std::string(den_part));
  if (den.is_zero()) {
    raise(ErrorCode::ZeroDenominator,
          "bad rational literal '" + std::string(text) + "': denominator 0");
  }
  return Rational(num, den);
}

BigInt Rational::numerator() const { return boost::multiprecision::numerator(value_); }

BigInt Rational::denominator() const { return boost::multiprecision::denominator(value_); }

bool Rational::is_zero() const { return value_.is_zero(); }

bool Rational::is_integer() const { return denominator() == 1; }

int Rational::sign() const { return value_.sign(); }

Rational Rational::abs() const { return sign() < 0 ? -*this : *this; }

std::string Rational::to_string() const { return value_.str(); }

std::string Rational::to_decimal(unsigned digits) const {
  BigInt n = numerator();
  bool negative = n < 0;
  if (negative) n = -n;
  const BigInt den = denominator();
  const BigInt scale = boost::multiprecision::pow(BigInt(10), digits);
  BigInt scaled = n * scale;
  BigInt q = scaled / den;
  const BigInt rem = scaled % den;
  if (2 * rem >= den) ++q;  // round half away from zero (sign handled below)
  std::string out;
  if (negative && !q.is_zero()) out += '-';
  out += BigInt(q / scale).str();
  if (digits > 0) {
    std::string frac = BigInt(q % scale).str();
    out += '.';
    out += std::string(digits - frac.size(), '0');
    out += frac;
  }
  return out;
}

Rational Rational::operator-() const { return Rational(Rep(-value_)); }

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
  if (rhs.is_zero()) {
    raise(ErrorCode::ZeroDenominator, "division by zero");
  }
  value_ /= rhs.value_;
  return *this;
}

bool operator==(const Rational& lhs, const Rational& rhs) {
  return lhs.value_ == rhs.value_;
}

std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs) {
  int c = lhs.value_.compare(rhs.value_);
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::ostream& operator<<(std::ostream& os, const Rational& value) {
  return os << value.to_string();
}

}  // namespace arrows
