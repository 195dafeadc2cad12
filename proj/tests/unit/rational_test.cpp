#include <doctest.h>

#include <compare>
#include <sstream>

#include "arrows/error.hpp"
#include "arrows/rational.hpp"
#include "support/builders.hpp"

using arrows::BigInt;
using arrows::ErrorCode;
using arrows::Rational;
using builders::Q;
using builders::thrown_code;

TEST_SUITE("rational") {

TEST_CASE("construction canonicalizes sign and gcd") {
  CHECK(Rational(2, 4).to_string() == "1/2");
  CHECK(Rational(1, -2).to_string() == "-1/2");
  CHECK(Rational(-1, -2).to_string() == "1/2");
  CHECK(Rational(-6, 4).to_string() == "-3/2");
  CHECK(Rational(0, 5).to_string() == "0");
  CHECK(Rational(0, -5).denominator() == 1);
  CHECK(Rational(10, 5).to_string() == "2");
  CHECK(Rational(7).numerator() == 7);
  CHECK(Rational(7).denominator() == 1);
  CHECK(Rational().is_zero());
  CHECK(thrown_code([] { Rational(1, 0); }) == ErrorCode::ZeroDenominator);
}

TEST_CASE("equality sees through representation") {
  CHECK(Rational(1, 2) == Rational(2, 4));
  CHECK(Rational(-1, 2) == Rational(1, -2));
  CHECK(Rational(0) == Rational(0, 7));
  CHECK(Rational(1, 2) != Rational(1, 3));
}

TEST_CASE("parse accepts the documented grammar") {
  CHECK(Rational::parse("7") == Rational(7));
  CHECK(Rational::parse("-3/6") == Rational(-1, 2));
  CHECK(Rational::parse("0") == Rational(0));
  CHECK(Rational::parse("-0") == Rational(0));
  CHECK(Rational::parse("10/4") == Rational(5, 2));
  // Arbitrary precision, comfortably past 64 bits.
  const Rational big = Rational::parse("123456789123456789123456789/3");
  CHECK(big * Rational(3) == Rational::parse("123456789123456789123456789"));
}

TEST_CASE("parse rejects everything else") {
  for (const char* bad : {"", "-", "x", "1.5", "+1", " 1", "1 ", "1/",
                          "/2", "1/-2", "1//2", "2/ 3", "0x10"}) {
    CAPTURE(bad);
    CHECK(thrown_code([&] { Rational::parse(bad); }) == ErrorCode::ParseError);
  }
  CHECK(thrown_code([] { Rational::parse("1/0"); }) ==
        ErrorCode::ZeroDenominator);
}

TEST_CASE("arithmetic is exact") {
  CHECK(Q(1, 3) + Q(1, 6) == Q(1, 2));
  CHECK(Q(2, 3) * Q(3, 4) == Q(1, 2));
  CHECK(Q(1, 2) / Q(1, 4) == Q(2));
  CHECK(Q(1, 2) - Q(1, 2) == Q(0));
  CHECK(-Q(3, 7) == Q(-3, 7));
  CHECK(Q(1, 3) * Q(3) == Q(1));  // no drift, ever
  CHECK(thrown_code([] { Q(1) / Q(0); }) == ErrorCode::ZeroDenominator);

  // A short associativity/commutativity spot check on awkward values.
  const Rational a = Q(-7, 12), b = Q(5, 18), c = Q(11, 4);
  CHECK((a + b) + c == a + (b + c));
  CHECK(a * (b + c) == a * b + a * c);
  CHECK(a + b == b + a);
}

TEST_CASE("ordering is a strong order on canonical values") {
  CHECK(Q(1, 3) < Q(1, 2));
  CHECK(Q(-1) < Q(0));
  CHECK(Q(-2, 3) < Q(-1, 2));
  CHECK((Q(1, 2) <=> Q(2, 4)) == std::strong_ordering::equal);
  CHECK(Q(7, 3) > Q(2));
}

TEST_CASE("sign, abs, squared, integrality") {
  CHECK(Q(-3, 2).sign() == -1);
  CHECK(Q(0).sign() == 0);
  CHECK(Q(5, 9).sign() == 1);
  CHECK(Q(-3, 2).abs() == Q(3, 2));
  CHECK(Q(-3, 2).squared() == Q(9, 4));
  CHECK(Q(4, 2).is_integer());
  CHECK_FALSE(Q(1, 2).is_integer());
}

TEST_CASE("to_decimal rounds half away from zero") {
  CHECK(Q(1, 3).to_decimal(3) == "0.333");
  CHECK(Q(2, 3).to_decimal(3) == "0.667");
  CHECK(Q(-1, 3).to_decimal(2) == "-0.33");
  CHECK(Q(3, 2).to_decimal(0) == "2");
  CHECK(Q(-3, 2).to_decimal(0) == "-2");
  CHECK(Q(1, 200).to_decimal(2) == "0.01");
  CHECK(Q(-1, 200).to_decimal(2) == "-0.01");
  // Values that round to zero never print a minus sign.
  CHECK(Q(-1, 300).to_decimal(2) == "0.00");
  CHECK(Q(5).to_decimal(2) == "5.00");
}

TEST_CASE("streaming matches to_string") {
  std::ostringstream os;
  os << Q(-5, 10);
  CHECK(os.str() == "-1/2");
}

}  // TEST_SUITE
