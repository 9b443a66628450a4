#include <doctest.h>

#include "parasol/rational.hpp"

using namespace parasol;

TEST_CASE("rational literals parse into canonical form") {
  CHECK(parse_rational("3/6") == Rational(1, 2));
  CHECK(parse_rational("-4/8") == Rational(-1, 2));
  CHECK(parse_rational("7") == Rational(7));
  CHECK(parse_rational("-0") == 0);
  CHECK(parse_rational("123456789012345678901234567890/3") ==
        Rational(Int("41152263004115226300411522630")));
}

TEST_CASE("canonical form invariant: positive denominator, reduced") {
  Rational q(6, -4);
  CHECK(numerator(q) == -3);
  CHECK(denominator(q) == 2);
  Rational sum = Rational(1, 3) + Rational(1, 6);
  CHECK(numerator(sum) == 1);
  CHECK(denominator(sum) == 2);
}

TEST_CASE("malformed literals are rejected") {
  CHECK_THROWS_AS(parse_rational(""), InputError);
  CHECK_THROWS_AS(parse_rational("1/0"), InputError);
  CHECK_THROWS_AS(parse_rational("1/"), InputError);
  CHECK_THROWS_AS(parse_rational("a"), InputError);
  CHECK_THROWS_AS(parse_rational("1.5"), InputError);
  CHECK_THROWS_AS(parse_rational("2 /3"), InputError);
}

TEST_CASE("to_string round-trips") {
  for (const char* text : {"0", "-7", "22/7", "-1/2"})
    CHECK(to_string(parse_rational(text)) == text);
}
