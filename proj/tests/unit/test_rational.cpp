#include <doctest.h>

#include "insdel/rational.hpp"

using insdel::Rational;

TEST_CASE("rational normalization and arithmetic") {
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(-2, -4) == Rational(1, 2));
  CHECK(Rational(2, -4) == Rational(-1, 2));
  CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
  CHECK(Rational(1, 2) * Rational(2, 3) == Rational(1, 3));
  CHECK(Rational(1, 2) - Rational(1, 2) == Rational(0));
  CHECK(Rational(3, 4) / Rational(3, 2) == Rational(1, 2));
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(Rational(-1, 3) > Rational(-1, 2));
}

TEST_CASE("rational floor and ceil") {
  CHECK(Rational(7, 2).floor() == 3);
  CHECK(Rational(7, 2).ceil() == 4);
  CHECK(Rational(-7, 2).floor() == -4);
  CHECK(Rational(-7, 2).ceil() == -3);
  CHECK(Rational(6, 2).floor() == 3);
  CHECK(Rational(6, 2).ceil() == 3);
}

TEST_CASE("rational parse") {
  CHECK(Rational::parse("1/8") == Rational(1, 8));
  CHECK(Rational::parse("-3/6") == Rational(-1, 2));
  CHECK(Rational::parse("5") == Rational(5));
  CHECK_THROWS_AS(Rational::parse("x"), std::invalid_argument);
  CHECK_THROWS_AS(Rational(1, 0), std::invalid_argument);
}

TEST_CASE("rational to_string") {
  CHECK(Rational(1, 8).to_string() == "1/8");
  CHECK(Rational(4).to_string() == "4");
}
