#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "chainorder/rational.hpp"

using chainorder::Rational;

TEST_CASE("normalized construction and printing") {
  CHECK(Rational(6, -8).str() == "-3/4");
  CHECK(Rational(5).str() == "5/1");
  CHECK(Rational(0, 7) == Rational(0));
  CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
}

TEST_CASE("parse") {
  CHECK(Rational::parse("3/4") == Rational(3, 4));
  CHECK(Rational::parse("-2") == Rational(-2));
  CHECK(Rational::parse("+10/4") == Rational(5, 2));
  CHECK_THROWS_AS(Rational::parse("10/-4"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("x"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse(""), std::invalid_argument);
}

TEST_CASE("arithmetic is exact") {
  const Rational a(1, 3), b(1, 6);
  CHECK(a + b == Rational(1, 2));
  CHECK(a - b == b);
  CHECK(a * b == Rational(1, 18));
  CHECK(a / b == Rational(2));
  CHECK_THROWS_AS(a / Rational(0), std::domain_error);
  // 2^-200 does not underflow
  const Rational tiny = Rational::power_of_two(-200);
  CHECK(tiny * Rational::power_of_two(200) == Rational(1));
  CHECK(tiny > Rational(0));
}

TEST_CASE("floor, ceil, abs, ordering") {
  CHECK(Rational(-7, 2).floor() == -4);
  CHECK(Rational(-7, 2).ceil() == -3);
  CHECK(Rational(3).floor() == 3);
  CHECK(Rational(-3, 5).abs() == Rational(3, 5));
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(chainorder::min(Rational(1, 3), Rational(1, 2)) == Rational(1, 3));
  CHECK(chainorder::max(Rational(1, 3), Rational(1, 2)) == Rational(1, 2));
}

TEST_CASE("from_double is exact") {
  CHECK(Rational::from_double(0.375) == Rational(3, 8));
  CHECK(Rational::from_double(-2.0) == Rational(-2));
  CHECK(Rational::from_double(0.1).to_double() == 0.1);
}
