#include "paridhi/rational.hpp"

#include <doctest.h>

using namespace paridhi;

TEST_SUITE("rational") {

TEST_CASE("construction reduces and normalizes sign") {
  Rational r(6, 8);
  CHECK(r.num() == 3);
  CHECK(r.den() == 4);
  CHECK(Rational(1, -2).num() == -1);
  CHECK(Rational(1, -2).den() == 2);
  CHECK(Rational(-3, -6) == Rational(1, 2));
  CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
}

TEST_CASE("parse") {
  CHECK(Rational::parse("3/4") == Rational(3, 4));
  CHECK(Rational::parse("-3/4") == Rational(-3, 4));
  CHECK(Rational::parse("22/7") == Rational(22, 7));
  CHECK(Rational::parse("0.25") == Rational(1, 4));
  CHECK(Rational::parse("3.14159") == Rational(314159, 100000));
  CHECK(Rational::parse("-0.5") == Rational(-1, 2));
  CHECK(Rational::parse("42") == Rational(42));
  CHECK_THROWS_AS(Rational::parse("abc"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("1.2.3"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse(""), std::invalid_argument);
}

TEST_CASE("arithmetic") {
  CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
  CHECK(Rational(1, 3) - Rational(1, 2) == Rational(-1, 6));
  CHECK(Rational(2, 3) * Rational(9, 4) == Rational(3, 2));
  CHECK(Rational(2, 3) / Rational(4, 9) == Rational(3, 2));
  CHECK(-Rational(1, 2) == Rational(-1, 2));
  CHECK(Rational(3, 7).inverse() == Rational(7, 3));
  CHECK(Rational(-3, 7).abs() == Rational(3, 7));
  CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
}

TEST_CASE("comparison") {
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(Rational(-1, 2) < Rational(-1, 3));
  CHECK(Rational(7, 3) > Rational(2));
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(355, 113) > Rational(314159, 100000));
}

TEST_CASE("to_string") {
  CHECK(Rational(3, 4).to_string() == "3/4");
  CHECK(Rational(-3, 4).to_string() == "-3/4");
  CHECK(Rational(8, 4).to_string() == "2");
  CHECK(Rational(0).to_string() == "0");
  CHECK(Rational::parse(Rational(22, 7).to_string()) == Rational(22, 7));
}

TEST_CASE("sign and predicates") {
  CHECK(Rational(0).is_zero());
  CHECK(Rational(5).is_integer());
  CHECK(!Rational(5, 2).is_integer());
  CHECK(Rational(-1, 9).sign() == -1);
  CHECK(Rational(1, 9).sign() == 1);
  CHECK(Rational(0).sign() == 0);
}

}  // TEST_SUITE
