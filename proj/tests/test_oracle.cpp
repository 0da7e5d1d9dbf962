#include "paridhi/oracle.hpp"

#include <doctest.h>

using namespace paridhi;

TEST_SUITE("oracle") {

TEST_CASE("pi mantissas at several scales") {
  CHECK(render(oracle::pi(1)) == "3.1");
  CHECK(render(oracle::pi(12)) == "3.141592653590");
  CHECK(render(oracle::pi(50)) ==
        "3.14159265358979323846264338327950288419716939937511");
  CHECK(oracle::pi(30).err_ulp <= 1);
}

TEST_CASE("pi precision cap and bad input") {
  CHECK_THROWS_AS(oracle::pi(0), std::invalid_argument);
  CHECK_THROWS_AS(oracle::pi(201), std::invalid_argument);
  CHECK_NOTHROW(oracle::pi(200));
}

TEST_CASE("independent series agree at full cap") {
  for (int digits : {10, 50, 200})
    CHECK(oracle::pi_scaled(digits) == oracle::pi_scaled_arcsin(digits));
}

TEST_CASE("pi requests slice one cached computation") {
  BigInt full = oracle::pi_scaled(40);
  BigInt again = oracle::pi_scaled(40);
  CHECK(full == again);
  // prefix property across scales (up to the final rounded digit)
  BigInt coarse = oracle::pi_scaled(20);
  BigInt shifted = full / pow10(20);
  CHECK((coarse - shifted).convert_to<long long>() * (coarse - shifted).convert_to<long long>() <= 1);
}

TEST_CASE("sin_deg exact anchors") {
  CHECK(oracle::sin_deg(Rational(0), 10).mantissa == 0);
  CHECK(oracle::sin_deg(Rational(0), 10).exact());
  CHECK(oracle::sin_deg(Rational(30), 10).mantissa == 5000000000LL);
  CHECK(oracle::sin_deg(Rational(30), 10).exact());
  CHECK(oracle::sin_deg(Rational(90), 10).mantissa == 10000000000LL);
  CHECK(oracle::sin_deg(Rational(150), 10).mantissa == 5000000000LL);
  CHECK(oracle::sin_deg(Rational(180), 10).mantissa == 0);
}

TEST_CASE("sin_deg values") {
  CHECK(oracle::sin_deg(Rational(15, 4), 9).mantissa == 65403129);  // 3.75 degrees
  CHECK(oracle::sin_deg(Rational(45), 15).mantissa == BigInt("707106781186548"));
  CHECK(oracle::sin_deg(Rational(100), 20).mantissa == oracle::sin_deg(Rational(80), 20).mantissa);
  CHECK(oracle::sin_deg(Rational(1, 7), 25).err_ulp <= 1);
}

TEST_CASE("sin_deg domain") {
  CHECK_THROWS_AS(oracle::sin_deg(Rational(-1), 10), std::domain_error);
  CHECK_THROWS_AS(oracle::sin_deg(Rational(181), 10), std::domain_error);
}

TEST_CASE("sqrt_rat") {
  CHECK(oracle::sqrt_rat(Rational(2), 30).mantissa ==
        BigInt("1414213562373095048801688724210"));
  CHECK(oracle::sqrt_rat(Rational(9), 10).mantissa == 30000000000LL);
  CHECK(oracle::sqrt_rat(Rational(1, 4), 4).mantissa == 5000);
  CHECK_THROWS_AS(oracle::sqrt_rat(Rational(-1), 10), std::domain_error);
}

TEST_CASE("pi_interval brackets pi") {
  Interval iv = oracle::pi_interval(30);
  CHECK(iv.strictly_inside(Rational(314159, 100000), Rational(314160, 100000)));
  CHECK(iv.width() <= Rational(4, pow10(30)));
  // rendering is stable against the working precision
  CHECK(render(oracle::pi(45)) == render(oracle::pi(60), 45));
}

}  // TEST_SUITE
