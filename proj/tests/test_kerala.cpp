#include "paridhi/kerala.hpp"

#include "paridhi/decimal.hpp"
#include "paridhi/oracle.hpp"

#include <doctest.h>

using namespace paridhi;
using namespace paridhi::kerala;

TEST_SUITE("kerala") {

TEST_CASE("partial sums") {
  CHECK(leibniz_partial(1) == Rational(1));
  CHECK(leibniz_partial(2) == Rational(2, 3));
  CHECK(leibniz_partial(3) == Rational(13, 15));
  CHECK(leibniz_partial(4) == Rational(76, 105));
  CHECK(render_rational(Rational(4) * leibniz_partial(100), 4) == "3.1316");
  CHECK_THROWS_AS(leibniz_partial(0), std::domain_error);
  CHECK_THROWS_AS(leibniz_partial(10001), std::domain_error);
  CHECK_NOTHROW(leibniz_partial(10000));
}

TEST_CASE("balanced summation is associativity-independent") {
  // prefix identity: S_n = S_{n-1} + (-1)^{n-1}/(2n-1)
  Rational s;
  for (long n = 1; n <= 60; ++n) {
    Rational term(1, 2 * n - 1);
    s += (n % 2 == 1) ? term : -term;
    if (n % 20 == 0) CHECK(leibniz_partial(n) == s);
  }
}

TEST_CASE("end correction") {
  CHECK(end_correction(1) == Rational(2, 9));
  CHECK(end_correction(2) == Rational(5, 42));
  CHECK(end_correction(50) == Rational(2501, 500250));
  CHECK_THROWS_AS(end_correction(0), std::domain_error);
}

TEST_CASE("corrected series small cases") {
  CHECK(corrected_pi(1, CorrectionSign::empirical).pi_estimate == Rational(28, 9));
  CHECK(corrected_pi(1, CorrectionSign::literal).pi_estimate == Rational(44, 9));
  // two terms plus the correction give exactly 22/7
  CHECK(corrected_pi(2, CorrectionSign::empirical).pi_estimate == Rational(22, 7));
}

TEST_CASE("corrected_pi(50) lands within 5e-11") {
  SeriesEstimate est = corrected_pi(50);
  CHECK(est.n == 50);
  CHECK(est.pi_estimate == Rational(4) * est.corrected);
  Interval err = Interval(est.pi_estimate) - oracle::pi_interval(30);
  CHECK(err.strictly_inside(Rational(0), Rational(5, pow10(11))));  // positive, tiny
  CHECK(digits_correct(to_decimal(est.pi_estimate, 30), oracle::pi(30)) == 11);
  CHECK(render_rational(est.pi_estimate, 15) == "3.141592653590511");
}

TEST_CASE("empirical sign alternates against the last term") {
  for (long n = 1; n <= 12; ++n) {
    SeriesEstimate est = corrected_pi(n, CorrectionSign::empirical);
    // odd n: partial overshoots, correction subtracts; even n: adds
    CHECK(est.correction.sign() == (n % 2 == 1 ? -1 : 1));
    CHECK(est.corrected == est.partial + est.correction);
  }
}

TEST_CASE("correction beats the bare partial sum up to 200 terms") {
  Interval pi_iv = oracle::pi_interval(40);
  Rational s;
  for (long n = 1; n <= 200; ++n) {
    Rational term(1, 2 * n - 1);
    s += (n % 2 == 1) ? term : -term;
    SeriesEstimate est = corrected_pi(n);
    Interval bare = Interval(Rational(4) * s) - pi_iv;
    Interval corr = Interval(est.pi_estimate) - pi_iv;
    Rational bare_min = std::min(bare.lo().abs(), bare.hi().abs());
    Rational corr_max = std::max(corr.lo().abs(), corr.hi().abs());
    REQUIRE(corr_max < bare_min);
  }
}

TEST_CASE("convergence acceleration is at least two binary orders") {
  // |error(corrected, n=50)| * 128 < |error(partial, n=50)|
  Interval pi_iv = oracle::pi_interval(40);
  SeriesEstimate est = corrected_pi(50);
  Interval bare = Interval(Rational(4) * est.partial) - pi_iv;
  Interval corr = Interval(est.pi_estimate) - pi_iv;
  Rational bare_min = std::min(bare.lo().abs(), bare.hi().abs());
  Rational corr_max = std::max(corr.lo().abs(), corr.hi().abs());
  CHECK(corr_max * Rational(128) < bare_min);
}

TEST_CASE("madhava value") {
  CHECK(madhava_value() == Rational(BigInt("2827433388233"), BigInt("900000000000")));
  CHECK(render_rational(madhava_value(), 12) == "3.141592653592");
  CHECK(digits_correct(to_decimal(madhava_value(), 30), oracle::pi(30)) == 11);
}

}  // TEST_SUITE
