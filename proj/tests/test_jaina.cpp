#include "paridhi/jaina.hpp"

#include "paridhi/oracle.hpp"

#include <doctest.h>

#include <random>

using namespace paridhi;
using namespace paridhi::jaina;

TEST_SUITE("jaina") {

TEST_CASE("chord and arrow") {
  CHECK(chord_from_arrow(Rational(1), Rational(2)).rational() == Rational(2));
  CHECK(chord_from_arrow(Rational(1, 2), Rational(2)) == QuadSurd(0, 1, 3, 1));
  CHECK(arrow_from_chord(Rational(2), Rational(2)).rational() == Rational(1));
  CHECK(arrow_from_chord(Rational(1), Rational(2)) == QuadSurd(2, -1, 3, 2));
  CHECK_THROWS_AS(chord_from_arrow(Rational(0), Rational(2)), std::domain_error);
  CHECK_THROWS_AS(chord_from_arrow(Rational(2), Rational(2)), std::domain_error);
  CHECK_THROWS_AS(arrow_from_chord(Rational(3), Rational(2)), std::domain_error);
  CHECK_THROWS_AS(arrow_from_chord(Rational(0), Rational(2)), std::domain_error);
}

TEST_CASE("segment construction keeps c^2 = 4h(d-h)") {
  auto spec = segment_from_arrow(Rational(1, 2), Rational(2));
  CHECK(spec.c * spec.c ==
        QuadSurd(Rational(4)) * spec.h * (QuadSurd(spec.d) - spec.h));
  spec = segment_from_chord(Rational(1), Rational(2));
  CHECK(spec.c * spec.c ==
        QuadSurd(Rational(4)) * spec.h * (QuadSurd(spec.d) - spec.h));
}

TEST_CASE("chord-arrow round trip on random rationals") {
  std::mt19937_64 rng(42);
  for (int i = 0; i < 1000; ++i) {
    long long q = static_cast<long long>(rng() % 999) + 2;
    long long p = static_cast<long long>(rng() % static_cast<unsigned long long>(q)) + 1;
    Rational d(static_cast<long long>(rng() % 50) + 1,
               static_cast<long long>(rng() % 7) + 1);
    Rational h = d * Rational(p, 2 * q);  // 0 < h <= d/2
    QuadSurd c = chord_from_arrow(h, d);
    // back out the arrow in exact field arithmetic
    QuadSurd disc = QuadSurd(d * d) - c * c;
    REQUIRE(disc.rational().has_value());
    QuadSurd back = (QuadSurd(d) - QuadSurd::sqrt_rational(*disc.rational())) *
                    QuadSurd(Rational(1, 2));
    REQUIRE(back.rational().has_value());
    CHECK(*back.rational() == h);
  }
}

TEST_CASE("arc rule at exact landmarks") {
  // semicircle: c = 2, h = 1 -> sqrt(10)
  auto semi = arc_length(QuadSurd(Rational(2)), QuadSurd(Rational(1)), 15);
  REQUIRE(semi.exact.has_value());
  CHECK(*semi.exact == QuadSurd(0, 1, 10, 1));
  // quarter: c = sqrt(2), h = 1 - sqrt(2)/2 -> sqrt(11-6*sqrt(2)) = 3 - sqrt(2)
  auto quarter = arc_length(QuadSurd(0, 1, 2, 1), QuadSurd(2, -1, 2, 2), 15);
  REQUIRE(quarter.exact.has_value());
  CHECK(*quarter.exact == QuadSurd(3, -1, 2, 1));
  CHECK(render(quarter.value) == "1.585786437626905");
}

TEST_CASE("arc rule against the oracle at one degree") {
  // unit radius, central angle 1 degree
  int w = 25;
  Interval sin_half = Interval::of(oracle::sin_deg(Rational(1, 2), w));
  Interval cos_half = Interval::of(oracle::sin_deg(Rational(179, 2), w));
  Interval c = Interval(Rational(2)) * sin_half;
  Interval h = Interval(Rational(1)) - cos_half;
  Interval six(Rational(6));
  Interval arc = (six * h * h + c * c).sqrt(w);
  Interval truth = oracle::pi_interval(w) / Interval(Rational(180));
  Interval rel = (arc - truth) / truth;
  // frozen: +1.5864954e-6
  CHECK(rel.strictly_inside(Rational(15864, 10000000000LL), Rational(15866, 10000000000LL)));
}

TEST_CASE("segment areas") {
  QuadSurd c2(Rational(2)), h1(Rational(1));
  auto m = segment_area_mahavira(c2, h1, 15);
  auto s = segment_area_sridhara(c2, h1, 15);
  REQUIRE(m.exact.has_value());
  REQUIRE(s.exact.has_value());
  CHECK(*m.exact == QuadSurd(0, 1, 10, 2));  // sqrt(10)/2 at the semicircle
  CHECK(*m.exact == *s.exact);

  // quarter circle: mahavira mixes fields (inexact), sridhara collapses to sqrt(10)/12
  QuadSurd cq(0, 1, 2, 1), hq(2, -1, 2, 2);
  auto mq = segment_area_mahavira(cq, hq, 15);
  CHECK(!mq.exact.has_value());
  CHECK(render(mq.value) == "0.327464573707800");
  auto sq = segment_area_sridhara(cq, hq, 15);
  REQUIRE(sq.exact.has_value());
  CHECK(*sq.exact == QuadSurd(0, 1, 10, 12));
  CHECK(render(sq.value) == "0.263523138347365");

  // cross-field exactness: c = sqrt(3), h = 1/2 -> sqrt(30)/8
  auto mx = segment_area_mahavira(QuadSurd(0, 1, 3, 1), QuadSurd(Rational(1, 2)), 15);
  REQUIRE(mx.exact.has_value());
  CHECK(*mx.exact == QuadSurd(0, 1, 30, 8));
}

TEST_CASE("area from circumference") {
  CHECK(area_from_circumference(Rational(16), Rational(5)) == Rational(20));
  CHECK(area_from_circumference(Rational(355, 113), Rational(1)) == Rational(355, 452));
  Decimal pi_c = oracle::pi(20);
  Decimal area = area_from_circumference(pi_c, Rational(1), 15);
  CHECK(render(area, 10) == "0.7853981634");  // pi/4
  CHECK_THROWS_AS(area_from_circumference(Rational(-1), Rational(1)), std::domain_error);
}

TEST_CASE("jambudvipa circumference") {
  CHECK(jambudvipa_circumference() == 316227);
  CHECK(jambudvipa_circumference(BigInt(100000)) == 316227);
  CHECK(jambudvipa_circumference(BigInt(1)) == 3);  // sqrt(10) floored
  CHECK_THROWS_AS(jambudvipa_circumference(BigInt(0)), std::domain_error);
}

TEST_CASE("virasena readings") {
  CHECK(virasena_circumference(Rational(1)) == Rational(355, 113));
  CHECK(virasena_circumference(Rational(113)) == Rational(355));
  CHECK(virasena_circumference(Rational(1), true) == Rational(371, 113));
  CHECK(virasena_circumference(Rational(113), true) == Rational(355) + Rational(16, 113));
}

}  // TEST_SUITE
