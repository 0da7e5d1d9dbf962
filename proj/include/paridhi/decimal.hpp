#pragma once

#include "paridhi/rational.hpp"

#include <optional>
#include <string>

namespace paridhi {

// Fixed-point decimal with a guaranteed error bound:
//   |true value - mantissa*10^-scale| <= err_ulp * 10^-scale.
// err_ulp == 0 marks an exactly represented value.
struct Decimal {
  BigInt mantissa;
  int scale = 0;
  BigInt err_ulp = 0;

  Rational center() const { return Rational(mantissa, pow10(static_cast<unsigned>(scale))); }
  Rational lo() const { return Rational(mantissa - err_ulp, pow10(static_cast<unsigned>(scale))); }
  Rational hi() const { return Rational(mantissa + err_ulp, pow10(static_cast<unsigned>(scale))); }
  bool exact() const { return err_ulp == 0; }
};

// Correctly rounded (half away from zero) decimal of an exact fraction;
// err_ulp = 0 when the fraction terminates within `digits`.
Decimal to_decimal(const Rational& x, int digits);

// Renders sign, integer part, '.', exactly `scale` fractional digits — never
// an exponent. With fewer digits requested, re-rounds half away from zero.
std::string render(const Decimal& d);
std::string render(const Decimal& d, int digits);
std::string render_rational(const Rational& x, int digits);

// Signed (approx - reference)/reference with a certified bound, positive =
// overestimate. Scale is max of the input scales. Throws std::domain_error if
// the reference interval straddles zero or the sign/leading digit of the
// result cannot be certified.
Decimal relative_error(const Decimal& approx, const Decimal& reference);

// Largest k <= min(scales) at which both values round (half away from zero) to
// identical strings with k fractional digits. Throws std::domain_error when a
// k <= cap is uncertifiable (an error interval straddles a rounding boundary).
int digits_correct(const Decimal& approx, const Decimal& reference);

// Exact rational interval arithmetic: the error-tracking engine behind every
// Decimal computation. Invariant lo <= hi and the true value lies inside.
class Interval {
 public:
  Interval() = default;
  Interval(Rational point) : lo_(point), hi_(std::move(point)) {}
  Interval(Rational lo, Rational hi);
  static Interval of(const Decimal& d) { return Interval(d.lo(), d.hi()); }

  const Rational& lo() const { return lo_; }
  const Rational& hi() const { return hi_; }
  bool is_point() const { return lo_ == hi_; }
  bool contains_zero() const { return lo_.sign() <= 0 && hi_.sign() >= 0; }
  Rational width() const { return hi_ - lo_; }

  friend Interval operator+(const Interval& a, const Interval& b);
  friend Interval operator-(const Interval& a, const Interval& b);
  friend Interval operator*(const Interval& a, const Interval& b);
  friend Interval operator/(const Interval& a, const Interval& b);
  Interval operator-() const { return Interval(-hi_, -lo_); }

  // Outward-rounded square root at working scale `digits` (exact when the
  // interval is a point with an exactly representable root).
  Interval sqrt(int digits) const;

  // Narrowest Decimal at `scale` containing the interval.
  Decimal to_decimal(int scale) const;

  // Strict interval comparisons (certified): true only when provable.
  bool strictly_less(const Interval& o) const { return hi_ < o.lo_; }
  bool strictly_inside(const Rational& a, const Rational& b) const {
    return a < lo_ && hi_ < b;
  }

 private:
  Rational lo_, hi_;
};

}  // namespace paridhi
