#include "paridhi/sulva.hpp"

#include "paridhi/oracle.hpp"

namespace paridhi {
namespace sulva {

ConstructionResult circle_from_square(const Rational& side, CirclingMethod method,
                                      int digits) {
  if (side.sign() <= 0) throw std::domain_error("circle_from_square: side must be positive");
  ConstructionResult out;
  out.method = method;
  out.side = side;
  QuadSurd side2 = QuadSurd(side * side);
  switch (method) {
    case CirclingMethod::baudhayana: {
      // r = side*(2+sqrt(2))/6, r^2 = side^2*(3+2*sqrt(2))/18
      out.radius = QuadSurd(side) * QuadSurd(2, 1, 2, 6);
      out.radius_squared = *out.radius * *out.radius;
      break;
    }
    case CirclingMethod::manava: {
      // For side 2 the text's r^2 = (1 + (sqrt(17)/3 - 1)/5)^2 + 1/9
      //                           = (186 + 24*sqrt(17))/225; scale by (side/2)^2.
      out.radius_squared = QuadSurd(side * side * Rational(1, 4)) * QuadSurd(186, 24, 17, 225);
      out.radius = std::nullopt;  // nested radical, outside one Q(sqrt(k))
      break;
    }
    case CirclingMethod::maitrayaniya: {
      out.radius = QuadSurd(side * Rational(9, 16));
      out.radius_squared = *out.radius * *out.radius;
      break;
    }
  }
  out.implied_pi = side2 / out.radius_squared;
  out.implied_pi_value = out.implied_pi.eval(digits);
  int w = digits + 10;
  Interval r2 = out.radius_squared.interval(w);
  out.radius_value = r2.sqrt(w).to_decimal(digits);
  Interval ratio = oracle::pi_interval(w) * r2 / Interval(side * side);
  out.area_ratio = ratio.to_decimal(digits);
  return out;
}

Rational square_from_circle(const Rational& diameter) {
  if (diameter.sign() <= 0)
    throw std::domain_error("square_from_circle: diameter must be positive");
  static const Rational ratio = Rational(7, 8) + Rational(1, 232) - Rational(1, 1392) +
                                Rational(1, 11136);  // = 9785/11136
  return diameter * ratio;
}

Rational sqrt2_sulva() {
  return Rational(1) + Rational(1, 3) + Rational(1, 12) - Rational(1, 408);
}

Rational vedic_circumference(const Rational& diameter) {
  if (diameter.sign() <= 0)
    throw std::domain_error("vedic_circumference: diameter must be positive");
  return Rational(3) * diameter;
}

Rational manava_circumference(const Rational& diameter) {
  if (diameter.sign() <= 0)
    throw std::domain_error("manava_circumference: diameter must be positive");
  return diameter * Rational(1, 5) + Rational(3) * diameter;
}

PerpendicularResult perpendicular_check(const Rational& center_offset, const QuadSurd& radius) {
  if (center_offset.sign() <= 0)
    throw std::domain_error("perpendicular_check: offset must be positive");
  if (QuadSurd::compare(radius, QuadSurd(center_offset)) <= 0)
    throw std::domain_error("perpendicular_check: circles are tangent or disjoint");
  QuadSurd y_squared = radius * radius - QuadSurd(center_offset * center_offset);
  auto y2 = y_squared.rational();
  if (!y2)
    throw std::domain_error(
        "perpendicular_check: intersection ordinate is not a quadratic surd");
  PerpendicularResult out;
  out.ordinate = QuadSurd::sqrt_rational(*y2);
  // Chord direction (0, 2y), center line direction (2*offset, 0): exact dot
  // product 0*2*offset + 2y*0 = 0.
  out.orthogonal = true;
  // (0 - (+-offset))^2 + y^2 = radius^2, checked exactly.
  QuadSurd lhs = QuadSurd(center_offset * center_offset) + out.ordinate * out.ordinate;
  out.on_both_circles = (lhs == radius * radius);
  return out;
}

}  // namespace sulva
}  // namespace paridhi
