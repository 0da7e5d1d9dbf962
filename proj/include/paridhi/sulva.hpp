#pragma once

#include "paridhi/decimal.hpp"
#include "paridhi/rational.hpp"
#include "paridhi/surd.hpp"

#include <optional>

namespace paridhi {
namespace sulva {

enum class CirclingMethod { baudhayana, manava, maitrayaniya };

struct ConstructionResult {
  CirclingMethod method;
  Rational side;
  // radius^2 is always exact in one quadratic field; the radius itself is a
  // quadratic surd only when it does not nest (Baudhayana, Maitrayaniya).
  QuadSurd radius_squared;
  std::optional<QuadSurd> radius;
  Decimal radius_value;
  QuadSurd implied_pi;  // side^2 / radius^2, exact
  Decimal implied_pi_value;
  Decimal area_ratio;  // circle area / square area, against the pi oracle
};

// Circle the square: radius rules
//   baudhayana   r = side*(2+sqrt(2))/6
//   manava       r^2 = side^2*(186+24*sqrt(17))/900   (nested radius)
//   maitrayaniya r = side*9/16
ConstructionResult circle_from_square(const Rational& side, CirclingMethod method,
                                      int digits = 15);

// Square the circle: side = diameter * 9785/11136
// (the four-term rule 7/8 + 1/232 - 1/1392 + 1/11136).
Rational square_from_circle(const Rational& diameter);

// 1 + 1/3 + 1/12 - 1/408 = 577/408.
Rational sqrt2_sulva();

// "1 pada across, 3 padas around": circumference = 3d.
Rational vedic_circumference(const Rational& diameter);

// "a fifth of the diameter and three times the diameter": 16d/5.
Rational manava_circumference(const Rational& diameter);

// Equal circles centered at (-offset, 0) and (+offset, 0) intersect at
// (0, +-y); the joining chord is exactly perpendicular to the center line.
struct PerpendicularResult {
  QuadSurd ordinate;  // y > 0; intersection points are (0, +-y)
  bool orthogonal;    // exact dot-product verification
  bool on_both_circles;
};
PerpendicularResult perpendicular_check(const Rational& center_offset, const QuadSurd& radius);

}  // namespace sulva
}  // namespace paridhi
