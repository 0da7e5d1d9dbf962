#pragma once

#include "paridhi/decimal.hpp"
#include "paridhi/rational.hpp"
#include "paridhi/surd.hpp"

#include <optional>

namespace paridhi {
namespace jaina {

// Minor circular segment: diameter d, chord c, arrow (sagitta) h with
// 0 < h <= d/2 and the exact consistency c^2 = 4h(d-h). The chord or arrow
// may be a quadratic surd even for rational inputs.
struct SegmentSpec {
  Rational d;
  QuadSurd c;
  QuadSurd h;
};

// c = sqrt(4h(d-h)), exact; requires 0 < h <= d/2.
QuadSurd chord_from_arrow(const Rational& h, const Rational& d);

// h = (d - sqrt(d^2 - c^2))/2 (minor arrow); requires 0 < c <= d.
QuadSurd arrow_from_chord(const Rational& c, const Rational& d);

SegmentSpec segment_from_arrow(const Rational& h, const Rational& d);
SegmentSpec segment_from_chord(const Rational& c, const Rational& d);

// A historical formula value: exact when it stays inside one Q(sqrt(k))
// (including denesting), always evaluated with a certified error bound.
struct FormulaValue {
  std::optional<QuadSurd> exact;
  Decimal value;
};

// Arc rule a = sqrt(6h^2 + c^2).
FormulaValue arc_length(const QuadSurd& c, const QuadSurd& h, int digits = 15);

// Mahavira segment area (sqrt(10)/4) * c * h.
FormulaValue segment_area_mahavira(const QuadSurd& c, const QuadSurd& h, int digits = 15);

// Sridhara segment area (sqrt(10)/3) * h(c+h)/2.
FormulaValue segment_area_sridhara(const QuadSurd& c, const QuadSurd& h, int digits = 15);

// Area = circumference * diameter / 4.
Rational area_from_circumference(const Rational& circumference, const Rational& diameter);
Decimal area_from_circumference(const Decimal& circumference, const Rational& diameter,
                                int digits = 15);

// The sqrt(10) rule carried out in integers: isqrt(10*d^2) rounded down.
BigInt jambudvipa_circumference(const BigInt& d_yojana = BigInt(100000));

// Virasena's verse. Interpreted reading (default): (355/113)*d.
// Literal reading: (16d + 16)/113 + 3d.
Rational virasena_circumference(const Rational& d, bool literal = false);

}  // namespace jaina
}  // namespace paridhi
