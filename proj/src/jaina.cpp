#include "paridhi/jaina.hpp"

#include "paridhi/oracle.hpp"

namespace paridhi {
namespace jaina {

namespace {

// Shared envelope: exact surd when representable, interval evaluation always.
FormulaValue make_value(const std::optional<QuadSurd>& exact, const Interval& approx,
                        int digits) {
  FormulaValue out;
  out.exact = exact;
  if (exact)
    out.value = exact->eval(digits);
  else
    out.value = approx.to_decimal(digits);
  return out;
}

const QuadSurd& sqrt10() {
  static const QuadSurd root(0, 1, 10, 1);
  return root;
}

}  // namespace

QuadSurd chord_from_arrow(const Rational& h, const Rational& d) {
  if (h.sign() <= 0 || h > d * Rational(1, 2))
    throw std::domain_error("chord_from_arrow: need 0 < h <= d/2");
  return QuadSurd::sqrt_rational(Rational(4) * h * (d - h));
}

QuadSurd arrow_from_chord(const Rational& c, const Rational& d) {
  if (c.sign() <= 0 || c > d) throw std::domain_error("arrow_from_chord: need 0 < c <= d");
  QuadSurd root = QuadSurd::sqrt_rational(d * d - c * c);
  return (QuadSurd(d) - root) * QuadSurd(Rational(1, 2));
}

SegmentSpec segment_from_arrow(const Rational& h, const Rational& d) {
  SegmentSpec s{d, chord_from_arrow(h, d), QuadSurd(h)};
  return s;
}

SegmentSpec segment_from_chord(const Rational& c, const Rational& d) {
  SegmentSpec s{d, QuadSurd(c), arrow_from_chord(c, d)};
  return s;
}

FormulaValue arc_length(const QuadSurd& c, const QuadSurd& h, int digits) {
  if (h.sign() <= 0 || c.sign() <= 0)
    throw std::domain_error("arc_length: chord and arrow must be positive");
  int w = digits + 10;
  std::optional<QuadSurd> radicand;
  try {
    radicand = QuadSurd(Rational(6)) * h * h + c * c;
  } catch (const std::domain_error&) {
    radicand = std::nullopt;  // mixed radicands: decimal path only
  }
  if (radicand) {
    std::optional<QuadSurd> exact = QuadSurd::sqrt_denested(*radicand);
    Interval iv = radicand->interval(w).sqrt(w);
    return make_value(exact, iv, digits);
  }
  Interval iv = (Interval(Rational(6)) * h.interval(w) * h.interval(w) +
                 c.interval(w) * c.interval(w))
                    .sqrt(w);
  return make_value(std::nullopt, iv, digits);
}

FormulaValue segment_area_mahavira(const QuadSurd& c, const QuadSurd& h, int digits) {
  if (h.sign() <= 0 || c.sign() < 0)
    throw std::domain_error("segment_area_mahavira: invalid segment");
  int w = digits + 10;
  std::optional<QuadSurd> exact;
  try {
    QuadSurd ch = c * h;  // requires one shared field
    exact = sqrt10() * ch * QuadSurd(Rational(1, 4));  // and c*h in Q(sqrt(10)) or Q
  } catch (const std::domain_error&) {
    exact = std::nullopt;
  }
  if (exact) return make_value(exact, Interval(Rational(0)), digits);
  Interval iv = Interval(Rational(10)).sqrt(w) * c.interval(w) * h.interval(w) *
                Interval(Rational(1, 4));
  return make_value(std::nullopt, iv, digits);
}

FormulaValue segment_area_sridhara(const QuadSurd& c, const QuadSurd& h, int digits) {
  if (h.sign() <= 0 || c.sign() < 0)
    throw std::domain_error("segment_area_sridhara: invalid segment");
  int w = digits + 10;
  std::optional<QuadSurd> exact;
  try {
    QuadSurd f = h * (c + h);
    exact = sqrt10() * f * QuadSurd(Rational(1, 6));
  } catch (const std::domain_error&) {
    exact = std::nullopt;
  }
  if (exact) return make_value(exact, Interval(Rational(0)), digits);
  Interval f = h.interval(w) * (c.interval(w) + h.interval(w)) * Interval(Rational(1, 2));
  Interval iv = Interval(Rational(10)).sqrt(w) * f * Interval(Rational(1, 3));
  return make_value(std::nullopt, iv, digits);
}

Rational area_from_circumference(const Rational& circumference, const Rational& diameter) {
  if (circumference.sign() <= 0 || diameter.sign() <= 0)
    throw std::domain_error("area_from_circumference: inputs must be positive");
  return circumference * diameter * Rational(1, 4);
}

Decimal area_from_circumference(const Decimal& circumference, const Rational& diameter,
                                int digits) {
  if (diameter.sign() <= 0)
    throw std::domain_error("area_from_circumference: diameter must be positive");
  Interval iv = Interval::of(circumference) * Interval(diameter) * Interval(Rational(1, 4));
  return iv.to_decimal(digits);
}

BigInt jambudvipa_circumference(const BigInt& d_yojana) {
  if (d_yojana <= 0) throw std::domain_error("jambudvipa_circumference: diameter must be positive");
  return isqrt(10 * d_yojana * d_yojana, RoundMode::floor);
}

Rational virasena_circumference(const Rational& d, bool literal) {
  if (d.sign() <= 0) throw std::domain_error("virasena_circumference: diameter must be positive");
  if (literal) return (Rational(16) * d + Rational(16)) / Rational(113) + Rational(3) * d;
  return Rational(355, 113) * d;
}

}  // namespace jaina
}  // namespace paridhi
