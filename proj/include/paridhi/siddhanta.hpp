#pragma once

#include "paridhi/decimal.hpp"
#include "paridhi/rational.hpp"
#include "paridhi/surd.hpp"

#include <map>
#include <optional>
#include <vector>

namespace paridhi {
namespace siddhanta {

// 62832/20000 reduced.
Rational aryabhata_pi();

// Rsine table: rsines[i] = nearest integer to R*sin((i+1)*step), diffs are the
// first differences. step*entries spans exactly 90 degrees.
struct SineTable {
  long R = 0;
  long step_arcmin = 225;
  std::vector<BigInt> rsines;
  std::vector<BigInt> diffs;
};
SineTable sine_table(long R, int entries = 24);

std::string sine_table_csv(const SineTable& table);

// Exact rational 4*theta*(180-theta) / (40500 - theta*(180-theta)), theta in
// degrees within [0, 180].
Rational bhaskara1_sine(const Rational& theta_deg);

// Linear interpolation on the table's first differences; exact at nodes.
Rational interpolate_rsine(const SineTable& table, const Rational& theta_deg);

// Arc from chord c, diameter d, circumference p:
//   a = (p/2) * (1 - sqrt(1 - 5c/(c+4d))).
// exact_over_p is the rational or surd multiplier a/p; both display forms of
// the rule are evaluated independently and must agree.
struct ArcResult {
  Rational radicand;                  // 1 - 5c/(c+4d), exact
  QuadSurd exact_over_p;              // a/p, exact
  std::optional<QuadSurd> exact_arc;  // present when p is rational
  Decimal arc;                        // simplified form, evaluated
  Decimal arc_unsimplified;           // p/2 - sqrt(p^2/4 - 5p^2 c/(4(c+4d)))
};
ArcResult bhaskara2_arc(const Rational& c, const Rational& d, const Rational& p,
                        int digits = 15);
ArcResult bhaskara2_arc_oracle_p(const Rational& c, const Rational& d, int digits = 15);

// Inscribed-polygon doubling from the hexagon: S_{2n}^2 = S_n^2/4 + (r - v)^2
// with v = sqrt(r^2 - S_n^2/4). Integer mode carries X = S^2 as an integer,
// rounding the quarter division and the inner root per stage with the policy
// entry for that stage, then extracts the perimeter with the final entry.
struct DoublingStep {
  long sides;   // polygon size after the stage
  BigInt x;     // carried S^2
  BigInt u;     // rounded X/4
  BigInt v;     // rounded sqrt(r^2 - u)
};
struct IntegerDoubling {
  long sides;
  BigInt perimeter;  // rounded sqrt(sides^2 * X_final)
  std::vector<DoublingStep> trace;
};
// policy: either one mode per stage plus one final mode (size doublings+1),
// or a single broadcast mode.
IntegerDoubling polygon_doubling_integer(const BigInt& diameter, int doublings,
                                         std::vector<RoundMode> policy);

struct PrecisionDoubling {
  long sides;
  Decimal perimeter;
  Decimal ratio;  // perimeter / diameter
  Interval ratio_interval;
  std::vector<Decimal> stage_perimeters;
};
PrecisionDoubling polygon_doubling_hp(const Rational& diameter, int doublings,
                                      int digits = 15);

// Exhaustive enumeration of all 3^(doublings+1) rounding policies.
struct PolicySearch {
  std::map<BigInt, long> histogram;                // perimeter -> policy count
  std::vector<std::vector<RoundMode>> target_hits; // policies reaching `target`
  BigInt all_floor, all_nearest, all_ceil;
};
PolicySearch policy_search(const BigInt& diameter, int doublings, const BigInt& target);

const char* round_mode_name(RoundMode mode);
RoundMode parse_round_mode(const std::string& name);

}  // namespace siddhanta
}  // namespace paridhi
