#include "paridhi/siddhanta.hpp"

#include "paridhi/oracle.hpp"

#include <sstream>

namespace paridhi {
namespace siddhanta {

Rational aryabhata_pi() { return Rational(62832, 20000); }

SineTable sine_table(long R, int entries) {
  if (R <= 0 || R > 1000000000L) throw std::invalid_argument("sine_table: R out of range");
  if (entries <= 0 || 5400 % entries != 0)
    throw std::invalid_argument("sine_table: entries must divide 90 degrees evenly");
  SineTable table;
  table.R = R;
  table.step_arcmin = 5400 / entries;
  for (int digits = 25;; digits += 10) {
    table.rsines.clear();
    bool certified = true;
    for (int i = 1; i <= entries && certified; ++i) {
      Rational theta(static_cast<long long>(i) * table.step_arcmin, 60);
      Decimal s = oracle::sin_deg(theta, digits);
      // Round R*sin to the nearest integer; both interval ends must agree.
      Interval scaled = Interval(Rational(R)) * Interval::of(s);
      BigInt lo = div_round(scaled.lo().num(), scaled.lo().den(), RoundMode::nearest);
      BigInt hi = div_round(scaled.hi().num(), scaled.hi().den(), RoundMode::nearest);
      if (lo != hi) {
        certified = false;
        break;
      }
      table.rsines.push_back(lo);
    }
    if (certified) break;
    if (digits > 95) throw std::logic_error("sine_table: rounding could not be certified");
  }
  table.diffs.resize(table.rsines.size());
  for (std::size_t i = 0; i < table.rsines.size(); ++i)
    table.diffs[i] = table.rsines[i] - (i ? table.rsines[i - 1] : BigInt(0));
  return table;
}

std::string sine_table_csv(const SineTable& table) {
  std::ostringstream out;
  out << "index,arcmin,rsine,diff\n";
  for (std::size_t i = 0; i < table.rsines.size(); ++i)
    out << (i + 1) << ',' << (static_cast<long long>(i + 1) * table.step_arcmin) << ','
        << table.rsines[i].str() << ',' << table.diffs[i].str() << '\n';
  return out.str();
}

Rational bhaskara1_sine(const Rational& theta_deg) {
  if (theta_deg.sign() < 0 || theta_deg > Rational(180))
    throw std::domain_error("bhaskara1_sine: angle outside [0, 180] degrees");
  Rational product = theta_deg * (Rational(180) - theta_deg);
  return Rational(4) * product / (Rational(40500) - product);
}

Rational interpolate_rsine(const SineTable& table, const Rational& theta_deg) {
  if (theta_deg.sign() < 0 || theta_deg > Rational(90))
    throw std::domain_error("interpolate_rsine: angle outside [0, 90] degrees");
  Rational arcmin = theta_deg * Rational(60);
  Rational step(table.step_arcmin);
  // Node i (1-based) sits at i*step; value between nodes is linear in the
  // difference entry of the enclosing interval.
  Rational pos = arcmin / step;
  BigInt idx = div_round(pos.num(), pos.den(), RoundMode::floor);
  long i = static_cast<long>(idx);
  if (i >= static_cast<long>(table.rsines.size())) return Rational(table.rsines.back());
  Rational base = (i == 0) ? Rational(0) : Rational(table.rsines[static_cast<std::size_t>(i - 1)]);
  Rational frac = pos - Rational(idx);
  return base + frac * Rational(table.diffs[static_cast<std::size_t>(i)]);
}

namespace {

ArcResult bhaskara2_arc_impl(const Rational& c, const Rational& d, const Interval& p,
                             const std::optional<Rational>& p_exact, int digits) {
  if (c.sign() < 0 || c > d) throw std::domain_error("bhaskara2_arc: need 0 <= c <= d");
  if (!(p.lo().sign() > 0)) throw std::domain_error("bhaskara2_arc: circumference must be positive");
  ArcResult out;
  Rational cpd = c + Rational(4) * d;
  out.radicand = Rational(1) - Rational(5) * c / cpd;
  QuadSurd root = QuadSurd::sqrt_rational(out.radicand);
  out.exact_over_p = (QuadSurd(Rational(1)) - root) * QuadSurd(Rational(1, 2));
  if (p_exact) out.exact_arc = QuadSurd(*p_exact) * out.exact_over_p;
  int w = digits + 10;
  Interval half = Interval(Rational(1, 2));
  Interval simplified =
      p * half * (Interval(Rational(1)) - Interval(out.radicand).sqrt(w));
  out.arc = simplified.to_decimal(digits);
  // Unsimplified display form: p/2 - sqrt(p^2/4 - 5 p^2 c / (4(c+4d))).
  Interval p2 = p * p;
  Interval inner = p2 * Interval(Rational(1, 4)) -
                   p2 * Interval(Rational(5) * c) / Interval(Rational(4) * cpd);
  Interval unsimplified = p * half - inner.sqrt(w);
  out.arc_unsimplified = unsimplified.to_decimal(digits);
  return out;
}

}  // namespace

ArcResult bhaskara2_arc(const Rational& c, const Rational& d, const Rational& p,
                        int digits) {
  return bhaskara2_arc_impl(c, d, Interval(p), p, digits);
}

ArcResult bhaskara2_arc_oracle_p(const Rational& c, const Rational& d, int digits) {
  Interval p = oracle::pi_interval(digits + 12) * Interval(d);
  return bhaskara2_arc_impl(c, d, p, std::nullopt, digits);
}

IntegerDoubling polygon_doubling_integer(const BigInt& diameter, int doublings,
                                         std::vector<RoundMode> policy) {
  if (doublings < 0 || doublings > 20)
    throw std::domain_error("polygon_doubling: doublings must be in [0, 20]");
  if (diameter <= 0 || diameter % 2 != 0)
    throw std::domain_error("polygon_doubling: integer mode needs a positive even diameter");
  if (policy.size() == 1)
    policy.assign(static_cast<std::size_t>(doublings) + 1, policy[0]);
  if (policy.size() != static_cast<std::size_t>(doublings) + 1)
    throw std::invalid_argument("polygon_doubling: policy needs one mode per stage plus a final mode");
  BigInt r = diameter / 2;
  BigInt x = r * r;  // hexagon: S6 = r
  long sides = 6;
  IntegerDoubling out;
  for (int stage = 0; stage < doublings; ++stage) {
    RoundMode mode = policy[static_cast<std::size_t>(stage)];
    BigInt u = div_round(x, 4, mode);
    BigInt v = isqrt(r * r - u, mode);
    x = u + (r - v) * (r - v);
    sides *= 2;
    out.trace.push_back(DoublingStep{sides, x, u, v});
  }
  out.sides = sides;
  out.perimeter = isqrt(BigInt(sides) * sides * x, policy.back());
  return out;
}

PrecisionDoubling polygon_doubling_hp(const Rational& diameter, int doublings, int digits) {
  if (doublings < 0 || doublings > 20)
    throw std::domain_error("polygon_doubling: doublings must be in [0, 20]");
  if (diameter.sign() <= 0)
    throw std::domain_error("polygon_doubling: diameter must be positive");
  int w = digits + 15;
  Rational r = diameter * Rational(1, 2);
  Interval r2{r * r};
  Interval x = r2;  // S^2, exact at the hexagon
  long sides = 6;
  PrecisionDoubling out;
  out.stage_perimeters.push_back((Interval(Rational(sides)) * x.sqrt(w)).to_decimal(digits));
  for (int stage = 0; stage < doublings; ++stage) {
    Interval u = x * Interval(Rational(1, 4));
    Interval v = (r2 - u).sqrt(w);
    Interval sag = Interval(r) - v;
    x = u + sag * sag;
    sides *= 2;
    out.stage_perimeters.push_back((Interval(Rational(sides)) * x.sqrt(w)).to_decimal(digits));
  }
  out.sides = sides;
  Interval perimeter = Interval(Rational(sides)) * x.sqrt(w);
  out.perimeter = perimeter.to_decimal(digits);
  out.ratio_interval = perimeter / Interval(diameter);
  out.ratio = out.ratio_interval.to_decimal(digits);
  return out;
}

PolicySearch policy_search(const BigInt& diameter, int doublings, const BigInt& target) {
  PolicySearch out;
  const RoundMode modes[3] = {RoundMode::floor, RoundMode::ceil, RoundMode::nearest};
  std::size_t slots = static_cast<std::size_t>(doublings) + 1;
  std::vector<std::size_t> pick(slots, 0);
  std::vector<RoundMode> policy(slots);
  while (true) {
    for (std::size_t i = 0; i < slots; ++i) policy[i] = modes[pick[i]];
    BigInt perimeter = polygon_doubling_integer(diameter, doublings, policy).perimeter;
    ++out.histogram[perimeter];
    if (perimeter == target) out.target_hits.push_back(policy);
    std::size_t i = 0;
    while (i < slots && ++pick[i] == 3) pick[i++] = 0;
    if (i == slots) break;
  }
  out.all_floor =
      polygon_doubling_integer(diameter, doublings, {RoundMode::floor}).perimeter;
  out.all_nearest =
      polygon_doubling_integer(diameter, doublings, {RoundMode::nearest}).perimeter;
  out.all_ceil =
      polygon_doubling_integer(diameter, doublings, {RoundMode::ceil}).perimeter;
  return out;
}

const char* round_mode_name(RoundMode mode) {
  switch (mode) {
    case RoundMode::floor: return "floor";
    case RoundMode::ceil: return "ceil";
    case RoundMode::nearest: return "nearest";
  }
  return "?";
}

RoundMode parse_round_mode(const std::string& name) {
  if (name == "floor") return RoundMode::floor;
  if (name == "ceil") return RoundMode::ceil;
  if (name == "nearest") return RoundMode::nearest;
  throw std::invalid_argument("unknown rounding mode '" + name + "'");
}

}  // namespace siddhanta
}  // namespace paridhi
