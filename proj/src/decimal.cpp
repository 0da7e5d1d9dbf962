#include "paridhi/decimal.hpp"

#include <algorithm>

namespace paridhi {

namespace {

// Half-away-from-zero rounding of x to k fractional digits, as a mantissa.
BigInt round_mantissa(const Rational& x, int k) {
  return div_round(x.num() * pow10(static_cast<unsigned>(k)), x.den(), RoundMode::nearest);
}

std::string mantissa_string(const BigInt& mantissa, int scale) {
  BigInt m = mantissa < 0 ? BigInt(-mantissa) : mantissa;
  std::string digits = m.str();
  std::string sign = (mantissa < 0) ? "-" : "";
  if (scale == 0) return sign + digits;
  if (static_cast<int>(digits.size()) <= scale)
    digits.insert(0, static_cast<std::size_t>(scale) - digits.size() + 1, '0');
  digits.insert(digits.size() - static_cast<std::size_t>(scale), ".");
  return sign + digits;
}

}  // namespace

Decimal to_decimal(const Rational& x, int digits) {
  if (digits < 0) throw std::invalid_argument("to_decimal: negative digit count");
  BigInt scaled = x.num() * pow10(static_cast<unsigned>(digits));
  bool exact = scaled % x.den() == 0;
  Decimal d;
  d.mantissa = div_round(scaled, x.den(), RoundMode::nearest);
  d.scale = digits;
  d.err_ulp = exact ? 0 : 1;
  return d;
}

std::string render(const Decimal& d) { return mantissa_string(d.mantissa, d.scale); }

std::string render(const Decimal& d, int digits) {
  if (digits < 0) throw std::invalid_argument("render: negative digit count");
  if (digits >= d.scale) {
    BigInt m = d.mantissa * pow10(static_cast<unsigned>(digits - d.scale));
    return mantissa_string(m, digits);
  }
  BigInt m = div_round(d.mantissa, pow10(static_cast<unsigned>(d.scale - digits)), RoundMode::nearest);
  return mantissa_string(m, digits);
}

std::string render_rational(const Rational& x, int digits) {
  return render(to_decimal(x, digits));
}

Interval::Interval(Rational lo, Rational hi) : lo_(std::move(lo)), hi_(std::move(hi)) {
  if (hi_ < lo_) throw std::logic_error("Interval: lo > hi");
}

Interval operator+(const Interval& a, const Interval& b) {
  return Interval(a.lo_ + b.lo_, a.hi_ + b.hi_);
}
Interval operator-(const Interval& a, const Interval& b) {
  return Interval(a.lo_ - b.hi_, a.hi_ - b.lo_);
}
Interval operator*(const Interval& a, const Interval& b) {
  Rational c[4] = {a.lo_ * b.lo_, a.lo_ * b.hi_, a.hi_ * b.lo_, a.hi_ * b.hi_};
  return Interval(*std::min_element(c, c + 4), *std::max_element(c, c + 4));
}
Interval operator/(const Interval& a, const Interval& b) {
  if (b.contains_zero()) throw std::domain_error("Interval: division by interval containing zero");
  Rational c[4] = {a.lo_ / b.lo_, a.lo_ / b.hi_, a.hi_ / b.lo_, a.hi_ / b.hi_};
  return Interval(*std::min_element(c, c + 4), *std::max_element(c, c + 4));
}

Interval Interval::sqrt(int digits) const {
  if (lo_.sign() < 0) throw std::domain_error("Interval: sqrt of negative interval");
  unsigned w = static_cast<unsigned>(digits);
  BigInt p = pow10(w);
  BigInt p2 = p * p;
  // floor endpoint: isqrt(floor(lo*10^2w)) <= sqrt(lo)*10^w
  BigInt lo_scaled = div_round(lo_.num() * p2, lo_.den(), RoundMode::floor);
  BigInt hi_scaled = div_round(hi_.num() * p2, hi_.den(), RoundMode::ceil);
  BigInt rlo = isqrt(lo_scaled, RoundMode::floor);
  BigInt rhi = isqrt(hi_scaled, RoundMode::ceil);
  if (is_point() && rlo == rhi) return Interval(Rational(rlo, p));  // exact root
  return Interval(Rational(rlo, p), Rational(rhi, p));
}

Decimal Interval::to_decimal(int scale) const {
  Decimal d;
  d.scale = scale;
  if (is_point()) {
    d = paridhi::to_decimal(lo_, scale);
    return d;
  }
  Rational mid = (lo_ + hi_) * Rational(1, 2);
  d.mantissa = round_mantissa(mid, scale);
  // Everything the interval may hold must stay within err_ulp of the mantissa.
  Rational ulp(1, pow10(static_cast<unsigned>(scale)));
  Rational center = Rational(d.mantissa, pow10(static_cast<unsigned>(scale)));
  Rational reach = std::max(center - lo_, hi_ - center);
  // ceil(reach / ulp)
  BigInt e = div_round(reach.num() * pow10(static_cast<unsigned>(scale)), reach.den(), RoundMode::ceil);
  d.err_ulp = e < 0 ? BigInt(0) : e;
  return d;
}

Decimal relative_error(const Decimal& approx, const Decimal& reference) {
  Interval a = Interval::of(approx);
  Interval r = Interval::of(reference);
  if (r.contains_zero()) throw std::domain_error("relative_error: reference includes zero");
  Interval rel = (a - r) / r;
  // A relative-error interval wider than 10% certifies nothing useful.
  if (rel.width() >= Rational(1, 10))
    throw std::domain_error("relative_error: insufficient precision to certify result");
  int scale = std::max(approx.scale, reference.scale);
  return rel.to_decimal(scale);
}

namespace {

// Rounding of an interval endpoint at k digits; certified when both endpoints
// round to the same mantissa.
std::optional<BigInt> certified_round(const Interval& iv, int k) {
  BigInt lo = round_mantissa(iv.lo(), k);
  BigInt hi = round_mantissa(iv.hi(), k);
  if (lo == hi) return lo;
  return std::nullopt;
}

}  // namespace

int digits_correct(const Decimal& approx, const Decimal& reference) {
  int cap = std::min(approx.scale, reference.scale);
  Interval a = Interval::of(approx);
  Interval r = Interval::of(reference);
  int best = -1;
  for (int k = 0; k <= cap; ++k) {
    auto ra = certified_round(a, k);
    auto rr = certified_round(r, k);
    if (ra && rr) {
      if (*ra == *rr) best = k;
      continue;
    }
    // A digit near a rounding boundary cannot be pinned, but equality is
    // still decidable: values at least one ulp apart round differently.
    Rational gap = std::max(r.lo() - a.hi(), a.lo() - r.hi());
    if (gap >= Rational(1, pow10(static_cast<unsigned>(k)))) continue;
    throw std::domain_error("digits_correct: insufficient certified precision");
  }
  return best < 0 ? 0 : best;  // 0: not even the units digit agrees
}

}  // namespace paridhi
