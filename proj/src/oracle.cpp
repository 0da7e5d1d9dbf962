#include "paridhi/oracle.hpp"

#include <mutex>

namespace paridhi {
namespace oracle {

namespace {

constexpr int kCacheDigits = 240;  // cap 200 plus guard room for every caller

// Scaled arctan(1/x): returns s with |s - atan(1/x)*M| <= 2*terms + 2,
// M = 10^scale. Each truncated division costs at most one ulp and deficits
// shrink geometrically under the x^2 divisions.
BigInt arctan_inv_scaled(const BigInt& M, long x, long& terms) {
  BigInt power = M / x;
  BigInt xx = BigInt(x) * x;
  BigInt sum = 0;
  long j = 0;
  while (power != 0) {
    BigInt term = power / (2 * j + 1);
    sum += (j % 2 == 0) ? term : -term;
    power /= xx;
    ++j;
  }
  terms += j;
  return sum;
}

// pi*10^(digits+guard) via Machin: pi = 16*atan(1/5) - 4*atan(1/239).
BigInt pi_mantissa_uncached(int digits) {
  const int guard = 12;
  BigInt M = pow10(static_cast<unsigned>(digits + guard));
  long terms = 0;
  BigInt a5 = arctan_inv_scaled(M, 5, terms);
  BigInt a239 = arctan_inv_scaled(M, 239, terms);
  BigInt pi_scaled_guarded = 16 * a5 - 4 * a239;
  // error <= 16*(2t5+2) + 4*(2t239+2) < 40*terms + 64 ulps at the guard scale
  BigInt bound = 40 * BigInt(terms) + 64;
  if (bound * 2 >= pow10(guard))
    throw std::logic_error("pi oracle: guard digits exhausted");
  return div_round(pi_scaled_guarded, pow10(guard), RoundMode::nearest);
}

struct PiCache {
  std::mutex mutex;
  BigInt mantissa;  // pi * 10^kCacheDigits, error <= 1 ulp
  bool ready = false;
};

PiCache& cache() {
  static PiCache c;
  return c;
}

}  // namespace

BigInt pi_scaled(int digits) {
  if (digits < 1 || digits > kCacheDigits - 2)
    throw std::invalid_argument("pi oracle: digits out of range");
  PiCache& c = cache();
  std::lock_guard<std::mutex> lock(c.mutex);
  if (!c.ready) {
    c.mantissa = pi_mantissa_uncached(kCacheDigits);
    c.ready = true;
  }
  // Slicing keeps the error within 1 ulp: inherited 10^-(cache-digits) plus
  // half an ulp from rounding.
  return div_round(c.mantissa, pow10(static_cast<unsigned>(kCacheDigits - digits)),
                   RoundMode::nearest);
}

Decimal pi(int digits) {
  if (digits < 1 || digits > kMaxPiDigits)
    throw std::invalid_argument("pi oracle: digits must be in [1, 200]");
  Decimal d;
  d.mantissa = pi_scaled(digits);
  d.scale = digits;
  d.err_ulp = 1;
  return d;
}

Interval pi_interval(int digits) {
  return Interval::of(pi(digits));
}

BigInt pi_scaled_arcsin(int digits) {
  if (digits < 1 || digits > kMaxPiDigits)
    throw std::invalid_argument("pi oracle: digits out of range");
  const int guard = 12;
  BigInt M = pow10(static_cast<unsigned>(digits + guard));
  // pi = 6*arcsin(1/2) = 3 * sum_{j>=0} C(2j,j) / (16^j (2j+1))
  // term_{j+1}/term_j = (2j+1)(2j+2)/((j+1)^2 * 16) * (2j+1)/(2j+3)
  BigInt sum = 0;
  BigInt c = M;  // C(2j,j)/16^j scaled; exact until divisions truncate
  long j = 0;
  long ops = 0;
  while (c != 0) {
    sum += c / (2 * j + 1);
    // C(2j+2,j+1) = C(2j,j) * (2j+1)(2j+2)/(j+1)^2; then /16
    c = c * ((2 * j + 1) * (2 * j + 2));
    c /= (j + 1) * (j + 1);
    c /= 16;
    ++j;
    ops += 3;
  }
  sum *= 3;
  BigInt bound = 3 * (BigInt(ops) + BigInt(j) + 4);
  if (bound * 2 >= pow10(guard))
    throw std::logic_error("pi arcsin oracle: guard digits exhausted");
  return div_round(sum, pow10(guard), RoundMode::nearest);
}

Decimal sqrt_rat(const Rational& x, int digits) {
  if (x.sign() < 0) throw std::domain_error("sqrt oracle: negative argument");
  return Interval(x).sqrt(digits + 8).to_decimal(digits);
}

Decimal sin_deg(const Rational& theta_deg, int digits) {
  if (digits < 1) throw std::invalid_argument("sin oracle: digits must be positive");
  if (theta_deg.sign() < 0 || theta_deg > Rational(180))
    throw std::domain_error("sin oracle: angle outside [0, 180] degrees");
  Rational theta = theta_deg;
  if (theta > Rational(90)) theta = Rational(180) - theta;  // sin(180-t) = sin t
  // Exact anchor values.
  if (theta.is_zero()) return Decimal{0, digits, 0};
  if (theta == Rational(90)) return Decimal{pow10(static_cast<unsigned>(digits)), digits, 0};
  if (theta == Rational(30)) {
    Decimal d = to_decimal(Rational(1, 2), digits);
    return d;
  }
  const int guard = 12;
  int w = digits + guard;
  BigInt M = pow10(static_cast<unsigned>(w));
  // radians: x = theta * pi / 180, |error| <= 2 ulp at scale w
  BigInt pi_m = pi_scaled(w);
  BigInt X = div_round(theta.num() * pi_m, theta.den() * 180, RoundMode::nearest);
  // Taylor with truncated scaled divisions; x <= pi/2 so terms shrink fast.
  BigInt term = X;
  BigInt sum = X;
  long j = 1;
  long ops = 0;
  while (term != 0) {
    term = term * X / M;
    term = term * X / M;
    term /= (2 * j) * (2 * j + 1);
    sum += (j % 2 == 1) ? -term : term;
    ++j;
    ops += 3;
  }
  // error budget: input 2 ulp (|cos| <= 1), ~3 ulp per iteration with
  // geometric damping, tail <= 1 ulp
  BigInt bound = 4 * BigInt(ops) + 16;
  if (bound * 2 >= pow10(guard))
    throw std::logic_error("sin oracle: guard digits exhausted");
  Decimal d;
  d.mantissa = div_round(sum, pow10(guard), RoundMode::nearest);
  d.scale = digits;
  d.err_ulp = 1;
  return d;
}

}  // namespace oracle
}  // namespace paridhi
