#pragma once

#include "paridhi/decimal.hpp"
#include "paridhi/rational.hpp"

namespace paridhi {
namespace oracle {

inline constexpr int kMaxPiDigits = 200;

// pi with absolute error < 10^-digits (err_ulp <= 1), 1 <= digits <= 200.
// Machin's identity in exact scaled integers; the full mantissa is computed
// once and cached behind a mutex, so results are call-order independent.
Decimal pi(int digits);

// Mantissa of pi at 10^-digits with error <= 1 ulp (internal building block).
BigInt pi_scaled(int digits);

// pi via the structurally different central-binomial series 6*arcsin(1/2);
// exists for cross-checking the primary oracle in tests.
BigInt pi_scaled_arcsin(int digits);

// sin of theta in degrees, 0 <= theta <= 180, absolute error < 10^-digits.
// Exact at 0, 30, 90, 150, 180 (err_ulp = 0).
Decimal sin_deg(const Rational& theta_deg, int digits);

// sqrt of a non-negative rational with error <= 1 ulp.
Decimal sqrt_rat(const Rational& x, int digits);

// pi as a certified interval (handy for exact comparisons against rationals).
Interval pi_interval(int digits);

}  // namespace oracle
}  // namespace paridhi
