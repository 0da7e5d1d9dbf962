#pragma once

#include "paridhi/decimal.hpp"
#include "paridhi/rational.hpp"

namespace paridhi {
namespace kerala {

inline constexpr long kExactTermCap = 10000;  // exact rationals stay desk-scale

// S_n = sum_{k=1..n} (-1)^(k-1)/(2k-1), exact.
Rational leibniz_partial(long n);

// Correction magnitude (n^2+1)/(4n^3+5n).
Rational end_correction(long n);

// Sign applied to the correction: `empirical` uses (-1)^n (the sign of the
// first omitted term, which provably improves the estimate); `literal` keeps
// the recorded (-1)^(n-1).
enum class CorrectionSign { literal, empirical };

struct SeriesEstimate {
  long n = 0;
  Rational partial;      // S_n
  Rational correction;   // signed term actually added
  Rational corrected;    // S_n + correction
  Rational pi_estimate;  // 4 * corrected
};
SeriesEstimate corrected_pi(long n, CorrectionSign sign = CorrectionSign::empirical);

// 2827433388233 / 900000000000.
Rational madhava_value();

}  // namespace kerala
}  // namespace paridhi
