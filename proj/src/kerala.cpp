#include "paridhi/kerala.hpp"

namespace paridhi {
namespace kerala {

namespace {

// Balanced pairwise sum of terms [lo, hi): keeps intermediate denominators
// small and is exactly associative, so chunking cannot change the result.
Rational sum_terms(long lo, long hi) {
  if (hi - lo == 1) {
    long k = lo;
    return Rational((k % 2 == 1) ? 1 : -1, 2 * k - 1);
  }
  long mid = lo + (hi - lo) / 2;
  return sum_terms(lo, mid) + sum_terms(mid, hi);
}

}  // namespace

Rational leibniz_partial(long n) {
  if (n < 1) throw std::domain_error("leibniz_partial: n must be >= 1");
  if (n > kExactTermCap)
    throw std::domain_error("leibniz_partial: n exceeds the exact-arithmetic cap");
  return sum_terms(1, n + 1);
}

Rational end_correction(long n) {
  if (n < 1) throw std::domain_error("end_correction: n must be >= 1");
  BigInt bn(n);
  return Rational(bn * bn + 1, 4 * bn * bn * bn + 5 * bn);
}

SeriesEstimate corrected_pi(long n, CorrectionSign sign) {
  SeriesEstimate est;
  est.n = n;
  est.partial = leibniz_partial(n);
  Rational magnitude = end_correction(n);
  bool negate = (sign == CorrectionSign::empirical) ? (n % 2 == 1) : (n % 2 == 0);
  est.correction = negate ? -magnitude : magnitude;
  est.corrected = est.partial + est.correction;
  est.pi_estimate = Rational(4) * est.corrected;
  return est;
}

Rational madhava_value() { return Rational(BigInt("2827433388233"), BigInt("900000000000")); }

}  // namespace kerala
}  // namespace paridhi
