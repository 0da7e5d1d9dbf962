#include "paridhi/bigint.hpp"

#include <boost/multiprecision/miller_rabin.hpp>

#include <map>
#include <random>

namespace paridhi {

BigInt pow10(unsigned k) {
  BigInt r = 1;
  BigInt base = 10;
  while (k) {
    if (k & 1u) r *= base;
    base *= base;
    k >>= 1u;
  }
  return r;
}

BigInt isqrt(const BigInt& n, RoundMode mode) {
  if (n < 0) throw std::domain_error("isqrt: negative argument");
  if (n == 0) return 0;
  // Newton from above; the trailing correction loops make the result exact
  // regardless of how the iteration lands.
  unsigned bits = boost::multiprecision::msb(n) + 1;
  BigInt x = BigInt(1) << (bits / 2 + 1);
  while (true) {
    BigInt y = (x + n / x) >> 1;
    if (y >= x) break;
    x = y;
  }
  while (x * x > n) --x;
  while ((x + 1) * (x + 1) <= n) ++x;
  // x = floor(sqrt(n))
  switch (mode) {
    case RoundMode::floor:
      return x;
    case RoundMode::ceil:
      return (x * x == n) ? x : x + 1;
    case RoundMode::nearest: {
      if (x * x == n) return x;
      BigInt lo = n - x * x;
      BigInt hi = (x + 1) * (x + 1) - n;
      return (lo < hi) ? x : x + 1;  // lo == hi impossible; larger wins anyway
    }
  }
  throw std::logic_error("isqrt: bad mode");
}

BigInt div_round(const BigInt& num, const BigInt& den, RoundMode mode) {
  if (den <= 0) throw std::domain_error("div_round: denominator must be positive");
  BigInt q = num / den;  // truncates toward zero
  BigInt r = num - q * den;
  switch (mode) {
    case RoundMode::floor:
      if (r < 0) --q;
      return q;
    case RoundMode::ceil:
      if (r > 0) ++q;
      return q;
    case RoundMode::nearest: {
      BigInt twice = (r < 0 ? BigInt(-r) : r) * 2;
      if (twice >= den) {  // half rounds away from zero
        if (num >= 0)
          ++q;
        else
          --q;
      }
      return q;
    }
  }
  throw std::logic_error("div_round: bad mode");
}

namespace {

bool is_probable_prime(const BigInt& n) {
  if (n < 2) return false;
  static thread_local std::mt19937_64 rng(0x5eedULL);
  return boost::multiprecision::miller_rabin_test(n, 32, rng);
}

BigInt pollard_rho(const BigInt& n) {
  // n odd composite with no factor below 10^4 and not a perfect square.
  static thread_local std::mt19937_64 rng(0xa11ceULL);
  while (true) {
    BigInt c = BigInt(rng() % 1000000) + 1;
    BigInt x = BigInt(rng() % 1000000) + 2;
    BigInt y = x, d = 1;
    while (d == 1) {
      x = (x * x + c) % n;
      y = (y * y + c) % n;
      y = (y * y + c) % n;
      BigInt diff = x > y ? BigInt(x - y) : BigInt(y - x);
      if (diff == 0) break;  // cycle without factor; retry with new c
      d = boost::multiprecision::gcd(diff, n);
    }
    if (d != 1 && d != n) return d;
  }
}

void factor_into(BigInt n, std::map<BigInt, unsigned>& out) {
  if (n == 1) return;
  if (is_probable_prime(n)) {
    ++out[n];
    return;
  }
  BigInt s = isqrt(n, RoundMode::floor);
  if (s * s == n) {
    std::map<BigInt, unsigned> inner;
    factor_into(s, inner);
    for (const auto& [p, e] : inner) out[p] += 2 * e;
    return;
  }
  BigInt d = pollard_rho(n);
  factor_into(d, out);
  factor_into(n / d, out);
}

}  // namespace

SquareSplit split_square(const BigInt& m) {
  if (m < 0) throw std::domain_error("split_square: negative argument");
  SquareSplit result{1, 1};
  if (m <= 1) {
    result.square_free = m;
    return result;
  }
  BigInt rest = m;
  // Trial division by 2 and odd numbers up to 10^4 strips every small prime.
  auto strip = [&](const BigInt& p) {
    unsigned e = 0;
    while (rest % p == 0) {
      rest /= p;
      ++e;
    }
    if (e) {
      for (unsigned i = 0; i + 1 < e; i += 2) result.square_root *= p;
      if (e % 2) result.square_free *= p;
    }
  };
  strip(2);
  for (BigInt p = 3; p <= 10000 && p * p <= rest; p += 2) strip(p);
  if (rest > 1) {
    if (rest < BigInt(10001) * 10001) {
      // No prime factor below 10^4 remains, so rest < (10^4)^2 must be prime.
      result.square_free *= rest;
    } else {
      BigInt s = isqrt(rest, RoundMode::floor);
      if (s * s == rest) {
        result.square_root *= s;  // a full square regardless of s's structure
      } else {
        std::map<BigInt, unsigned> factors;
        factor_into(rest, factors);
        for (const auto& [p, e] : factors) {
          for (unsigned i = 0; i + 1 < e; i += 2) result.square_root *= p;
          if (e % 2) result.square_free *= p;
        }
      }
    }
  }
  return result;
}

}  // namespace paridhi
