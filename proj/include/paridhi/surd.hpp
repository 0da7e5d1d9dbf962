#pragma once

#include "paridhi/decimal.hpp"
#include "paridhi/rational.hpp"

#include <optional>
#include <string>

namespace paridhi {

// Exact value (a + b*sqrt(k))/q with k square-free and non-negative, q >= 1,
// gcd(a, b, q) = 1. Rational values normalize to b = 0, k = 0. A single
// radicand per value: arithmetic across two distinct irrational radicands is
// rejected rather than approximated.
class QuadSurd {
 public:
  QuadSurd() : a_(0), b_(0), k_(0), q_(1) {}
  QuadSurd(const Rational& r);
  QuadSurd(BigInt a, BigInt b, BigInt k, BigInt q);

  // sqrt of a non-negative rational: sqrt(p/q) = sqrt(p*q)/q, square part extracted.
  static QuadSurd sqrt_rational(const Rational& r);

  const BigInt& a() const { return a_; }
  const BigInt& b() const { return b_; }
  const BigInt& k() const { return k_; }
  const BigInt& q() const { return q_; }

  bool is_rational() const { return b_ == 0; }
  std::optional<Rational> rational() const;
  int sign() const;

  QuadSurd conjugate() const { return QuadSurd(a_, -b_, k_, q_); }
  QuadSurd operator-() const { return QuadSurd(-a_, -b_, k_, q_); }

  friend QuadSurd operator+(const QuadSurd& x, const QuadSurd& y);
  friend QuadSurd operator-(const QuadSurd& x, const QuadSurd& y);
  friend QuadSurd operator*(const QuadSurd& x, const QuadSurd& y);
  friend QuadSurd operator/(const QuadSurd& x, const QuadSurd& y);

  friend bool operator==(const QuadSurd& x, const QuadSurd& y) {
    return x.a_ == y.a_ && x.b_ == y.b_ && x.k_ == y.k_ && x.q_ == y.q_;
  }

  // Exact trichotomy by conjugate rationalization; throws std::domain_error
  // for two irrational values over different radicands.
  static int compare(const QuadSurd& x, const QuadSurd& y);

  // If the value squared is (u + v*sqrt(k))^2 for rationals u, v — i.e.
  // sqrt(A + B*sqrt(k)) denests — returns the denested non-negative root.
  static std::optional<QuadSurd> sqrt_denested(const QuadSurd& radicand);

  Interval interval(int digits) const;
  Decimal eval(int digits) const;  // err_ulp <= 1 at the requested scale

  // "(2+√2)/6" (unicode) or "(2+sqrt(2))/6" (ascii); rationals print as "p/q".
  std::string to_string(bool unicode = true) const;

 private:
  BigInt a_, b_, k_, q_;
  void normalize();
  static void match_radicand(const QuadSurd& x, const QuadSurd& y, BigInt& k);
};

inline QuadSurd operator*(const Rational& r, const QuadSurd& s) { return QuadSurd(r) * s; }
inline QuadSurd operator*(const QuadSurd& s, const Rational& r) { return s * QuadSurd(r); }

}  // namespace paridhi
