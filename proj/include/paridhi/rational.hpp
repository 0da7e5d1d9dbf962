#pragma once

#include "paridhi/bigint.hpp"

#include <compare>
#include <string>

namespace paridhi {

// Signed fraction in lowest terms: gcd(|num|, den) = 1, den >= 1, zero is 0/1.
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(BigInt n) : num_(std::move(n)), den_(1) {}
  Rational(long long n) : num_(n), den_(1) {}
  Rational(BigInt n, BigInt d);
  Rational(long long n, long long d) : Rational(BigInt(n), BigInt(d)) {}

  // Accepts "p", "-p/q", or a plain decimal string like "3.75" (converted
  // exactly over a power of ten). Throws std::invalid_argument otherwise.
  static Rational parse(const std::string& text);

  const BigInt& num() const { return num_; }
  const BigInt& den() const { return den_; }
  bool is_integer() const { return den_ == 1; }
  bool is_zero() const { return num_ == 0; }
  int sign() const { return num_ == 0 ? 0 : (num_ < 0 ? -1 : 1); }

  Rational operator-() const;
  Rational inverse() const;
  Rational abs() const { return num_ < 0 ? -*this : *this; }

  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);
  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    BigInt lhs = a.num_ * b.den_, rhs = b.num_ * a.den_;
    return lhs < rhs ? std::strong_ordering::less
         : lhs > rhs ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
  }

  // "p/q", or just "p" when den == 1.
  std::string to_string() const;

 private:
  BigInt num_, den_;
  void reduce();
};

}  // namespace paridhi
