#include "paridhi/rational.hpp"

#include <cctype>

namespace paridhi {

Rational::Rational(BigInt n, BigInt d) : num_(std::move(n)), den_(std::move(d)) {
  if (den_ == 0) throw std::domain_error("Rational: zero denominator");
  reduce();
}

void Rational::reduce() {
  if (den_ < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  if (num_ == 0) {
    den_ = 1;
    return;
  }
  BigInt g = boost::multiprecision::gcd(num_ < 0 ? BigInt(-num_) : num_, den_);
  if (g > 1) {
    num_ /= g;
    den_ /= g;
  }
}

Rational Rational::operator-() const {
  Rational r = *this;
  r.num_ = -r.num_;
  return r;
}

Rational Rational::inverse() const {
  if (num_ == 0) throw std::domain_error("Rational: inverse of zero");
  return Rational(den_, num_);
}

Rational operator+(const Rational& a, const Rational& b) {
  return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}
Rational operator-(const Rational& a, const Rational& b) {
  return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}
Rational operator*(const Rational& a, const Rational& b) {
  return Rational(a.num_ * b.num_, a.den_ * b.den_);
}
Rational operator/(const Rational& a, const Rational& b) {
  if (b.num_ == 0) throw std::domain_error("Rational: division by zero");
  return Rational(a.num_ * b.den_, a.den_ * b.num_);
}

std::string Rational::to_string() const {
  std::string s = num_.str();
  if (den_ != 1) s += "/" + den_.str();
  return s;
}

Rational Rational::parse(const std::string& text) {
  auto fail = [&]() -> Rational {
    throw std::invalid_argument("Rational::parse: cannot parse '" + text + "'");
  };
  if (text.empty()) return fail();
  std::size_t pos = 0;
  bool negative = false;
  if (text[pos] == '+' || text[pos] == '-') {
    negative = text[pos] == '-';
    ++pos;
  }
  auto read_digits = [&](std::size_t& i) {
    std::string out;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) out += text[i++];
    return out;
  };
  std::string intpart = read_digits(pos);
  if (pos < text.size() && text[pos] == '/') {
    ++pos;
    std::string denpart = read_digits(pos);
    if (intpart.empty() || denpart.empty() || pos != text.size()) return fail();
    BigInt n(intpart), d(denpart);
    if (d == 0) return fail();
    return Rational(negative ? BigInt(-n) : n, d);
  }
  std::string fracpart;
  if (pos < text.size() && text[pos] == '.') {
    ++pos;
    fracpart = read_digits(pos);
  }
  if ((intpart.empty() && fracpart.empty()) || pos != text.size()) return fail();
  BigInt n(intpart.empty() ? "0" : intpart);
  BigInt scale = pow10(static_cast<unsigned>(fracpart.size()));
  n *= scale;
  if (!fracpart.empty()) n += BigInt(fracpart);
  return Rational(negative ? BigInt(-n) : n, scale);
}

}  // namespace paridhi
