#include "paridhi/surd.hpp"

namespace paridhi {

QuadSurd::QuadSurd(const Rational& r) : a_(r.num()), b_(0), k_(0), q_(r.den()) {}

QuadSurd::QuadSurd(BigInt a, BigInt b, BigInt k, BigInt q)
    : a_(std::move(a)), b_(std::move(b)), k_(std::move(k)), q_(std::move(q)) {
  if (q_ == 0) throw std::domain_error("QuadSurd: zero denominator");
  if (k_ < 0) throw std::domain_error("QuadSurd: negative radicand");
  normalize();
}

void QuadSurd::normalize() {
  if (q_ < 0) {
    a_ = -a_;
    b_ = -b_;
    q_ = -q_;
  }
  if (b_ != 0 && k_ > 1) {
    SquareSplit split = split_square(k_);
    if (split.square_root != 1) {
      b_ *= split.square_root;
      k_ = split.square_free;
    }
  }
  if (k_ == 1) {
    a_ += b_;
    b_ = 0;
  }
  if (k_ == 0 || b_ == 0) {
    b_ = 0;
    k_ = 0;
  }
  BigInt g = boost::multiprecision::gcd(boost::multiprecision::gcd(
                 a_ < 0 ? BigInt(-a_) : a_, b_ < 0 ? BigInt(-b_) : b_), q_);
  if (g > 1) {
    a_ /= g;
    b_ /= g;
    q_ /= g;
  }
}

QuadSurd QuadSurd::sqrt_rational(const Rational& r) {
  if (r.sign() < 0) throw std::domain_error("QuadSurd: sqrt of negative rational");
  if (r.is_zero()) return QuadSurd();
  SquareSplit split = split_square(r.num() * r.den());
  return QuadSurd(0, split.square_root, split.square_free, r.den());
}

std::optional<Rational> QuadSurd::rational() const {
  if (b_ != 0) return std::nullopt;
  return Rational(a_, q_);
}

int QuadSurd::sign() const {
  // sign of a + b*sqrt(k) (q > 0)
  if (b_ == 0) return a_ == 0 ? 0 : (a_ < 0 ? -1 : 1);
  if (a_ == 0) return b_ < 0 ? -1 : 1;
  if (a_ > 0 && b_ > 0) return 1;
  if (a_ < 0 && b_ < 0) return -1;
  BigInt lhs = a_ * a_, rhs = b_ * b_ * k_;
  if (a_ > 0) return lhs > rhs ? 1 : (lhs < rhs ? -1 : 0);
  return rhs > lhs ? 1 : (rhs < lhs ? -1 : 0);
}

void QuadSurd::match_radicand(const QuadSurd& x, const QuadSurd& y, BigInt& k) {
  if (x.b_ == 0 && y.b_ == 0)
    k = 0;
  else if (x.b_ == 0)
    k = y.k_;
  else if (y.b_ == 0)
    k = x.k_;
  else if (x.k_ == y.k_)
    k = x.k_;
  else
    throw std::domain_error("QuadSurd: incompatible radicands " + x.k_.str() + " and " + y.k_.str());
}

QuadSurd operator+(const QuadSurd& x, const QuadSurd& y) {
  BigInt k;
  QuadSurd::match_radicand(x, y, k);
  return QuadSurd(x.a_ * y.q_ + y.a_ * x.q_, x.b_ * y.q_ + y.b_ * x.q_, k, x.q_ * y.q_);
}

QuadSurd operator-(const QuadSurd& x, const QuadSurd& y) { return x + (-y); }

QuadSurd operator*(const QuadSurd& x, const QuadSurd& y) {
  // Pure roots multiply across fields: sqrt(k1)*sqrt(k2) = sqrt(k1*k2).
  if (x.a_ == 0 && y.a_ == 0 && x.b_ != 0 && y.b_ != 0 && x.k_ != y.k_)
    return QuadSurd(0, x.b_ * y.b_, x.k_ * y.k_, x.q_ * y.q_);
  BigInt k;
  QuadSurd::match_radicand(x, y, k);
  return QuadSurd(x.a_ * y.a_ + x.b_ * y.b_ * k, x.a_ * y.b_ + x.b_ * y.a_, k, x.q_ * y.q_);
}

QuadSurd operator/(const QuadSurd& x, const QuadSurd& y) {
  if (y.sign() == 0) throw std::domain_error("QuadSurd: division by zero");
  // 1/(b*sqrt(k)/q) = q*sqrt(k)/(b*k) keeps a pure-root divisor exact even
  // when the fields differ.
  if (y.a_ == 0 && y.b_ != 0 && x.k_ != y.k_)
    return x * QuadSurd(0, y.q_, y.k_, y.b_ * y.k_);
  BigInt k;
  QuadSurd::match_radicand(x, y, k);
  // x / y = x * conj(y) * q_y / (a_y^2 - b_y^2 k)
  BigInt norm = y.a_ * y.a_ - y.b_ * y.b_ * k;
  QuadSurd numer = x * QuadSurd(y.a_, -y.b_, k, 1);
  return QuadSurd(numer.a_ * y.q_, numer.b_ * y.q_, numer.b_ == 0 ? k : numer.k_,
                  numer.q_ * norm);
}

int QuadSurd::compare(const QuadSurd& x, const QuadSurd& y) {
  QuadSurd diff = x - y;  // throws on incompatible radicands
  return diff.sign();
}

std::optional<QuadSurd> QuadSurd::sqrt_denested(const QuadSurd& radicand) {
  if (radicand.sign() < 0) throw std::domain_error("QuadSurd: sqrt of negative value");
  if (radicand.is_rational()) return sqrt_rational(*radicand.rational());
  // radicand = A + B*sqrt(k) with A, B rational.
  Rational A(radicand.a_, radicand.q_);
  Rational B(radicand.b_, radicand.q_);
  Rational k(radicand.k_);
  Rational disc = A * A - B * B * k;
  if (disc.sign() < 0) return std::nullopt;
  QuadSurd root_disc = sqrt_rational(disc);
  auto t = root_disc.rational();
  if (!t) return std::nullopt;
  // (u + v*sqrt(k))^2 = u^2 + v^2 k + 2uv sqrt(k): u^2 in {(A±t)/2}
  for (const Rational& cand : {(A + *t) * Rational(1, 2), (A - *t) * Rational(1, 2)}) {
    if (cand.sign() < 0) continue;
    QuadSurd u_root = sqrt_rational(cand);
    auto u = u_root.rational();
    if (!u || u->is_zero()) continue;
    Rational v = B / (Rational(2) * *u);
    QuadSurd candidate(
        u->num() * v.den(), v.num() * u->den(), radicand.k_, u->den() * v.den());
    if (candidate * candidate == radicand) {
      if (candidate.sign() < 0) candidate = -candidate;
      return candidate;
    }
  }
  return std::nullopt;
}

Interval QuadSurd::interval(int digits) const {
  Rational rational_part(a_, q_);
  if (b_ == 0) return Interval(rational_part);
  Interval root = Interval(Rational(k_)).sqrt(digits + 2);
  return Interval(rational_part) + root * Interval(Rational(b_, q_));
}

Decimal QuadSurd::eval(int digits) const {
  if (b_ == 0) return to_decimal(Rational(a_, q_), digits);
  return interval(digits + 10).to_decimal(digits);
}

std::string QuadSurd::to_string(bool unicode) const {
  if (b_ == 0) return Rational(a_, q_).to_string();
  std::string root = unicode ? "√" + k_.str()
                             : "sqrt(" + k_.str() + ")";
  BigInt babs = b_ < 0 ? BigInt(-b_) : b_;
  std::string term = (babs == 1) ? root : (babs.str() + (unicode ? "" : "*") + root);
  std::string body;
  if (a_ == 0)
    body = (b_ < 0 ? "-" : "") + term;
  else
    body = a_.str() + (b_ < 0 ? "-" : "+") + term;
  if (q_ == 1) return body;
  return "(" + body + ")/" + q_.str();
}

}  // namespace paridhi
