#include "staircase/rational.hpp"

#include <ostream>
#include <stdexcept>

namespace staircase {

namespace {

BigInt gcd(BigInt a, BigInt b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    BigInt t = a % b;
    a = std::move(b);
    b = std::move(t);
  }
  return a;
}

BigInt parse_int(std::string_view s) {
  if (s.empty()) throw std::invalid_argument("rational: empty integer");
  size_t i = 0;
  bool neg = false;
  if (s[0] == '-' || s[0] == '+') {
    neg = s[0] == '-';
    i = 1;
  }
  if (i == s.size()) throw std::invalid_argument("rational: sign only");
  BigInt v = 0;
  for (; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9')
      throw std::invalid_argument("rational: bad digit in \"" +
                                  std::string(s) + "\"");
    v = v * 10 + (s[i] - '0');
  }
  return neg ? -v : v;
}

}  // namespace

Rational::Rational(BigInt n, BigInt d) : num_(std::move(n)), den_(std::move(d)) {
  if (den_ == 0) throw std::invalid_argument("rational: zero denominator");
  normalize();
}

void Rational::normalize() {
  if (den_ < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  if (num_ == 0) {
    den_ = 1;
    return;
  }
  BigInt g = gcd(num_, den_);
  if (g > 1) {
    num_ /= g;
    den_ /= g;
  }
}

Rational Rational::parse(std::string_view text) {
  size_t b = 0, e = text.size();
  while (b < e && text[b] == ' ') ++b;
  while (e > b && text[e - 1] == ' ') --e;
  text = text.substr(b, e - b);
  if (text.empty()) throw std::invalid_argument("rational: empty string");
  size_t slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text));
  return Rational(parse_int(text.substr(0, slash)),
                  parse_int(text.substr(slash + 1)));
}

Rational Rational::operator-() const {
  Rational r = *this;
  r.num_ = -r.num_;
  return r;
}

Rational& Rational::operator+=(const Rational& o) {
  num_ = num_ * o.den_ + o.num_ * den_;
  den_ *= o.den_;
  normalize();
  return *this;
}

Rational& Rational::operator-=(const Rational& o) {
  num_ = num_ * o.den_ - o.num_ * den_;
  den_ *= o.den_;
  normalize();
  return *this;
}

Rational& Rational::operator*=(const Rational& o) {
  num_ *= o.num_;
  den_ *= o.den_;
  normalize();
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.num_ == 0) throw std::invalid_argument("rational: division by zero");
  num_ *= o.den_;
  den_ *= o.num_;
  normalize();
  return *this;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  BigInt lhs = a.num_ * b.den_;
  BigInt rhs = b.num_ * a.den_;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string Rational::str() const {
  std::string s = num_.str();
  if (den_ != 1) s += "/" + den_.str();
  return s;
}

double Rational::to_double() const {
  return static_cast<double>(num_) / static_cast<double>(den_);
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.str();
}

Rational min(const Rational& a, const Rational& b) { return a < b ? a : b; }
Rational max(const Rational& a, const Rational& b) { return a < b ? b : a; }
Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

BigInt ipow(unsigned base, int exp) {
  if (exp < 0) throw std::invalid_argument("ipow: negative exponent");
  BigInt r = 1;
  BigInt b = base;
  while (exp > 0) {
    if (exp & 1) r *= b;
    b *= b;
    exp >>= 1;
  }
  return r;
}

Rational pow2_inv(int e) { return Rational(1, ipow(2, e)); }
Rational pow3_inv(int e) { return Rational(1, ipow(3, e)); }

Dyadic::Dyadic(BigInt num, int exp) : num_(std::move(num)), exp_(exp) {
  if (exp_ < 0) throw std::invalid_argument("dyadic: negative exponent");
  if (num_ < 0) throw std::invalid_argument("dyadic: negative value");
  while (exp_ > 0 && num_ % 2 == 0) {
    num_ /= 2;
    --exp_;
  }
  if (num_ > ipow(2, exp_)) throw std::invalid_argument("dyadic: value > 1");
}

std::optional<Dyadic> Dyadic::from_rational(const Rational& r) {
  if (r.sign() < 0 || r > Rational(1)) return std::nullopt;
  BigInt d = r.den();
  int e = 0;
  while (d % 2 == 0) {
    d /= 2;
    ++e;
  }
  if (d != 1) return std::nullopt;
  return Dyadic(r.num(), e);
}

Rational Dyadic::to_rational() const { return Rational(num_, ipow(2, exp_)); }

std::strong_ordering operator<=>(const Dyadic& a, const Dyadic& b) {
  return a.to_rational() <=> b.to_rational();
}

}  // namespace staircase
