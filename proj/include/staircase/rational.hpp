#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

namespace staircase {

using BigInt = boost::multiprecision::cpp_int;

// Exact rational number.  Invariant: denominator > 0, gcd(num, den) == 1,
// zero is 0/1.  All arithmetic is exact; there is no implicit rounding
// anywhere in the library (the SVG writer is the only consumer of
// to_double()).
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(long long n) : num_(n), den_(1) {}
  Rational(BigInt n) : num_(std::move(n)), den_(1) {}
  Rational(BigInt n, BigInt d);

  // Accepts "p", "p/q", optional leading '-' on p or q, ASCII digits only.
  // Throws std::invalid_argument on malformed input or zero denominator.
  static Rational parse(std::string_view text);

  const BigInt& num() const { return num_; }
  const BigInt& den() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  bool is_integer() const { return den_ == 1; }
  int sign() const { return num_ == 0 ? 0 : (num_ < 0 ? -1 : 1); }

  Rational operator-() const;
  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);  // throws on division by zero

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& a,
                                          const Rational& b);

  // "p/q", or just "p" when the value is an integer.
  std::string str() const;
  double to_double() const;

  friend std::ostream& operator<<(std::ostream& os, const Rational& r);

 private:
  void normalize();
  BigInt num_;
  BigInt den_;
};

Rational min(const Rational& a, const Rational& b);
Rational max(const Rational& a, const Rational& b);
Rational abs(const Rational& r);

// base^exp as a BigInt, exp >= 0.
BigInt ipow(unsigned base, int exp);

// 1 / 2^e and 1 / 3^e.
Rational pow2_inv(int e);
Rational pow3_inv(int e);

// Dyadic rational in [0, 1]: value num / 2^exp with 0 <= num <= 2^exp and
// (num odd or exp == 0).  The level/index bookkeeping of the construction
// lives on this type; plain Rational is used everywhere a value is just a
// point of the line.
class Dyadic {
 public:
  Dyadic() : num_(0), exp_(0) {}
  Dyadic(BigInt num, int exp);  // reduces; throws if outside [0, 1]

  static std::optional<Dyadic> from_rational(const Rational& r);

  const BigInt& num() const { return num_; }
  int exp() const { return exp_; }

  Rational to_rational() const;
  std::string str() const { return to_rational().str(); }

  friend bool operator==(const Dyadic& a, const Dyadic& b) {
    return a.num_ == b.num_ && a.exp_ == b.exp_;
  }
  friend std::strong_ordering operator<=>(const Dyadic& a, const Dyadic& b);

 private:
  BigInt num_;
  int exp_;
};

}  // namespace staircase
