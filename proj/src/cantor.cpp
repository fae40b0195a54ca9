#include "staircase/cantor.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace staircase {

namespace {

void check_unit_interval(const Rational& x, const char* who) {
  if (x.sign() < 0 || x > Rational(1))
    throw std::domain_error(std::string(who) + ": argument outside [0, 1]");
}

// One step of the base-3 long division for x = num/den in [0, 1):
// returns the next digit and replaces num by the remainder.
int next_ternary_digit(BigInt& num, const BigInt& den) {
  num *= 3;
  int d = static_cast<int>(num / den);
  num -= d * den;
  return d;
}

}  // namespace

EndpointIndex::EndpointIndex(int level, std::string prefix)
    : level_(level), prefix_(std::move(prefix)) {
  if (level_ < 1) throw std::invalid_argument("endpoint: level must be >= 1");
  if (static_cast<int>(prefix_.size()) != level_ - 1)
    throw std::invalid_argument("endpoint: prefix length must be level - 1");
  for (char c : prefix_)
    if (c != '0' && c != '2')
      throw std::invalid_argument("endpoint: prefix digits must be 0 or 2");
}

Rational EndpointIndex::alpha() const {
  BigInt num = 0;
  for (char c : prefix_) num = num * 3 + (c - '0');
  num = num * 3 + 1;
  return Rational(num, ipow(3, level_));
}

Rational EndpointIndex::beta() const { return alpha() + pow3_inv(level_); }

Dyadic EndpointIndex::plateau() const {
  BigInt num = 0;
  for (char c : prefix_) num = num * 2 + (c - '0') / 2;
  num = num * 2 + 1;
  return Dyadic(num, level_);
}

bool endpoint_less(const EndpointIndex& a, const EndpointIndex& b) {
  return a.alpha() < b.alpha();
}

std::vector<EndpointIndex> endpoints_at_level(int n) {
  if (n < 1) throw std::invalid_argument("endpoints_at_level: level >= 1");
  std::vector<EndpointIndex> out;
  out.reserve(size_t(1) << (n - 1));
  std::string prefix(n - 1, '0');
  for (;;) {
    out.emplace_back(n, prefix);
    // increment the prefix as a binary counter over {0, 2}
    int i = n - 2;
    while (i >= 0 && prefix[i] == '2') prefix[i--] = '0';
    if (i < 0) break;
    prefix[i] = '2';
  }
  return out;
}

std::vector<EndpointIndex> endpoints_up_to(int n) {
  if (n < 1) throw std::invalid_argument("endpoints_up_to: level >= 1");
  // Walk the plateau values k/2^n in order; the plateau map is an order
  // isomorphism, so this emits the endpoints sorted by position.
  std::vector<EndpointIndex> out;
  BigInt top = ipow(2, n);
  for (BigInt k = 1; k < top; ++k)
    out.push_back(endpoint_for_dyadic(Dyadic(k, n)));
  return out;
}

Rational cantor_function(const Rational& x) {
  check_unit_interval(x, "cantor_function");
  if (x.is_zero()) return Rational(0);
  if (x == Rational(1)) return Rational(1);

  BigInt num = x.num();
  const BigInt den = x.den();
  BigInt pnum = 0;  // binary accumulator: sum of halved digits seen so far
  // remainder -> (1-based position about to be emitted, pnum at that point)
  std::map<BigInt, std::pair<int, BigInt>> seen;
  for (int pos = 1;; ++pos) {
    auto [it, fresh] = seen.emplace(num, std::make_pair(pos, pnum));
    if (!fresh) {
      // digits from position it->second.first onward repeat forever
      int m = it->second.first - 1;
      int c = pos - 1 - m;
      const BigInt& pnum_m = it->second.second;
      BigInt block = ipow(2, c) - 1;
      BigInt cnum = pnum - (pnum_m << c);
      return Rational(pnum_m * block + cnum, ipow(2, m) * block);
    }
    int d = next_ternary_digit(num, den);
    if (d == 1) return Rational(2 * pnum + 1, ipow(2, pos));
    pnum = 2 * pnum + d / 2;
    if (num == 0) return Rational(pnum, ipow(2, pos));
  }
}

bool in_cantor(const Rational& x) {
  check_unit_interval(x, "in_cantor");
  if (x.is_zero() || x == Rational(1)) return true;
  BigInt num = x.num();
  const BigInt den = x.den();
  std::map<BigInt, int> seen;
  for (int pos = 1;; ++pos) {
    if (!seen.emplace(num, pos).second) return true;  // repeating, no 1s
    int d = next_ternary_digit(num, den);
    if (d == 1) return num == 0;  // left endpoint of a removed interval
    if (num == 0) return true;    // terminates in digits {0, 2}
  }
}

Rational dyadic_to_cantor(const Dyadic& d) {
  if (d.exp() == 0) return Rational(d.num());  // 0 or 1
  BigInt num3 = 0;
  for (int i = d.exp() - 1; i >= 0; --i)
    num3 = num3 * 3 + 2 * static_cast<int>(bit_test(d.num(), unsigned(i)));
  return Rational(num3, ipow(3, d.exp()));
}

EndpointIndex endpoint_for_dyadic(const Dyadic& z) {
  if (z.exp() == 0)
    throw std::invalid_argument("endpoint_for_dyadic: need 0 < z < 1");
  std::string prefix;
  prefix.reserve(z.exp() - 1);
  for (int i = z.exp() - 1; i >= 1; --i)
    prefix += bit_test(z.num(), unsigned(i)) ? '2' : '0';
  return EndpointIndex(z.exp(), std::move(prefix));
}

std::optional<EndpointIndex> endpoint_for_value(const Rational& x) {
  if (x.sign() <= 0 || x >= Rational(1)) return std::nullopt;
  BigInt num = x.num();
  const BigInt den = x.den();
  std::map<BigInt, int> seen;
  std::string prefix;
  for (int pos = 1;; ++pos) {
    if (!seen.emplace(num, pos).second) return std::nullopt;
    int d = next_ternary_digit(num, den);
    if (d == 1)
      return num == 0 ? std::optional(EndpointIndex(pos, std::move(prefix)))
                      : std::nullopt;
    if (num == 0) return std::nullopt;  // terminates without a final 1
    prefix += char('0' + d);
  }
}

std::pair<EndpointIndex, EndpointIndex> approach(const EndpointIndex& e,
                                                 int k) {
  if (k < 1) throw std::invalid_argument("approach: step must be >= 1");
  std::string left = e.prefix() + '0' + std::string(k - 1, '2');
  std::string right = e.prefix() + '2' + std::string(k - 1, '0');
  return {EndpointIndex(e.level() + k, std::move(left)),
          EndpointIndex(e.level() + k, std::move(right))};
}

std::pair<Rational, Rational> neighbors(const EndpointIndex& e) {
  Dyadic z = e.plateau();
  int n = e.level();
  BigInt k = z.num() << (n - z.exp());  // plateau as k/2^n, k odd here
  Rational below =
      k == 1 ? Rational(0) : endpoint_for_dyadic(Dyadic(k - 1, n)).alpha();
  Rational above = k + 1 == ipow(2, n)
                       ? Rational(1)
                       : endpoint_for_dyadic(Dyadic(k + 1, n)).alpha();
  return {below, above};
}

}  // namespace staircase
