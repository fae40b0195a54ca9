#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "staircase/rational.hpp"

namespace staircase {

// Left endpoint of a removed middle-third interval, addressed by its level n
// and the n-1 fixed ternary digits that precede the final digit 1.  prefix is
// a string over {'0','2'} of length level-1; the endpoint itself is
//   alpha = 0.prefix 1  (base 3),   beta = alpha + 3^{-level}.
// The open interval (alpha, beta) is the removed interval; the plateau value
// of the Cantor function on [alpha, beta] is an odd multiple of 2^{-level}.
class EndpointIndex {
 public:
  EndpointIndex(int level, std::string prefix);

  int level() const { return level_; }
  const std::string& prefix() const { return prefix_; }

  Rational alpha() const;  // left endpoint, in the Cantor set
  Rational beta() const;   // right endpoint, alpha + 3^{-level}
  Dyadic plateau() const;  // common Cantor-function value on [alpha, beta]

  friend bool operator==(const EndpointIndex& a, const EndpointIndex& b) {
    return a.level_ == b.level_ && a.prefix_ == b.prefix_;
  }

 private:
  int level_;
  std::string prefix_;
};

// Orders by the position of the endpoint on the line.
bool endpoint_less(const EndpointIndex& a, const EndpointIndex& b);

// All removed-interval left endpoints of level exactly n, sorted.  2^{n-1}
// of them.
std::vector<EndpointIndex> endpoints_at_level(int n);

// All left endpoints of level <= n, sorted by position.  2^n - 1 of them.
std::vector<EndpointIndex> endpoints_up_to(int n);

// The Cantor function (devil's staircase) evaluated exactly at a rational
// point of [0, 1].  Monotone, surjective onto [0, 1], constant on each
// removed interval.  Throws std::domain_error outside [0, 1].
Rational cantor_function(const Rational& x);

// True iff x belongs to the Cantor set, i.e. has a ternary expansion free of
// the digit 1.
bool in_cantor(const Rational& x);

// The order-preserving digit substitution: binary expansion 0.b1 b2 ... of a
// dyadic d maps to the ternary number 0.(2 b1)(2 b2)...; lands in the Cantor
// set and inverts the Cantor function there (cantor_function(gamma(d)) == d).
Rational dyadic_to_cantor(const Dyadic& d);

// The endpoint whose plateau value is z, for dyadic 0 < z < 1.
EndpointIndex endpoint_for_dyadic(const Dyadic& z);

// Identify x as a removed-interval left endpoint, if it is one.
std::optional<EndpointIndex> endpoint_for_value(const Rational& x);

// Two-sided approximants of e at distance step k >= 1: points of level
// exactly level(e)+k with
//   approach(e, k).first  = alpha(e) - 2 * 3^{-(level+k)}   (from the left)
//   approach(e, k).second = beta(e)  +     3^{-(level+k)}   (from the right)
// Both are themselves removed-interval left endpoints.
std::pair<EndpointIndex, EndpointIndex> approach(const EndpointIndex& e,
                                                 int k);

// Immediate neighbours of e among the endpoints of level <= level(e),
// together with the domain ends: the largest strictly smaller and smallest
// strictly larger element of L_{<=n} union {0, 1}.
std::pair<Rational, Rational> neighbors(const EndpointIndex& e);

}  // namespace staircase
