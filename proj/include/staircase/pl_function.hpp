#pragma once

#include <utility>
#include <vector>

#include "staircase/region.hpp"

namespace staircase {

// Continuous piecewise-linear function with values in [0, 1], defined on a
// closed region.  Each domain component carries its own breakpoint list
// (x strictly increasing, spanning the component exactly); a single-point
// component carries one pair.  Everything about it is exact: evaluation,
// image, preimages of closed intervals.
class PLFunction {
 public:
  struct Piece {
    std::vector<std::pair<Rational, Rational>> points;
  };

  PLFunction() = default;  // empty domain
  PLFunction(Region domain, std::vector<Piece> pieces);

  static PLFunction constant(const Region& domain, const Rational& value);

  const Region& domain() const { return domain_; }
  const std::vector<Piece>& pieces() const { return pieces_; }
  bool empty() const { return domain_.is_empty(); }

  // Throws std::domain_error off the domain.
  Rational operator()(const Rational& x) const;

  // Exact image: per component the function attains exactly the interval
  // between its least and greatest breakpoint value.
  Region image() const;
  bool surjective_onto_unit() const;

  Region preimage(const Rational& lo, const Rational& hi) const;
  Region preimage_ge(const Rational& c) const { return preimage(c, Rational(1)); }
  Region preimage_at(const Rational& c) const { return preimage(c, c); }

  friend bool operator==(const PLFunction& a, const PLFunction& b);

 private:
  Region domain_;
  std::vector<Piece> pieces_;
};

}  // namespace staircase
