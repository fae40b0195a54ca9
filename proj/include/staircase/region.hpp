#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "staircase/rational.hpp"

namespace staircase {

// One interval of the ambient space [0, 1], with independently closed or
// open ends.  Degenerate data (lo > hi, or lo == hi with an open end)
// denotes the empty set and is dropped during normalization.
struct Interval {
  Rational lo, hi;
  bool lo_closed = true;
  bool hi_closed = true;

  bool empty() const;
  bool contains(const Rational& x) const;
};

// A finite union of intervals of [0, 1], kept in canonical form: components
// sorted, pairwise disjoint, and non-mergeable (two components may share an
// endpoint only when it belongs to neither).  Canonical form makes set
// equality structural equality.
//
// Openness and closedness are always meant relative to [0, 1]: a component
// [0, b) counts as open at 0, (a, 1] as open at 1, and [0, 1] is both open
// and closed.
class Region {
 public:
  Region() = default;  // empty set
  explicit Region(Interval iv);
  explicit Region(std::vector<Interval> ivs);

  static Region empty() { return Region(); }
  static Region whole();
  static Region point(const Rational& x);
  static Region closed(const Rational& lo, const Rational& hi);
  static Region open(const Rational& lo, const Rational& hi);
  static Region interval(const Rational& lo, const Rational& hi,
                         bool lo_closed, bool hi_closed);

  const std::vector<Interval>& components() const { return comps_; }
  bool is_empty() const { return comps_.empty(); }
  bool contains(const Rational& x) const;
  bool is_open() const;    // relative to [0, 1]
  bool is_closed() const;

  // Least and greatest point of a nonempty closed region.
  Rational min() const;
  Rational max() const;

  // "[0,1/10] u (1/2,1]", or "empty".
  std::string str() const;

  friend bool operator==(const Region& a, const Region& b) {
    return a.comps_ == b.comps_;
  }
  friend std::ostream& operator<<(std::ostream& os, const Region& r);

 private:
  void normalize();
  std::vector<Interval> comps_;
};

bool operator==(const Interval& a, const Interval& b);

Region region_union(const Region& a, const Region& b);
Region region_intersect(const Region& a, const Region& b);
Region region_difference(const Region& a, const Region& b);
Region complement(const Region& a);  // within [0, 1]
Region closure(const Region& a);
Region interior(const Region& a);  // relative to [0, 1]
bool subset(const Region& a, const Region& b);
bool disjoint(const Region& a, const Region& b);

// Smallest gap between a point of a and a point of b; zero when they meet
// or touch.  Throws std::invalid_argument if either region is empty.
Rational distance(const Region& a, const Region& b);

// Parses the str() form (components joined by " u ", or "empty").
Region parse_region(std::string_view text);

// Given closed C contained in open O, produces an open V with
//   C  subset of  V  subset of  closure(V)  subset of  O,
// by expanding each component of C halfway toward the boundary of the
// component of O that contains it (all the way to a closed ambient end).
// This is the normality witness the whole construction is built from.
// Throws std::invalid_argument naming the violated precondition.
Region insert_open(const Region& C, const Region& O);

// Refinement of insert_open that also pins the trace on a closed set E:
// given closed Y, open U, closed C with
//   Y subset of U,   C subset of both U and E,   Y
//   meets E only inside the interior of C relative to E,
// produces a closed Z with
//   Y subset of interior(Z),   Z subset of U,   Z intersect E == C.
Region insert_with_trace(const Region& Y, const Region& U, const Region& E,
                         const Region& C);

}  // namespace staircase
