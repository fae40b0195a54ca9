#include "staircase/region.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>

namespace staircase {

namespace {

const Rational kZero(0);
const Rational kOne(1);
const Rational kTwo(2);

}  // namespace

bool Interval::empty() const {
  if (lo > hi) return true;
  return lo == hi && !(lo_closed && hi_closed);
}

bool Interval::contains(const Rational& x) const {
  if (x < lo || x > hi) return false;
  if (x == lo && !lo_closed) return false;
  if (x == hi && !hi_closed) return false;
  return true;
}

bool operator==(const Interval& a, const Interval& b) {
  return a.lo == b.lo && a.hi == b.hi && a.lo_closed == b.lo_closed &&
         a.hi_closed == b.hi_closed;
}

Region::Region(Interval iv) : comps_{std::move(iv)} { normalize(); }
Region::Region(std::vector<Interval> ivs) : comps_(std::move(ivs)) {
  normalize();
}

Region Region::whole() { return closed(kZero, kOne); }
Region Region::point(const Rational& x) { return closed(x, x); }
Region Region::closed(const Rational& lo, const Rational& hi) {
  return Region(Interval{lo, hi, true, true});
}
Region Region::open(const Rational& lo, const Rational& hi) {
  return Region(Interval{lo, hi, false, false});
}
Region Region::interval(const Rational& lo, const Rational& hi, bool lo_closed,
                        bool hi_closed) {
  return Region(Interval{lo, hi, lo_closed, hi_closed});
}

void Region::normalize() {
  std::vector<Interval> in;
  in.reserve(comps_.size());
  for (auto& iv : comps_) {
    if (iv.empty()) continue;
    if (iv.lo < kZero || iv.hi > kOne)
      throw std::invalid_argument("region: interval outside [0, 1]");
    in.push_back(std::move(iv));
  }
  std::sort(in.begin(), in.end(), [](const Interval& a, const Interval& b) {
    if (a.lo != b.lo) return a.lo < b.lo;
    if (a.lo_closed != b.lo_closed) return a.lo_closed;
    return a.hi < b.hi;
  });
  comps_.clear();
  for (auto& iv : in) {
    if (!comps_.empty()) {
      Interval& cur = comps_.back();
      bool merges = iv.lo < cur.hi ||
                    (iv.lo == cur.hi && (cur.hi_closed || iv.lo_closed));
      if (merges) {
        if (iv.hi > cur.hi) {
          cur.hi = iv.hi;
          cur.hi_closed = iv.hi_closed;
        } else if (iv.hi == cur.hi) {
          cur.hi_closed = cur.hi_closed || iv.hi_closed;
        }
        continue;
      }
    }
    comps_.push_back(std::move(iv));
  }
}

bool Region::contains(const Rational& x) const {
  for (const auto& c : comps_) {
    if (c.contains(x)) return true;
    if (x < c.lo) break;
  }
  return false;
}

bool Region::is_open() const {
  for (const auto& c : comps_) {
    if (c.lo_closed && c.lo != kZero) return false;
    if (c.hi_closed && c.hi != kOne) return false;
  }
  return true;
}

bool Region::is_closed() const {
  for (const auto& c : comps_)
    if (!c.lo_closed || !c.hi_closed) return false;
  return true;
}

Rational Region::min() const {
  if (comps_.empty()) throw std::invalid_argument("region: min of empty set");
  return comps_.front().lo;
}

Rational Region::max() const {
  if (comps_.empty()) throw std::invalid_argument("region: max of empty set");
  return comps_.back().hi;
}

std::string Region::str() const {
  if (comps_.empty()) return "empty";
  std::string s;
  for (size_t i = 0; i < comps_.size(); ++i) {
    const Interval& c = comps_[i];
    if (i) s += " u ";
    s += c.lo_closed ? '[' : '(';
    s += c.lo.str();
    s += ',';
    s += c.hi.str();
    s += c.hi_closed ? ']' : ')';
  }
  return s;
}

std::ostream& operator<<(std::ostream& os, const Region& r) {
  return os << r.str();
}

Region region_union(const Region& a, const Region& b) {
  std::vector<Interval> all = a.components();
  all.insert(all.end(), b.components().begin(), b.components().end());
  return Region(std::move(all));
}

Region region_intersect(const Region& a, const Region& b) {
  std::vector<Interval> out;
  const auto& A = a.components();
  const auto& B = b.components();
  size_t i = 0, j = 0;
  while (i < A.size() && j < B.size()) {
    const Interval& x = A[i];
    const Interval& y = B[j];
    Interval r;
    if (x.lo > y.lo) {
      r.lo = x.lo;
      r.lo_closed = x.lo_closed;
    } else if (x.lo < y.lo) {
      r.lo = y.lo;
      r.lo_closed = y.lo_closed;
    } else {
      r.lo = x.lo;
      r.lo_closed = x.lo_closed && y.lo_closed;
    }
    if (x.hi < y.hi) {
      r.hi = x.hi;
      r.hi_closed = x.hi_closed;
    } else if (x.hi > y.hi) {
      r.hi = y.hi;
      r.hi_closed = y.hi_closed;
    } else {
      r.hi = x.hi;
      r.hi_closed = x.hi_closed && y.hi_closed;
    }
    if (!r.empty()) out.push_back(std::move(r));
    if (x.hi < y.hi)
      ++i;
    else if (x.hi > y.hi)
      ++j;
    else {
      ++i;
      ++j;
    }
  }
  return Region(std::move(out));
}

Region complement(const Region& a) {
  std::vector<Interval> out;
  Rational pos = kZero;
  bool pos_closed = true;
  for (const auto& c : a.components()) {
    out.push_back({pos, c.lo, pos_closed, !c.lo_closed});
    pos = c.hi;
    pos_closed = !c.hi_closed;
  }
  out.push_back({pos, kOne, pos_closed, true});
  return Region(std::move(out));
}

Region region_difference(const Region& a, const Region& b) {
  return region_intersect(a, complement(b));
}

Region closure(const Region& a) {
  std::vector<Interval> out;
  for (Interval c : a.components()) {
    c.lo_closed = c.hi_closed = true;
    out.push_back(std::move(c));
  }
  return Region(std::move(out));
}

Region interior(const Region& a) {
  std::vector<Interval> out;
  for (Interval c : a.components()) {
    if (!(c.lo_closed && c.lo == kZero)) c.lo_closed = false;
    if (!(c.hi_closed && c.hi == kOne)) c.hi_closed = false;
    out.push_back(std::move(c));
  }
  return Region(std::move(out));
}

bool subset(const Region& a, const Region& b) {
  return region_difference(a, b).is_empty();
}

bool disjoint(const Region& a, const Region& b) {
  return region_intersect(a, b).is_empty();
}

Rational distance(const Region& a, const Region& b) {
  if (a.is_empty() || b.is_empty())
    throw std::invalid_argument("distance: empty region");
  Rational best(2);
  for (const auto& x : a.components())
    for (const auto& y : b.components()) {
      Rational gap(0);
      if (y.lo > x.hi)
        gap = y.lo - x.hi;
      else if (x.lo > y.hi)
        gap = x.lo - y.hi;
      if (gap < best) best = gap;
    }
  return best;
}

Region parse_region(std::string_view text) {
  size_t b = 0, e = text.size();
  while (b < e && text[b] == ' ') ++b;
  while (e > b && text[e - 1] == ' ') --e;
  text = text.substr(b, e - b);
  if (text.empty() || text == "empty" || text == "\xE2\x88\x85")
    return Region();
  std::vector<Interval> ivs;
  size_t i = 0;
  while (i < text.size()) {
    char c = text[i];
    if (c == ' ' || c == 'u' || c == 'U') {
      ++i;
      continue;
    }
    if (c != '[' && c != '(')
      throw std::invalid_argument("region: expected '[' or '(' in \"" +
                                  std::string(text) + "\"");
    size_t end = text.find_first_of("])", i);
    if (end == std::string_view::npos)
      throw std::invalid_argument("region: unterminated interval");
    std::string_view body = text.substr(i + 1, end - i - 1);
    size_t comma = body.find(',');
    if (comma == std::string_view::npos)
      throw std::invalid_argument("region: interval needs two endpoints");
    ivs.push_back({Rational::parse(body.substr(0, comma)),
                   Rational::parse(body.substr(comma + 1)), c == '[',
                   text[end] == ']'});
    i = end + 1;
  }
  return Region(std::move(ivs));
}

Region insert_open(const Region& C, const Region& O) {
  if (!C.is_closed())
    throw std::invalid_argument("insert_open: first argument must be closed");
  if (!O.is_open())
    throw std::invalid_argument("insert_open: second argument must be open");
  if (!subset(C, O))
    throw std::invalid_argument(
        "insert_open: first argument must be contained in the second");
  std::vector<Interval> out;
  const auto& oc = O.components();
  size_t j = 0;
  for (const auto& c : C.components()) {
    while (j < oc.size() && !oc[j].contains(c.lo)) ++j;
    if (j == oc.size())
      throw std::logic_error("insert_open: lost the enclosing component");
    const Interval& o = oc[j];
    Interval v;
    if (o.lo_closed) {  // only possible at the ambient end 0
      v.lo = o.lo;
      v.lo_closed = true;
    } else {
      v.lo = (c.lo + o.lo) / kTwo;
      v.lo_closed = false;
    }
    if (o.hi_closed) {  // only possible at the ambient end 1
      v.hi = o.hi;
      v.hi_closed = true;
    } else {
      v.hi = (c.hi + o.hi) / kTwo;
      v.hi_closed = false;
    }
    out.push_back(std::move(v));
  }
  return Region(std::move(out));
}

Region insert_with_trace(const Region& Y, const Region& U, const Region& E,
                         const Region& C) {
  if (!Y.is_closed())
    throw std::invalid_argument("insert_with_trace: Y must be closed");
  if (!U.is_open())
    throw std::invalid_argument("insert_with_trace: U must be open");
  if (!E.is_closed())
    throw std::invalid_argument("insert_with_trace: E must be closed");
  if (!C.is_closed())
    throw std::invalid_argument("insert_with_trace: C must be closed");
  if (!subset(Y, U))
    throw std::invalid_argument("insert_with_trace: Y must be contained in U");
  if (!subset(C, region_intersect(U, E)))
    throw std::invalid_argument(
        "insert_with_trace: C must be contained in U and in E");
  // interior of C relative to E
  Region int_e = region_difference(E, closure(region_difference(E, C)));
  if (!subset(region_intersect(Y, E), int_e))
    throw std::invalid_argument(
        "insert_with_trace: Y must meet E only inside the relative interior "
        "of C");
  Region o_prime = region_difference(U, region_difference(E, int_e));
  Region v = insert_open(Y, o_prime);
  Region z = region_union(closure(v), C);
  if (!(region_intersect(z, E) == C) || !subset(Y, interior(z)) ||
      !subset(z, U))
    throw std::logic_error("insert_with_trace: postcondition failed");
  return z;
}

}  // namespace staircase
