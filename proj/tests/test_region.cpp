#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <random>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "staircase/region.hpp"

using namespace staircase;

namespace {

Rational q(const char* s) { return Rational::parse(s); }
Region rc(const char* lo, const char* hi) {
  return Region::closed(q(lo), q(hi));
}
Region ro(const char* lo, const char* hi) { return Region::open(q(lo), q(hi)); }

Rational rnd_unit(std::mt19937_64& rng, long max_den = 48) {
  std::uniform_int_distribution<long> den(1, max_den);
  long d = den(rng);
  std::uniform_int_distribution<long> num(0, d);
  return Rational(BigInt(num(rng)), BigInt(d));
}

Region rnd_region(std::mt19937_64& rng, int max_comps = 3) {
  int n = int(rng() % (max_comps + 1));
  std::vector<Rational> cuts;
  for (int i = 0; i < 2 * n; ++i) cuts.push_back(rnd_unit(rng));
  std::sort(cuts.begin(), cuts.end());
  std::vector<Interval> ivs;
  for (int i = 0; i < n; ++i)
    ivs.push_back(
        {cuts[2 * i], cuts[2 * i + 1], bool(rng() & 1), bool(rng() & 1)});
  return Region(std::move(ivs));
}

// Every endpoint of the given regions plus a point strictly inside each gap
// between consecutive endpoints.  Membership in any Boolean combination is
// constant between consecutive endpoints, so agreement on this sample is
// agreement everywhere.
std::vector<Rational> separating_sample(
    const std::vector<const Region*>& regions) {
  std::vector<Rational> ends = {Rational(0), Rational(1)};
  for (const Region* r : regions)
    for (const auto& c : r->components()) {
      ends.push_back(c.lo);
      ends.push_back(c.hi);
    }
  std::sort(ends.begin(), ends.end());
  ends.erase(std::unique(ends.begin(), ends.end()), ends.end());
  std::vector<Rational> out = ends;
  for (size_t i = 0; i + 1 < ends.size(); ++i)
    out.push_back((ends[i] + ends[i + 1]) / Rational(2));
  return out;
}

}  // namespace

TEST_CASE("canonical form merges and sorts components") {
  Region a = region_union(Region::interval(q("0"), q("1/2"), true, false),
                          rc("1/2", "1"));
  CHECK(a == Region::whole());
  CHECK(a.components().size() == 1);

  Region b = region_union(ro("1/3", "1/2"), ro("1/2", "2/3"));
  CHECK(b.components().size() == 2);  // only-open touch stays split
  CHECK(!b.contains(q("1/2")));

  Region c = region_union(rc("1/4", "1/3"), rc("1/3", "1/2"));
  CHECK(c == rc("1/4", "1/2"));

  Region d = region_union(Region::point(q("1/2")), ro("1/2", "3/4"));
  CHECK(d == Region::interval(q("1/2"), q("3/4"), true, false));

  Region e(std::vector<Interval>{{q("3/4"), q("1"), true, true},
                                 {q("0"), q("1/4"), true, true},
                                 {q("1/2"), q("1/3"), true, true},
                                 {q("1/8"), q("1/8"), true, false}});
  CHECK(e == region_union(rc("0", "1/4"), rc("3/4", "1")));

  CHECK(Region().is_empty());
  CHECK(ro("1/2", "1/2").is_empty());
  CHECK(!Region::point(q("1/2")).is_empty());
  CHECK_THROWS_AS(Region::closed(q("-1/2"), q("0")), std::invalid_argument);
  CHECK_THROWS_AS(Region::closed(q("1/2"), q("2")), std::invalid_argument);
}

TEST_CASE("openness and closedness are relative to the ambient interval") {
  CHECK(Region::whole().is_open());
  CHECK(Region::whole().is_closed());
  CHECK(Region().is_open());
  CHECK(Region().is_closed());
  CHECK(Region::interval(q("0"), q("1/2"), true, false).is_open());
  CHECK(Region::interval(q("1/2"), q("1"), false, true).is_open());
  CHECK(!Region::point(q("0")).is_open());
  CHECK(Region::point(q("0")).is_closed());
  CHECK(ro("1/4", "1/2").is_open());
  CHECK(!ro("1/4", "1/2").is_closed());
  CHECK(!rc("1/4", "1/2").is_open());

  CHECK(rc("1/4", "1/2").min() == q("1/4"));
  CHECK(rc("1/4", "1/2").max() == q("1/2"));
  CHECK_THROWS_AS(Region().min(), std::invalid_argument);
}

TEST_CASE("printing and parsing round-trip") {
  Region a = region_union(rc("0", "1/10"), Region::interval(q("1/2"), q("1"),
                                                            false, true));
  CHECK(a.str() == "[0,1/10] u (1/2,1]");
  CHECK(parse_region(a.str()) == a);
  CHECK(parse_region("empty") == Region());
  CHECK(parse_region("\xE2\x88\x85") == Region());
  CHECK(parse_region("") == Region());
  CHECK(parse_region("  [0,1]  ") == Region::whole());
  CHECK(parse_region("(1/3, 2/3)") == ro("1/3", "2/3"));
  CHECK(parse_region("[1/2,1/2]") == Region::point(q("1/2")));
  CHECK(Region().str() == "empty");
  CHECK_THROWS_AS(parse_region("x"), std::invalid_argument);
  CHECK_THROWS_AS(parse_region("[0,1"), std::invalid_argument);
  CHECK_THROWS_AS(parse_region("[0]"), std::invalid_argument);
  CHECK_THROWS_AS(parse_region("[0,2]"), std::invalid_argument);

  std::mt19937_64 rng(41);
  for (int i = 0; i < 100; ++i) {
    Region r = rnd_region(rng);
    CHECK(parse_region(r.str()) == r);
  }
}

TEST_CASE("boolean operations agree with pointwise membership") {
  std::mt19937_64 rng(43);
  for (int i = 0; i < 200; ++i) {
    Region a = rnd_region(rng), b = rnd_region(rng);
    Region un = region_union(a, b);
    Region in = region_intersect(a, b);
    Region di = region_difference(a, b);
    Region co = complement(a);
    for (const Rational& x : separating_sample({&a, &b})) {
      bool ax = a.contains(x), bx = b.contains(x);
      CHECK(un.contains(x) == (ax || bx));
      CHECK(in.contains(x) == (ax && bx));
      CHECK(di.contains(x) == (ax && !bx));
      CHECK(co.contains(x) == !ax);
    }
    CHECK(complement(co) == a);
    CHECK(region_union(a, co) == Region::whole());
    CHECK(region_intersect(a, co) == Region());
    CHECK(complement(un) == region_intersect(co, complement(b)));
    CHECK(region_union(di, in) == a);
    CHECK(subset(in, a));
    CHECK(subset(a, un));
    CHECK(subset(a, a));
    CHECK(disjoint(di, b));
    CHECK(subset(a, b) == region_difference(a, b).is_empty());
    CHECK(disjoint(a, b) == in.is_empty());
  }
}

TEST_CASE("closure and interior") {
  CHECK(closure(ro("1/4", "1/2")) == rc("1/4", "1/2"));
  CHECK(interior(rc("1/4", "1/2")) == ro("1/4", "1/2"));
  CHECK(interior(Region::interval(q("0"), q("1/2"), true, true)) ==
        Region::interval(q("0"), q("1/2"), true, false));
  CHECK(interior(Region::point(q("1/2"))) == Region());
  CHECK(interior(Region::point(q("0"))) == Region());
  CHECK(closure(Region()) == Region());
  CHECK(interior(Region::whole()) == Region::whole());
  // closing a punctured interval fills the puncture
  CHECK(closure(region_union(ro("0", "1/2"), ro("1/2", "1"))) ==
        Region::whole());

  std::mt19937_64 rng(47);
  for (int i = 0; i < 200; ++i) {
    Region a = rnd_region(rng), b = rnd_region(rng);
    Region cl = closure(a), it = interior(a);
    CHECK(cl.is_closed());
    CHECK(it.is_open());
    CHECK(subset(a, cl));
    CHECK(subset(it, a));
    CHECK(closure(cl) == cl);
    CHECK(interior(it) == it);
    CHECK(closure(region_union(a, b)) ==
          region_union(closure(a), closure(b)));
    CHECK(interior(region_intersect(a, b)) ==
          region_intersect(interior(a), interior(b)));
    CHECK(it == complement(closure(complement(a))));
    CHECK(cl == complement(interior(complement(a))));
  }
}

TEST_CASE("distance between regions") {
  CHECK(distance(rc("0", "1/4"), rc("1/2", "1")) == q("1/4"));
  CHECK(distance(rc("0", "1/4"), rc("1/4", "1/2")) == q("0"));
  CHECK(distance(rc("0", "1/2"), rc("1/4", "1")) == q("0"));
  CHECK(distance(Region::point(q("0")),
                 region_union(rc("1/3", "1/2"), rc("1/4", "1/4"))) ==
        q("1/4"));
  CHECK_THROWS_AS(distance(Region(), rc("0", "1")), std::invalid_argument);
}

TEST_CASE("inserting an open set between a closed set and an open cover") {
  // the half-distance expansions used by the depth-2 worked example
  CHECK(insert_open(rc("0", "1/10"), parse_region("[0,9/10)")) ==
        parse_region("[0,1/2)"));
  CHECK(insert_open(rc("0", "1/10"), parse_region("[0,1/2)")) ==
        parse_region("[0,3/10)"));
  CHECK(insert_open(rc("0", "1/2"), parse_region("[0,9/10)")) ==
        parse_region("[0,7/10)"));
  CHECK(insert_open(Region::point(q("1/4")), ro("0", "1")) ==
        ro("1/8", "5/8"));
  CHECK(insert_open(Region::whole(), Region::whole()) == Region::whole());
  CHECK(insert_open(Region(), ro("0", "1")) == Region());

  CHECK_THROWS_AS(insert_open(ro("1/4", "1/2"), ro("0", "1")),
                  std::invalid_argument);
  CHECK_THROWS_AS(insert_open(rc("1/4", "1/2"), rc("0", "7/8")),
                  std::invalid_argument);
  CHECK_THROWS_AS(insert_open(rc("1/4", "1/2"), ro("1/4", "1")),
                  std::invalid_argument);

  std::mt19937_64 rng(53);
  int produced = 0;
  for (int i = 0; i < 300; ++i) {
    Region o = interior(rnd_region(rng));
    if (o.is_empty()) continue;
    // a closed box strictly inside each component (clamped at closed ends)
    std::vector<Interval> cs;
    for (const auto& oc : o.components()) {
      Rational len = oc.hi - oc.lo;
      Rational lo = oc.lo_closed ? oc.lo : oc.lo + len / Rational(4);
      Rational hi = oc.hi_closed ? oc.hi : oc.hi - len / Rational(4);
      if (lo > hi) continue;
      cs.push_back({lo, hi, true, true});
    }
    Region c(std::move(cs));
    if (!subset(c, o)) continue;
    Region v = insert_open(c, o);
    ++produced;
    CHECK(v.is_open());
    CHECK(subset(c, v));
    CHECK(subset(closure(v), o));
  }
  CHECK(produced > 100);
}

TEST_CASE("inserting with a pinned trace on a closed base set") {
  Region z = insert_with_trace(rc("9/10", "1"), parse_region("(1/10,1]"),
                               Region::whole(), rc("1/2", "1"));
  CHECK(z == rc("1/2", "1"));

  Region e2 = region_union(rc("0", "1/4"), rc("3/4", "1"));
  Region z2 = insert_with_trace(rc("7/8", "1"), parse_region("(1/2,1]"), e2,
                                rc("3/4", "1"));
  CHECK(z2 == rc("11/16", "1"));
  CHECK(region_intersect(z2, e2) == rc("3/4", "1"));

  // empty helper set: result is exactly the pinned trace
  CHECK(insert_with_trace(Region(), ro("0", "1"), rc("1/4", "1/2"),
                          rc("1/4", "1/2")) == rc("1/4", "1/2"));

  // named precondition failures
  CHECK_THROWS_WITH_AS(
      insert_with_trace(ro("1/4", "1/2"), ro("0", "1"), Region(), Region()),
      "insert_with_trace: Y must be closed", std::invalid_argument);
  CHECK_THROWS_WITH_AS(
      insert_with_trace(rc("1/4", "1/2"), rc("0", "7/8"), Region(), Region()),
      "insert_with_trace: U must be open", std::invalid_argument);
  CHECK_THROWS_AS(insert_with_trace(rc("1/4", "1/2"), ro("1/4", "1"),
                                    Region(), Region()),
                  std::invalid_argument);
  // Y touches the base set outside the pinned part
  CHECK_THROWS_AS(insert_with_trace(rc("1/4", "1/2"), ro("0", "1"),
                                    rc("1/4", "1/2"), rc("1/4", "3/8")),
                  std::invalid_argument);

  std::mt19937_64 rng(59);
  int produced = 0;
  for (int i = 0; i < 300; ++i) {
    Region u = interior(rnd_region(rng));
    if (u.is_empty()) continue;
    Region e = rnd_region(rng, 2);
    e = closure(e);
    std::vector<Interval> ys;
    for (const auto& oc : u.components()) {
      Rational len = oc.hi - oc.lo;
      Rational lo = oc.lo_closed ? oc.lo : oc.lo + len / Rational(3);
      Rational hi = oc.hi_closed ? oc.hi : oc.hi - len / Rational(3);
      if (lo > hi) continue;
      if (rng() & 1) continue;  // leave some components unused
      ys.push_back({lo, hi, true, true});
    }
    Region y(std::move(ys));
    if (!subset(y, u)) continue;
    // pin the trace of the would-be expansion: a valid input by construction
    Region c = region_intersect(e, closure(insert_open(y, u)));
    Region zz = insert_with_trace(y, u, e, c);
    ++produced;
    CHECK(zz.is_closed());
    CHECK(region_intersect(zz, e) == c);
    CHECK(subset(y, interior(zz)));
    CHECK(subset(zz, u));
  }
  CHECK(produced > 80);
}
