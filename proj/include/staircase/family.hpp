#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "staircase/cantor.hpp"
#include "staircase/region.hpp"

namespace staircase {

// One member of the nested family of open sets: the open set itself, keyed
// by its dyadic parameter.  Every parameter in (0, 1) is the plateau value
// of a removed-interval endpoint, whose index is kept; the top entry has
// parameter 1 and no index.
struct FamilyEntry {
  Dyadic value;                        // parameter in (0, 1]
  std::optional<EndpointIndex> index;  // engaged iff value < 1
  Region set;                          // open in [0, 1]
};

// A depth-n nested family separating two disjoint closed sets A and B:
// 2^n - 1 open sets indexed by the endpoints of level <= n, plus the top
// set, the complement of B.  Entries are sorted by parameter, so the
// parameters are exactly k/2^n for k = 1 .. 2^n, and nesting means the
// closure of each entry's set is contained in the next entry's set.
//
// The induced step function is F(x) = value of the first entry whose set
// contains x (0 on A, 1 when no entry matches); g(x) is the corresponding
// endpoint (0 on A, 1 at the top).
class Family {
 public:
  Family(Region A, Region B, int depth, std::vector<FamilyEntry> entries);

  const Region& A() const { return A_; }
  const Region& B() const { return B_; }
  int depth() const { return depth_; }
  const std::vector<FamilyEntry>& entries() const { return entries_; }

  // Entry for parameter k/2^depth, k = 1 .. 2^depth (k = 2^depth is the
  // top entry).
  const FamilyEntry& entry(long k) const;
  // Entry whose parameter is p; throws if p is not on the lattice.
  const Region& set_for(const Dyadic& p) const;

  struct Value {
    Rational g;  // minimizing parameter: 0, an endpoint, or 1
    Rational F;  // the step-function value, g pushed through the staircase
  };

  // Binary-search evaluation, using the nesting of the sets.
  Value evaluate(const Rational& x) const;
  // Evaluation against the truncated family of level <= m.
  Value evaluate_at_depth(const Rational& x, int m) const;
  // Plain left-to-right scan; reference implementation for the above.
  Value evaluate_linear(const Rational& x) const;
  Value evaluate_linear_at_depth(const Rational& x, int m) const;

  // {x : F(x) <= zeta} for lattice zeta; equals the set with plateau zeta
  // (A for zeta = 0, everything for zeta = 1).
  Region below(const Dyadic& zeta) const;
  // {x : F(x) > zeta}, the complement of below(zeta).
  Region above(const Dyadic& zeta) const;

  // The level sets of F, in increasing order of value: 2^depth + 1 pairs
  // (value, F^{-1}(value)), some possibly empty.
  std::vector<std::pair<Dyadic, Region>> fibers() const;
  // Values with nonempty fiber, increasing.
  std::vector<Dyadic> image_values() const;

 private:
  Region A_, B_;
  int depth_;
  std::vector<FamilyEntry> entries_;
};

inline constexpr int kMaxFamilyDepth = 20;

// The endpoint-indexed construction: the top set is the complement of B,
// the first endpoint set is inserted between A and the top, and each later
// level inserts the two approximants of every endpoint between its
// neighbours, using insert_open as the expansion witness.
Family build_urysohn_family(const Region& A, const Region& B, int depth);

// The textbook bisection construction over the dyadics directly, kept as an
// independent reference: same expansion witness, different indexing and
// traversal.  Produces the same sets entry for entry.
Family build_classical_family(const Region& A, const Region& B, int depth);

struct VerifyReport {
  bool structure = false;   // shapes: A, B closed disjoint, sets open, count
  bool separates = false;   // A inside every set, B outside every set
  bool nesting = false;     // closure of each set inside the next
  bool strictness = false;  // nesting strict unless the outer set is clopen
  bool preimages = false;   // below(z) telescopes from the fibers, above(z)
                            // complements it, at every lattice level
  bool partition = false;   // fibers are disjoint and cover [0, 1]
  std::vector<std::string> issues;
  bool ok() const {
    return structure && separates && nesting && strictness && preimages &&
           partition;
  }
};

// all_pairs selects the quadratic nesting check (every p < q) instead of
// the consecutive-pair check (equivalent by transitivity).
VerifyReport verify_family(const Family& fam, bool all_pairs = false);

}  // namespace staircase
