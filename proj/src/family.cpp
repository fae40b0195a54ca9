#include "staircase/family.hpp"

#include <stdexcept>

#include "staircase/grid.hpp"

namespace staircase {

namespace {

void check_build_args(const Region& A, const Region& B, int depth) {
  if (!A.is_closed())
    throw std::invalid_argument("family: A must be closed");
  if (!B.is_closed())
    throw std::invalid_argument("family: B must be closed");
  if (!disjoint(A, B))
    throw std::invalid_argument("family: A and B must be disjoint");
  if (depth < 0 || depth > kMaxFamilyDepth)
    throw std::invalid_argument("family: depth must be between 0 and " +
                                std::to_string(kMaxFamilyDepth));
}

}  // namespace

Family::Family(Region A, Region B, int depth, std::vector<FamilyEntry> entries)
    : A_(std::move(A)),
      B_(std::move(B)),
      depth_(depth),
      entries_(std::move(entries)) {
  if (depth_ < 0 || depth_ > kMaxFamilyDepth)
    throw std::invalid_argument("family: depth must be between 0 and " +
                                std::to_string(kMaxFamilyDepth));
  if (entries_.size() != (size_t(1) << depth_))
    throw std::invalid_argument("family: expected 2^depth entries");
  for (size_t i = 0; i < entries_.size(); ++i) {
    if (!(entries_[i].value == Dyadic(BigInt(long(i) + 1), depth_)))
      throw std::invalid_argument(
          "family: entry parameters must walk the dyadic lattice in order");
    bool top = i + 1 == entries_.size();
    if (top == entries_[i].index.has_value())
      throw std::invalid_argument(
          "family: every entry except the top carries an endpoint index");
    if (!top && !(entries_[i].index->plateau() == entries_[i].value))
      throw std::invalid_argument(
          "family: entry index does not match its parameter");
  }
}

const FamilyEntry& Family::entry(long k) const {
  if (k < 1 || k > (1L << depth_))
    throw std::invalid_argument("family: entry number out of range");
  return entries_[size_t(k) - 1];
}

const Region& Family::set_for(const Dyadic& p) const {
  if (p.num() == 0 || p.exp() > depth_)
    throw std::invalid_argument("family: parameter " + p.str() +
                                " is not on the lattice");
  long k = (p.num() << unsigned(depth_ - p.exp())).convert_to<long>();
  return entries_[size_t(k) - 1].set;
}

Family::Value Family::evaluate(const Rational& x) const {
  return evaluate_at_depth(x, depth_);
}

Family::Value Family::evaluate_at_depth(const Rational& x, int m) const {
  if (m < 0 || m > depth_)
    throw std::invalid_argument("family: evaluation depth out of range");
  if (x.sign() < 0 || x > Rational(1))
    throw std::domain_error("family: point outside [0, 1]");
  if (B_.is_empty()) return {Rational(0), Rational(0)};
  if (A_.contains(x)) return {Rational(0), Rational(0)};
  long step = 1L << (depth_ - m);
  long lo = 1, hi = (1L << m) - 1, first = -1;
  while (lo <= hi) {
    long mid = lo + (hi - lo) / 2;
    if (entries_[size_t(mid * step) - 1].set.contains(x)) {
      first = mid;
      hi = mid - 1;
    } else {
      lo = mid + 1;
    }
  }
  if (first < 0) return {Rational(1), Rational(1)};
  const FamilyEntry& e = entries_[size_t(first * step) - 1];
  return {e.index->alpha(), e.value.to_rational()};
}

Family::Value Family::evaluate_linear(const Rational& x) const {
  return evaluate_linear_at_depth(x, depth_);
}

Family::Value Family::evaluate_linear_at_depth(const Rational& x,
                                               int m) const {
  if (m < 0 || m > depth_)
    throw std::invalid_argument("family: evaluation depth out of range");
  if (x.sign() < 0 || x > Rational(1))
    throw std::domain_error("family: point outside [0, 1]");
  if (B_.is_empty()) return {Rational(0), Rational(0)};
  if (A_.contains(x)) return {Rational(0), Rational(0)};
  long step = 1L << (depth_ - m);
  for (long k = 1; k < (1L << m); ++k) {
    const FamilyEntry& e = entries_[size_t(k * step) - 1];
    if (e.set.contains(x)) return {e.index->alpha(), e.value.to_rational()};
  }
  return {Rational(1), Rational(1)};
}

Region Family::below(const Dyadic& zeta) const {
  if (B_.is_empty()) return Region::whole();
  if (zeta.num() == 0) return A_;
  if (zeta == Dyadic(BigInt(1), 0)) return Region::whole();
  return set_for(zeta);
}

Region Family::above(const Dyadic& zeta) const {
  return complement(below(zeta));
}

std::vector<std::pair<Dyadic, Region>> Family::fibers() const {
  std::vector<std::pair<Dyadic, Region>> out;
  long total = 1L << depth_;
  out.reserve(size_t(total) + 1);
  if (B_.is_empty()) {
    out.emplace_back(Dyadic(), Region::whole());
    for (long k = 1; k <= total; ++k)
      out.emplace_back(Dyadic(BigInt(k), depth_), Region());
    return out;
  }
  out.emplace_back(Dyadic(), A_);
  const Region* prev = &A_;
  for (long k = 1; k < total; ++k) {
    const Region& uk = entries_[size_t(k) - 1].set;
    out.emplace_back(Dyadic(BigInt(k), depth_), region_difference(uk, *prev));
    prev = &uk;
  }
  out.emplace_back(Dyadic(BigInt(1), 0), complement(*prev));
  return out;
}

std::vector<Dyadic> Family::image_values() const {
  std::vector<Dyadic> out;
  for (const auto& [value, fiber] : fibers())
    if (!fiber.is_empty()) out.push_back(value);
  return out;
}

Family build_urysohn_family(const Region& A, const Region& B, int depth) {
  check_build_args(A, B, depth);
  long total = 1L << depth;
  std::vector<FamilyEntry> entries(static_cast<size_t>(total));
  Region u1 = complement(B);
  entries[size_t(total) - 1] = {Dyadic(BigInt(1), 0), std::nullopt, u1};
  if (depth >= 1) {
    auto pos = [depth](const EndpointIndex& e) {
      Dyadic p = e.plateau();
      long k = (p.num() << unsigned(depth - p.exp())).convert_to<long>();
      return size_t(k) - 1;
    };
    EndpointIndex first(1, "");
    entries[pos(first)] = {first.plateau(), first, insert_open(A, u1)};
    for (int level = 1; level < depth; ++level) {
      for (const EndpointIndex& e : endpoints_at_level(level)) {
        const Region& u_e = entries[pos(e)].set;
        auto [q1, l1] = approach(e, 1);
        BigInt k = e.plateau().num();  // plateau is k/2^level with k odd
        Region lower_base =
            k == 1 ? A
                   : closure(entries[pos(endpoint_for_dyadic(
                                         Dyadic(k - 1, level)))]
                                 .set);
        entries[pos(q1)] = {q1.plateau(), q1, insert_open(lower_base, u_e)};
        const Region& upper_target =
            k + 1 == ipow(2, level)
                ? u1
                : entries[pos(endpoint_for_dyadic(Dyadic(k + 1, level)))].set;
        entries[pos(l1)] = {l1.plateau(), l1,
                            insert_open(closure(u_e), upper_target)};
      }
    }
  }
  return Family(A, B, depth, std::move(entries));
}

Family build_classical_family(const Region& A, const Region& B, int depth) {
  check_build_args(A, B, depth);
  long total = 1L << depth;
  std::vector<Region> sets(size_t(total) + 1);
  sets[size_t(total)] = complement(B);
  for (int m = 1; m <= depth; ++m) {
    long stride = total >> m;
    for (long k = 1; k < (1L << m); k += 2) {
      long at = k * stride;
      const Region& upper = sets[size_t(at + stride)];
      Region lower = k == 1 ? A : closure(sets[size_t(at - stride)]);
      sets[size_t(at)] = insert_open(lower, upper);
    }
  }
  std::vector<FamilyEntry> entries(static_cast<size_t>(total));
  for (long k = 1; k < total; ++k) {
    Dyadic value(BigInt(k), depth);
    entries[size_t(k) - 1] = {value, endpoint_for_dyadic(value),
                              std::move(sets[size_t(k)])};
  }
  entries[size_t(total) - 1] = {Dyadic(BigInt(1), 0), std::nullopt,
                                std::move(sets[size_t(total)])};
  return Family(A, B, depth, std::move(entries));
}

VerifyReport verify_family(const Family& fam, bool all_pairs) {
  VerifyReport r;
  auto note = [&](std::string s) { r.issues.push_back(std::move(s)); };
  const auto& es = fam.entries();

  r.structure = true;
  if (!fam.A().is_closed()) {
    r.structure = false;
    note("A is not closed");
  }
  if (!fam.B().is_closed()) {
    r.structure = false;
    note("B is not closed");
  }
  if (!disjoint(fam.A(), fam.B())) {
    r.structure = false;
    note("A and B are not disjoint");
  }
  for (const auto& e : es)
    if (!e.set.is_open()) {
      r.structure = false;
      note("set at parameter " + e.value.str() + " is not open");
      break;
    }

  r.separates = true;
  if (!subset(fam.A(), es.front().set)) {
    r.separates = false;
    note("A is not contained in the first set");
  }
  if (!disjoint(fam.B(), es.back().set)) {
    r.separates = false;
    note("B meets the top set");
  }

  r.nesting = true;
  r.strictness = true;
  if (all_pairs) {
    NestingCheck chk = check_nesting_all_pairs(fam);
    if (!chk.ok) {
      r.nesting = false;
      note("closure of set " + es[chk.i].value.str() +
           " is not contained in set " + es[chk.j].value.str());
    }
  }
  for (size_t i = 0; i + 1 < es.size(); ++i) {
    Region cl = closure(es[i].set);
    if (!subset(cl, es[i + 1].set)) {
      r.nesting = false;
      note("closure of set " + es[i].value.str() +
           " is not contained in set " + es[i + 1].value.str());
      break;
    }
    if (cl == es[i + 1].set && !es[i + 1].set.is_closed()) {
      r.strictness = false;
      note("nesting from " + es[i].value.str() + " to " +
           es[i + 1].value.str() + " is not strict");
      break;
    }
  }

  r.preimages = true;
  r.partition = true;
  auto fb = fam.fibers();
  Region acc = fb.front().second;
  for (size_t k = 1; k < fb.size(); ++k) {
    if (!disjoint(acc, fb[k].second)) {
      r.partition = false;
      note("fibers overlap at value " + fb[k].first.str());
      break;
    }
    acc = region_union(acc, fb[k].second);
    if (k + 1 < fb.size()) {
      if (!(acc == fam.below(fb[k].first))) {
        r.preimages = false;
        note("sub-level set at " + fb[k].first.str() +
             " does not telescope from the fibers");
        break;
      }
      if (!(complement(acc) == fam.above(fb[k].first))) {
        r.preimages = false;
        note("super-level set at " + fb[k].first.str() +
             " is not the complement of the sub-level set");
        break;
      }
    }
  }
  if (r.partition && !(acc == Region::whole())) {
    r.partition = false;
    note("fibers do not cover [0, 1]");
  }
  return r;
}

}  // namespace staircase
