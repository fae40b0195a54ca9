#include "staircase/tietze.hpp"

#include <algorithm>
#include <stdexcept>

#include "staircase/grid.hpp"

namespace staircase {

namespace {

const Rational kZero(0);
const Rational kOne(1);
const Rational kTwo(2);

void check_boundary_args(const Region& E, const PLFunction& f, int depth) {
  if (!E.is_closed())
    throw std::invalid_argument("extend: E must be closed");
  if (!(f.domain() == E))
    throw std::invalid_argument("extend: f must be defined exactly on E");
  if (depth < 0 || depth > kMaxFamilyDepth)
    throw std::invalid_argument("extend: depth must be between 0 and " +
                                std::to_string(kMaxFamilyDepth));
}

// Fatten E into a proper open superset.
Region proper_fattening(const Region& E) {
  Rational delta(1, 4);
  for (;;) {
    std::vector<Interval> fat;
    for (const auto& c : E.components()) {
      Interval iv;
      iv.lo_closed = iv.hi_closed = false;
      Rational lo = c.lo - delta, hi = c.hi + delta;
      if (lo < kZero) {
        iv.lo = kZero;
        iv.lo_closed = true;
      } else {
        iv.lo = std::move(lo);
      }
      if (hi > kOne) {
        iv.hi = kOne;
        iv.hi_closed = true;
      } else {
        iv.hi = std::move(hi);
      }
      fat.push_back(std::move(iv));
    }
    Region v2(std::move(fat));
    // Two fattened components may touch at a single missing point; the
    // closure then merges them and that point would sit strictly inside a
    // collar component, where no ramp value can satisfy the glue
    // conditions.  Shrink until distinct components have disjoint closures.
    if (!(v2 == Region::whole()) &&
        closure(v2).components().size() == v2.components().size())
      return v2;
    delta /= kTwo;  // E is proper and closed, so small fattenings qualify
  }
}

// The ramp on one collar component [u, v]: 0 at ends touching closure(V1),
// 1 at ends outside V2, linear in between, constant when only one end (or
// neither) is constrained.
PLFunction::Piece collar_piece(const Interval& comp, const Region& cl_v1,
                               const Region& v2) {
  auto forced = [&](const Rational& x) -> std::optional<Rational> {
    if (cl_v1.contains(x)) return kZero;
    if (!v2.contains(x)) return kOne;
    return std::nullopt;
  };
  std::optional<Rational> fu = forced(comp.lo), fv = forced(comp.hi);
  PLFunction::Piece piece;
  if (comp.lo == comp.hi) {
    piece.points.emplace_back(comp.lo, fu ? *fu : kZero);
    return piece;
  }
  if (fu && fv && !(*fu == *fv)) {
    piece.points.emplace_back(comp.lo, *fu);
    piece.points.emplace_back(comp.hi, *fv);
    return piece;
  }
  Rational c = fu ? *fu : (fv ? *fv : kZero);
  piece.points.emplace_back(comp.lo, c);
  piece.points.emplace_back(comp.hi, c);
  return piece;
}

}  // namespace

Family build_trace_family(const Region& E, const PLFunction& f, int depth) {
  check_boundary_args(E, f, depth);
  if (E.is_empty()) throw SurjectivityRequired("boundary set is empty");
  if (!f.surjective_onto_unit())
    throw SurjectivityRequired("boundary data is not onto [0, 1]");
  Region A = f.preimage_at(kZero);
  Region B = f.preimage_at(kOne);

  long total = 1L << depth;
  // Complements of the family sets, built top-down in parameter: slot k
  // holds the closed set for parameter k/2^depth, slot `total` starts as B.
  std::vector<Region> z(size_t(total) + 1);
  z[size_t(total)] = B;
  Rational tail = pow2_inv(depth);
  for (int m = 1; m <= depth; ++m) {
    long stride = total >> m;
    for (long k = 1; k < (1L << m); k += 2) {
      long at = k * stride;
      Rational t(BigInt(k), ipow(2, m));
      Region C = f.preimage_ge(t);
      // Pad the successor with everything that must stay deep inside: the
      // points whose value already clears t by a full lattice step.
      Region Y = region_union(z[size_t(at + stride)], f.preimage_ge(t + tail));
      Region U = k == 1 ? complement(A) : interior(z[size_t(at - stride)]);
      z[size_t(at)] = insert_with_trace(Y, U, E, C);
    }
  }

  std::vector<FamilyEntry> entries(static_cast<size_t>(total));
  for (long k = 1; k < total; ++k) {
    Dyadic value(BigInt(k), depth);
    entries[size_t(k) - 1] = {value, endpoint_for_dyadic(value),
                              complement(z[size_t(k)])};
  }
  entries[size_t(total) - 1] = {Dyadic(BigInt(1), 0), std::nullopt,
                                complement(z[size_t(total)])};
  return Family(std::move(A), std::move(B), depth, std::move(entries));
}

Rational Extension::evaluate(const Rational& x) const {
  if (kind == Case::Exact) return (*exact)(x);
  return family->evaluate(x).F;
}

const char* case_name(Extension::Case c) {
  switch (c) {
    case Extension::Case::Exact:
      return "exact";
    case Extension::Case::Direct:
      return "direct";
    case Extension::Case::Collar:
      return "collar";
  }
  return "?";
}

Extension extend(const Region& E, const PLFunction& f, int depth) {
  check_boundary_args(E, f, depth);
  Extension ext;
  ext.E = E;
  ext.f = f;
  ext.depth = depth;

  if (E.is_empty()) {
    ext.kind = Extension::Case::Exact;
    ext.exact = PLFunction::constant(Region::whole(), kZero);
    return ext;
  }
  if (E == Region::whole()) {
    ext.kind = Extension::Case::Exact;
    ext.exact = f;
    return ext;
  }

  try {
    ext.family = build_trace_family(E, f, depth);
    ext.kind = Extension::Case::Direct;
    return ext;
  } catch (const SurjectivityRequired&) {
    // fall through to the collar construction
  }

  Region v2 = proper_fattening(E);
  Region v1 = insert_open(E, v2);
  Region cl_v1 = closure(v1);
  Region collar = region_difference(closure(v2), v1);
  Region d = region_union(collar, E);

  // Assemble the glued data: f on the E components, ramps on the collar.
  std::vector<PLFunction::Piece> pieces;
  const auto& e_comps = E.components();
  size_t ei = 0;
  for (const auto& comp : d.components()) {
    if (ei < e_comps.size() && comp == e_comps[ei]) {
      pieces.push_back(f.pieces()[ei]);
      ++ei;
    } else {
      pieces.push_back(collar_piece(comp, cl_v1, v2));
    }
  }
  if (ei != e_comps.size())
    throw std::logic_error("extend: boundary components lost in the collar");
  PLFunction glued(d, std::move(pieces));
  if (!glued.surjective_onto_unit())
    throw std::logic_error("extend: collar ramp failed to reach [0, 1]");

  ext.kind = Extension::Case::Collar;
  ext.V1 = std::move(v1);
  ext.V2 = std::move(v2);
  ext.D = d;
  ext.family = build_trace_family(d, glued, depth);
  ext.glued = std::move(glued);
  return ext;
}

ExtensionReport verify_extension(const Extension& ext, long grid_cells) {
  ExtensionReport r;
  auto note = [&](std::string s) { r.issues.push_back(std::move(s)); };

  r.shape = true;
  if (!ext.E.is_closed()) {
    r.shape = false;
    note("E is not closed");
  }
  if (!(ext.f.domain() == ext.E)) {
    r.shape = false;
    note("boundary data is not defined exactly on E");
  }

  r.collar = true;
  const Region* trace_domain = &ext.E;
  const PLFunction* trace_data = &ext.f;

  switch (ext.kind) {
    case Extension::Case::Exact: {
      if (!ext.exact || ext.family) {
        r.shape = false;
        note("exact route must carry a piecewise-linear extension only");
        break;
      }
      if (!(ext.exact->domain() == Region::whole())) {
        r.shape = false;
        note("exact extension is not defined on all of [0, 1]");
      }
      bool trivial = ext.E.is_empty();
      if (!trivial && !(ext.E == Region::whole())) {
        r.shape = false;
        note("exact route requires an empty or full boundary set");
      }
      if (!trivial && !(*ext.exact == ext.f)) {
        r.shape = false;
        note("exact extension does not equal the boundary data");
      }
      break;
    }
    case Extension::Case::Direct: {
      if (!ext.family || ext.exact) {
        r.shape = false;
        note("direct route must carry a family");
        break;
      }
      if (!(ext.family->A() == ext.f.preimage_at(Rational(0)))) {
        r.shape = false;
        note("A is not the zero set of the boundary data");
      }
      if (!(ext.family->B() == ext.f.preimage_at(Rational(1)))) {
        r.shape = false;
        note("B is not the one set of the boundary data");
      }
      break;
    }
    case Extension::Case::Collar: {
      if (!ext.family || !ext.V1 || !ext.V2 || !ext.D || !ext.glued) {
        r.shape = false;
        note("collar route must carry V1, V2, D, glued data and a family");
        break;
      }
      const Region& v1 = *ext.V1;
      const Region& v2 = *ext.V2;
      Region cl_v1 = closure(v1);
      Region collar = region_difference(closure(v2), v1);
      if (!v1.is_open() || !v2.is_open()) {
        r.collar = false;
        note("V1 and V2 must be open");
      }
      if (!subset(ext.E, v1) || !subset(cl_v1, v2)) {
        r.collar = false;
        note("need E inside V1 and closure(V1) inside V2");
      }
      if (v2 == Region::whole()) {
        r.collar = false;
        note("V2 must be a proper subset");
      }
      if (!(*ext.D == region_union(collar, ext.E))) {
        r.collar = false;
        note("D is not the collar joined with E");
      }
      if (!(ext.glued->domain() == *ext.D)) {
        r.collar = false;
        note("glued data is not defined exactly on D");
      }
      // glued restricted to E equals f
      bool agrees = true;
      const auto& d_comps = ext.D->components();
      size_t ei = 0;
      for (size_t i = 0; i < d_comps.size() && agrees; ++i) {
        if (ei < ext.E.components().size() &&
            d_comps[i] == ext.E.components()[ei]) {
          if (!(ext.glued->pieces()[i].points == ext.f.pieces()[ei].points))
            agrees = false;
          ++ei;
        }
      }
      if (!agrees || ei != ext.E.components().size()) {
        r.collar = false;
        note("glued data does not restrict to the boundary data on E");
      }
      if (!subset(region_intersect(collar, cl_v1),
                  ext.glued->preimage_at(Rational(0)))) {
        r.collar = false;
        note("glued data is not 0 where the collar meets closure(V1)");
      }
      if (!subset(region_difference(collar, v2),
                  ext.glued->preimage_at(Rational(1)))) {
        r.collar = false;
        note("glued data is not 1 where the collar leaves V2");
      }
      if (!ext.glued->surjective_onto_unit()) {
        r.collar = false;
        note("glued data is not onto [0, 1]");
      }
      if (!(ext.family->A() == ext.glued->preimage_at(Rational(0))) ||
          !(ext.family->B() == ext.glued->preimage_at(Rational(1)))) {
        r.collar = false;
        note("family ends do not match the glued data");
      }
      trace_domain = &*ext.D;
      trace_data = &*ext.glued;
      break;
    }
  }

  if (ext.kind == Extension::Case::Exact) {
    r.family_ok = r.traces = true;
  } else if (!ext.family) {
    r.family_ok = r.traces = false;
  } else {
    VerifyReport fr = verify_family(*ext.family);
    r.family_ok = fr.ok();
    for (auto& s : fr.issues) note("family: " + s);
    r.traces = true;
    for (const auto& entry : ext.family->entries()) {
      Region got = region_intersect(complement(entry.set), *trace_domain);
      Region want = trace_data->preimage_ge(entry.value.to_rational());
      if (!(got == want)) {
        r.traces = false;
        note("trace at parameter " + entry.value.str() +
             " does not match the boundary data");
        break;
      }
    }
  }

  r.approx = true;
  if (!ext.E.is_empty()) {
    Rational tol = pow2_inv(ext.depth);
    std::vector<Rational> xs = grid_on_region(ext.E, grid_cells);
    for (const auto& piece : ext.f.pieces())
      for (const auto& [x, y] : piece.points) xs.push_back(x);
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    for (const auto& x : xs) {
      Rational diff = abs(ext.evaluate(x) - ext.f(x));
      if (diff > tol) {
        r.approx = false;
        note("extension misses the boundary data by " + diff.str() + " at " +
             x.str());
        break;
      }
    }
  }
  return r;
}

}  // namespace staircase
