#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "staircase/family.hpp"
#include "staircase/pl_function.hpp"

namespace staircase {

// Thrown by build_trace_family when the boundary data does not reach both
// ends of [0, 1]; extend() catches it and routes through the collar.
struct SurjectivityRequired : std::runtime_error {
  explicit SurjectivityRequired(const std::string& why)
      : std::runtime_error(why) {}
};

// The nested family whose complements trace the given boundary data: for
// every parameter t on the lattice, complement(U_t) meets E exactly in
// f^{-1}([t, 1]).  Requires f onto [0, 1] (so f^{-1}(0) and f^{-1}(1) are
// nonempty and become A and B); throws SurjectivityRequired otherwise.
Family build_trace_family(const Region& E, const PLFunction& f, int depth);

// A depth-n extension of boundary data f on E to all of [0, 1]:
// continuous staircase F with F = 0 on f^{-1}(0), F = 1 on f^{-1}(1), and
// |F - f| <= 2^-depth on E.  Three routes:
//   Exact:   E is empty or all of [0, 1]; F is piecewise linear, no family.
//   Direct:  f is onto [0, 1]; the trace family drives F.
//   Collar:  f misses part of [0, 1]; f is first glued with a ramp on a
//            collar around E, making it onto, then handled as Direct.
struct Extension {
  enum class Case { Exact, Direct, Collar };

  Region E;
  PLFunction f;
  int depth = 0;
  Case kind = Case::Exact;

  std::optional<PLFunction> exact;  // engaged for Exact
  std::optional<Family> family;     // engaged for Direct and Collar

  // Collar intermediates: open V1, V2 with E inside V1, closure(V1) inside
  // V2 proper; D = (closure(V2) minus V1) union E; glued agrees with f on E
  // and ramps between 0 and 1 on the collar.
  std::optional<Region> V1, V2, D;
  std::optional<PLFunction> glued;

  Rational evaluate(const Rational& x) const;
};

const char* case_name(Extension::Case c);  // "exact", "direct", "collar"

Extension extend(const Region& E, const PLFunction& f, int depth);

struct ExtensionReport {
  bool shape = false;      // kinds, domains, A/B agreement
  bool collar = false;     // collar structure and glue conditions
  bool family_ok = false;  // the nested family verifies
  bool traces = false;     // complement-trace identity at every parameter
  bool approx = false;     // |F - f| within 2^-depth on the boundary grid
  std::vector<std::string> issues;
  bool ok() const { return shape && collar && family_ok && traces && approx; }
};

ExtensionReport verify_extension(const Extension& ext, long grid_cells = 1000);

}  // namespace staircase
