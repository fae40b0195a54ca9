#pragma once

#include <string>

#include "staircase/family.hpp"

namespace staircase {

// Deterministic SVG picture of a family: the staircase drawn from the exact
// fibers, a translucent horizontal band per nested set at the height of its
// parameter, and markers for A and B.  The only place in the library where
// values are rounded (to 6 decimal places, for coordinates).
std::string render_family_svg(const Family& fam, int width = 800,
                              int height = 480);

}  // namespace staircase
