#pragma once

#include <cstddef>
#include <vector>

#include "staircase/family.hpp"

namespace staircase {

// Bulk kernels.  Each has an OpenMP-parallel implementation (grid points and
// set pairs are independent work items) and a plain serial reference used to
// test it; the benchmark target compares the two.

// The uniform grid {i/N : i = 0..N}.
std::vector<Rational> uniform_grid(long n);
// Points of the uniform grid lying in r, plus the component endpoints of r.
std::vector<Rational> grid_on_region(const Region& r, long n);

// Step-function values at the given points (binary search per point).
std::vector<Family::Value> evaluate_points(const Family& fam,
                                           const std::vector<Rational>& xs,
                                           int depth);
// Serial reference: left-to-right scan per point.
std::vector<Family::Value> evaluate_points_reference(
    const Family& fam, const std::vector<Rational>& xs, int depth);

struct NestingCheck {
  bool ok = true;
  size_t i = 0, j = 0;  // first offending pair when !ok
};

// Quadratic nesting check: closure of every set inside every later set.
NestingCheck check_nesting_all_pairs(const Family& fam);
NestingCheck check_nesting_all_pairs_reference(const Family& fam);

}  // namespace staircase
