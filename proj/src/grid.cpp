#include "staircase/grid.hpp"

#include <algorithm>
#include <stdexcept>

namespace staircase {

std::vector<Rational> uniform_grid(long n) {
  if (n < 1) throw std::invalid_argument("grid: need at least one cell");
  std::vector<Rational> xs;
  xs.reserve(size_t(n) + 1);
  for (long i = 0; i <= n; ++i) xs.emplace_back(BigInt(i), BigInt(n));
  return xs;
}

std::vector<Rational> grid_on_region(const Region& r, long n) {
  if (n < 1) throw std::invalid_argument("grid: need at least one cell");
  std::vector<Rational> xs;
  for (const auto& c : r.components()) {
    xs.push_back(c.lo);
    // ceil(n * lo) .. floor(n * hi)
    BigInt first = (c.lo.num() * n + c.lo.den() - 1) / c.lo.den();
    BigInt last = c.hi.num() * n / c.hi.den();
    for (BigInt i = first; i <= last; ++i) {
      Rational x(i, BigInt(n));
      if (r.contains(x)) xs.push_back(std::move(x));
    }
    xs.push_back(c.hi);
  }
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  return xs;
}

std::vector<Family::Value> evaluate_points(const Family& fam,
                                           const std::vector<Rational>& xs,
                                           int depth) {
  std::vector<Family::Value> out(xs.size());
  long count = long(xs.size());
#pragma omp parallel for schedule(static)
  for (long i = 0; i < count; ++i)
    out[size_t(i)] = fam.evaluate_at_depth(xs[size_t(i)], depth);
  return out;
}

std::vector<Family::Value> evaluate_points_reference(
    const Family& fam, const std::vector<Rational>& xs, int depth) {
  std::vector<Family::Value> out(xs.size());
  for (size_t i = 0; i < xs.size(); ++i)
    out[i] = fam.evaluate_linear_at_depth(xs[i], depth);
  return out;
}

NestingCheck check_nesting_all_pairs(const Family& fam) {
  const auto& es = fam.entries();
  long n = long(es.size());
  std::vector<Region> closures(es.size());
  NestingCheck result;
#pragma omp parallel for schedule(static)
  for (long i = 0; i < n; ++i) closures[size_t(i)] = closure(es[size_t(i)].set);
#pragma omp parallel for schedule(dynamic, 8)
  for (long i = 0; i < n - 1; ++i) {
    for (long j = i + 1; j < n; ++j) {
      if (!subset(closures[size_t(i)], es[size_t(j)].set)) {
#pragma omp critical
        {
          if (result.ok || i < long(result.i) ||
              (i == long(result.i) && j < long(result.j))) {
            result.ok = false;
            result.i = size_t(i);
            result.j = size_t(j);
          }
        }
        break;
      }
    }
  }
  return result;
}

NestingCheck check_nesting_all_pairs_reference(const Family& fam) {
  const auto& es = fam.entries();
  for (size_t i = 0; i + 1 < es.size(); ++i) {
    Region cl = closure(es[i].set);
    for (size_t j = i + 1; j < es.size(); ++j)
      if (!subset(cl, es[j].set)) return {false, i, j};
  }
  return {};
}

}  // namespace staircase
