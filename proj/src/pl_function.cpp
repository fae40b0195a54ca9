#include "staircase/pl_function.hpp"

#include <algorithm>
#include <stdexcept>

namespace staircase {

namespace {

const Rational kZero(0);
const Rational kOne(1);

bool piece_points_equal(const PLFunction::Piece& a, const PLFunction::Piece& b) {
  return a.points == b.points;
}

}  // namespace

PLFunction::PLFunction(Region domain, std::vector<Piece> pieces)
    : domain_(std::move(domain)), pieces_(std::move(pieces)) {
  if (!domain_.is_closed())
    throw std::invalid_argument("pl: domain must be closed");
  const auto& comps = domain_.components();
  if (pieces_.size() != comps.size())
    throw std::invalid_argument(
        "pl: need exactly one breakpoint list per domain component");
  for (size_t i = 0; i < comps.size(); ++i) {
    const auto& pts = pieces_[i].points;
    if (pts.empty())
      throw std::invalid_argument("pl: empty breakpoint list");
    if (!(pts.front().first == comps[i].lo) ||
        !(pts.back().first == comps[i].hi))
      throw std::invalid_argument(
          "pl: breakpoints must span their domain component");
    for (size_t k = 0; k < pts.size(); ++k) {
      if (k > 0 && !(pts[k - 1].first < pts[k].first))
        throw std::invalid_argument(
            "pl: breakpoint abscissae must strictly increase");
      if (pts[k].second < kZero || pts[k].second > kOne)
        throw std::invalid_argument("pl: values must lie in [0, 1]");
    }
    if (comps[i].lo == comps[i].hi && pts.size() != 1)
      throw std::invalid_argument(
          "pl: a single-point component carries a single pair");
  }
}

PLFunction PLFunction::constant(const Region& domain, const Rational& value) {
  std::vector<Piece> pieces;
  for (const auto& c : domain.components()) {
    Piece p;
    p.points.emplace_back(c.lo, value);
    if (c.lo != c.hi) p.points.emplace_back(c.hi, value);
    pieces.push_back(std::move(p));
  }
  return PLFunction(domain, std::move(pieces));
}

Rational PLFunction::operator()(const Rational& x) const {
  const auto& comps = domain_.components();
  for (size_t i = 0; i < comps.size(); ++i) {
    if (x < comps[i].lo) break;
    if (x > comps[i].hi) continue;
    const auto& pts = pieces_[i].points;
    if (pts.size() == 1) return pts.front().second;
    for (size_t k = 1; k < pts.size(); ++k) {
      if (x <= pts[k].first) {
        const auto& [x1, y1] = pts[k - 1];
        const auto& [x2, y2] = pts[k];
        return y1 + (y2 - y1) * (x - x1) / (x2 - x1);
      }
    }
  }
  throw std::domain_error("pl: point " + x.str() + " outside the domain");
}

Region PLFunction::image() const {
  std::vector<Interval> out;
  for (const auto& piece : pieces_) {
    Rational lo = piece.points.front().second;
    Rational hi = lo;
    for (const auto& [x, y] : piece.points) {
      if (y < lo) lo = y;
      if (y > hi) hi = y;
    }
    out.push_back({std::move(lo), std::move(hi), true, true});
  }
  return Region(std::move(out));
}

bool PLFunction::surjective_onto_unit() const {
  return image() == Region::whole();
}

Region PLFunction::preimage(const Rational& lo, const Rational& hi) const {
  if (lo > hi) throw std::invalid_argument("pl: preimage of an empty interval");
  std::vector<Interval> out;
  for (const auto& piece : pieces_) {
    const auto& pts = piece.points;
    if (pts.size() == 1) {
      const auto& [x, y] = pts.front();
      if (lo <= y && y <= hi) out.push_back({x, x, true, true});
      continue;
    }
    for (size_t k = 1; k < pts.size(); ++k) {
      const auto& [x1, y1] = pts[k - 1];
      const auto& [x2, y2] = pts[k];
      if (y1 == y2) {
        if (lo <= y1 && y1 <= hi) out.push_back({x1, x2, true, true});
        continue;
      }
      Rational ylo = staircase::max(lo, staircase::min(y1, y2));
      Rational yhi = staircase::min(hi, staircase::max(y1, y2));
      if (ylo > yhi) continue;
      Rational slope_inv = (x2 - x1) / (y2 - y1);
      Rational xa = x1 + (ylo - y1) * slope_inv;
      Rational xb = x1 + (yhi - y1) * slope_inv;
      if (xb < xa) std::swap(xa, xb);
      out.push_back({std::move(xa), std::move(xb), true, true});
    }
  }
  return Region(std::move(out));
}

bool operator==(const PLFunction& a, const PLFunction& b) {
  if (!(a.domain_ == b.domain_)) return false;
  for (size_t i = 0; i < a.pieces_.size(); ++i)
    if (!piece_points_equal(a.pieces_[i], b.pieces_[i])) return false;
  return true;
}

}  // namespace staircase
