#include "staircase/svg.hpp"

#include <algorithm>
#include <cstdio>
#include <stdexcept>

namespace staircase {

namespace {

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

}  // namespace

std::string render_family_svg(const Family& fam, int width, int height) {
  if (width < 100 || height < 100)
    throw std::invalid_argument("svg: picture too small");
  const double margin = 40.0;
  const double w = width - 2 * margin;
  const double h = height - 2 * margin;
  auto sx = [&](const Rational& x) { return margin + x.to_double() * w; };
  auto sy = [&](const Rational& y) {
    return double(height) - margin - y.to_double() * h;
  };

  std::string svg;
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" +
         std::to_string(width) + "\" height=\"" + std::to_string(height) +
         "\" viewBox=\"0 0 " + std::to_string(width) + " " +
         std::to_string(height) + "\">\n";
  svg += "<title>separating staircase, depth " + std::to_string(fam.depth()) +
         "</title>\n";
  svg += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  svg += "<rect x=\"" + num(margin) + "\" y=\"" + num(margin) + "\" width=\"" +
         num(w) + "\" height=\"" + num(h) +
         "\" fill=\"none\" stroke=\"#888888\" stroke-width=\"1\"/>\n";

  // nested sets as translucent bands at the height of their parameter
  double band = std::max(2.0, h / double(4 << fam.depth()));
  for (const auto& e : fam.entries()) {
    double y = sy(e.value.to_rational());
    for (const auto& c : e.set.components()) {
      svg += "<rect x=\"" + num(sx(c.lo)) + "\" y=\"" + num(y) +
             "\" width=\"" + num(sx(c.hi) - sx(c.lo)) + "\" height=\"" +
             num(band) + "\" fill=\"#4477cc\" fill-opacity=\"0.25\"/>\n";
    }
  }

  // the staircase itself, one horizontal stroke per fiber component
  for (const auto& [value, fiber] : fam.fibers()) {
    double y = sy(value.to_rational());
    for (const auto& c : fiber.components()) {
      if (c.lo == c.hi) {
        svg += "<circle cx=\"" + num(sx(c.lo)) + "\" cy=\"" + num(y) +
               "\" r=\"1.700000\" fill=\"#cc3333\"/>\n";
      } else {
        svg += "<line x1=\"" + num(sx(c.lo)) + "\" y1=\"" + num(y) +
               "\" x2=\"" + num(sx(c.hi)) + "\" y2=\"" + num(y) +
               "\" stroke=\"#cc3333\" stroke-width=\"2\"/>\n";
      }
    }
  }

  // A along the bottom edge, B along the top edge
  for (const auto& c : fam.A().components())
    svg += "<rect x=\"" + num(sx(c.lo)) + "\" y=\"" +
           num(double(height) - margin + 6.0) + "\" width=\"" +
           num(std::max(sx(c.hi) - sx(c.lo), 1.5)) +
           "\" height=\"6.000000\" fill=\"#33aa55\"/>\n";
  for (const auto& c : fam.B().components())
    svg += "<rect x=\"" + num(sx(c.lo)) + "\" y=\"" + num(margin - 12.0) +
           "\" width=\"" + num(std::max(sx(c.hi) - sx(c.lo), 1.5)) +
           "\" height=\"6.000000\" fill=\"#aa3355\"/>\n";

  svg += "</svg>\n";
  return svg;
}

}  // namespace staircase
