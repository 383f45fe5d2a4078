#ifndef HERONIAN_SVG_HPP
#define HERONIAN_SVG_HPP

#include "amicability.hpp"
#include "numeric.hpp"
#include "parallelogram.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace heronian {

struct RenderSpec {
  Parallelogram parallelogram;
  bool include_companion = false;
  int width = 640;
  int height = 360;
  int margin = 24;
};

struct Point {
  double x;
  double y;
};

/// Display-only vertices (0,0), (b,0), (b+x,h), (x,h) with x the horizontal
/// shear sqrt(side^2 - height^2). side^2 - height^2 is formed exactly before
/// the single rounding step.
inline std::array<Point, 4> vertices(const Parallelogram& p) {
  const Rational h = p.height();
  const Rational shear_sq = Rational(p.side() * p.side()) - h * h;
  const double hd = h.convert_to<double>();
  const double xd = std::sqrt(shear_sq.convert_to<double>());
  const double bd = p.base().convert_to<double>();
  return {Point{0.0, 0.0}, Point{bd, 0.0}, Point{bd + xd, hd}, Point{xd, hd}};
}

namespace detail {

inline std::string fixed9(double v) {
  if (v == 0.0) v = 0.0;  // no "-0.000000000"
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.9f", v);
  return buf;
}

}  // namespace detail

/// Standalone SVG. Vertices are written in model units (y up, flipped by a
/// group transform) so the printed coordinates are the geometric ones; the
/// viewBox does the scaling.
inline std::string render_svg(const RenderSpec& spec) {
  std::vector<Parallelogram> shapes{spec.parallelogram};
  if (spec.include_companion) shapes.push_back(companion(spec.parallelogram));

  std::vector<std::array<Point, 4>> polys;
  double total_w = 0.0, max_h = 0.0;
  for (const auto& p : shapes) {
    polys.push_back(vertices(p));
    total_w += polys.back()[2].x;
    max_h = std::max(max_h, polys.back()[2].y);
  }
  const double gap = total_w * 0.1;
  total_w += gap * static_cast<double>(shapes.size() - 1);

  const double scale = std::min((spec.width - 2.0 * spec.margin) / total_w,
                                (spec.height - 2.0 * spec.margin - 40.0) / max_h);
  const double pad = spec.margin / scale;
  const double label_band = 40.0 / scale;
  const double font = 12.0 / scale;
  const double stroke = 1.5 / scale;
  using detail::fixed9;

  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << spec.width << "\" height=\"" << spec.height
      << "\" viewBox=\"" << fixed9(-pad) << ' ' << fixed9(-max_h - pad) << ' ' << fixed9(total_w + 2 * pad)
      << ' ' << fixed9(max_h + 2 * pad + label_band) << "\">\n";

  double offset = 0.0;
  for (std::size_t i = 0; i < shapes.size(); ++i) {
    const auto& p = shapes[i];
    const auto& poly = polys[i];
    out << "  <g transform=\"translate(" << fixed9(offset) << " 0) scale(1 -1)\">\n"
        << "    <polygon points=\"";
    for (std::size_t k = 0; k < poly.size(); ++k)
      out << (k ? " " : "") << fixed9(poly[k].x) << ',' << fixed9(poly[k].y);
    out << "\" fill=\"" << (i == 0 ? "#cfe2f3" : "#f4cccc") << "\" stroke=\"#000000\" stroke-width=\""
        << fixed9(stroke) << "\"/>\n"
        << "  </g>\n";
    const Rational h = p.height();
    out << "  <text x=\"" << fixed9(offset) << "\" y=\"" << fixed9(font * 1.5) << "\" font-family=\"monospace\""
        << " font-size=\"" << fixed9(font) << "\">base " << p.base() << ", side " << p.side() << ", height "
        << numerator(h);
    if (denominator(h) != 1) out << '/' << denominator(h);
    out << "</text>\n"
        << "  <text x=\"" << fixed9(offset) << "\" y=\"" << fixed9(font * 3.0) << "\" font-family=\"monospace\""
        << " font-size=\"" << fixed9(font) << "\">area " << p.area() << ", perimeter " << p.perimeter()
        << "</text>\n";
    offset += poly[2].x + gap;
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace heronian

#endif  // HERONIAN_SVG_HPP
