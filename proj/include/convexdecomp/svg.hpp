#pragma once

#include <algorithm>
#include <string>

#include "convexdecomp/decomposition.hpp"
#include "convexdecomp/geometry.hpp"
#include "convexdecomp/radial.hpp"

namespace convexdecomp {

// Static SVG: hull outline, one filled polygon per cell, every point labeled
// with its radial rank and sign. Pure integer output, so identical inputs
// give byte-identical documents.
inline std::string render_svg(const Decomposition& d, const PointSet& ps) {
  if (d.cells.empty()) throw Error("nothing to render");
  static constexpr const char* kPalette[] = {
      "#8dd3c7", "#ffffb3", "#bebada", "#fb8072", "#80b1d3", "#fdb462",
      "#b3de69", "#fccde5", "#d9d9d9", "#bc80bd", "#ccebc5", "#ffed6f"};
  constexpr int kPaletteSize = 12;

  Coord xlo = ps[0].x, xhi = ps[0].x, ylo = ps[0].y, yhi = ps[0].y;
  for (int i = 1; i < ps.size(); ++i) {
    xlo = std::min(xlo, ps[i].x);
    xhi = std::max(xhi, ps[i].x);
    ylo = std::min(ylo, ps[i].y);
    yhi = std::max(yhi, ps[i].y);
  }
  const Coord extent = std::max<Coord>(std::max(xhi - xlo, yhi - ylo), 1);
  const Coord pad = std::max<Coord>(extent / 12, 1);
  const Coord stroke = std::max<Coord>(extent / 400, 1);
  const Coord font = std::max<Coord>(extent / 30, 1);
  const Coord dot = std::max<Coord>(extent / 150, 1);
  // flip y so larger y renders upward
  auto fy = [&](Coord y) { return ylo + yhi - y; };

  std::string out;
  auto num = [](Coord v) { return std::to_string(v); };
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"";
  out += num(xlo - pad) + " " + num(fy(yhi) - pad) + " " +
         num(xhi - xlo + 2 * pad) + " " + num(yhi - ylo + 2 * pad) + "\">\n";

  std::vector<Polygon> cells = d.cells;
  canonicalize_cells(cells);
  for (size_t ci = 0; ci < cells.size(); ++ci) {
    out += "  <polygon points=\"";
    for (int i = 0; i < cells[ci].size(); ++i) {
      if (i) out += ' ';
      const Point& p = ps[cells[ci][i]];
      out += num(p.x) + "," + num(fy(p.y));
    }
    out += "\" fill=\"";
    out += kPalette[ci % kPaletteSize];
    out += "\" stroke=\"#333333\" stroke-width=\"" + num(stroke) + "\"/>\n";
  }

  const Polygon hull = convex_hull(ps);
  out += "  <polygon points=\"";
  for (int i = 0; i < hull.size(); ++i) {
    if (i) out += ' ';
    const Point& p = ps[hull[i]];
    out += num(p.x) + "," + num(fy(p.y));
  }
  out += "\" fill=\"none\" stroke=\"#000000\" stroke-width=\"" +
         num(2 * stroke) + "\"/>\n";

  const RadialStructure rs = build_radial_structure(ps);
  for (int r = 1; r <= rs.n; ++r) {
    const Point& p = ps[rs.point_at(r)];
    out += "  <circle cx=\"" + num(p.x) + "\" cy=\"" + num(fy(p.y)) +
           "\" r=\"" + num(dot) + "\" fill=\"#000000\"/>\n";
    std::string label = "p" + std::to_string(r);
    if (rs.labeled(r)) label += rs.is_plus(r) ? '+' : '-';
    out += "  <text x=\"" + num(p.x + dot) + "\" y=\"" +
           num(fy(p.y) - dot) + "\" font-size=\"" + num(font) +
           "\" font-family=\"sans-serif\">" + label + "</text>\n";
  }
  out += "</svg>\n";
  return out;
}

}  // namespace convexdecomp
