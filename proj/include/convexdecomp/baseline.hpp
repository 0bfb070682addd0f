#pragma once

#include <string>
#include <vector>

#include "convexdecomp/decomposition.hpp"
#include "convexdecomp/geometry.hpp"
#include "convexdecomp/radial.hpp"

namespace convexdecomp {

// The star polygon V over the positive points and the regions of
// Conv(P) \ V, each bounded by one hull chain and one V chain.
struct PocketSet {
  Polygon star;
  std::vector<Polygon> pockets;
};

namespace detail {

// Fan-sector polygon for a positive run: anchor, then ranks lo-1..hi+1 in
// radial order. An empty run degenerates to the triangle of its flanks.
inline Polygon a_polygon_for_run(const Run& run, const RadialStructure& rs) {
  std::vector<int> ids;
  ids.push_back(rs.anchor);
  for (int r = run.lo - 1; r <= run.hi + 1; ++r) ids.push_back(rs.point_at(r));
  return Polygon::of(std::move(ids));
}

// Cap polygon over a negative run: the chain from the left flank to the
// right flank, closed by the chord between the flanks.
inline Polygon b_polygon_for_run(const Run& run, const RadialStructure& rs,
                                 const PointSet& ps) {
  std::vector<int> ids;
  for (int r = run.lo - 1; r <= run.hi + 1; ++r) ids.push_back(rs.point_at(r));
  return make_ccw(std::move(ids), ps);
}

// Cells covering the fan sector of ranks [lo, hi]: one fan-sector polygon
// per positive run (with flank triangles when the interval starts or ends
// negative) plus cap polygons and inner fan triangles per negative run.
inline void range_fan_cells(const RadialStructure& rs, const PointSet& ps,
                            int lo, int hi, Decomposition& d, int* a_count) {
  if (a_count) *a_count = 0;
  if (hi <= lo) return;
  if (hi == lo + 1) {
    detail::commit_cell(
        d,
        Polygon::of({rs.anchor, rs.point_at(lo), rs.point_at(hi)}),
        true, ps, "a-polygon");
    if (a_count) ++*a_count;
    return;
  }
  auto plus = [&](int r) { return rs.is_plus(r); };
  if (!plus(lo + 1)) {
    detail::commit_cell(
        d, Polygon::of({rs.anchor, rs.point_at(lo), rs.point_at(lo + 1)}),
        true, ps, "a-polygon");
    if (a_count) ++*a_count;
  }
  int r = lo + 1;
  while (r <= hi - 1) {
    int end = r;
    while (end + 1 <= hi - 1 && plus(end + 1) == plus(r)) ++end;
    const Run run{r, end};
    if (plus(r)) {
      detail::commit_cell(d, a_polygon_for_run(run, rs), true, ps,
                          "a-polygon");
      if (a_count) ++*a_count;
    } else {
      detail::commit_cell(d, b_polygon_for_run(run, rs, ps), true, ps,
                          "b-polygon");
      for (int m = run.lo; m <= run.hi - 1; ++m) {
        detail::commit_cell(
            d,
            Polygon::of({rs.anchor, rs.point_at(m), rs.point_at(m + 1)}),
            true, ps, "b-fan");
        ++d.acct.t_b;
      }
    }
    r = end + 1;
  }
  if (!plus(hi - 1)) {
    detail::commit_cell(
        d, Polygon::of({rs.anchor, rs.point_at(hi - 1), rs.point_at(hi)}),
        true, ps, "a-polygon");
    if (a_count) ++*a_count;
  }
}

}  // namespace detail

// Polygon for A_j (1-based block position mirrors the math; callers index
// rs.blocks_a 0-based).
inline Polygon build_a_polygon(int j, const RadialStructure& rs) {
  return detail::a_polygon_for_run(rs.blocks_a[static_cast<size_t>(j)], rs);
}

inline Polygon build_b_polygon(int j, const RadialStructure& rs,
                               const PointSet& ps) {
  return detail::b_polygon_for_run(rs.blocks_b[static_cast<size_t>(j)], rs,
                                   ps);
}

// Fan triangles from the anchor over each negative run: |B_j| - 1 per run.
inline std::vector<Polygon> build_b_fans(const RadialStructure& rs) {
  std::vector<Polygon> out;
  for (const Run& run : rs.blocks_b) {
    for (int m = run.lo; m <= run.hi - 1; ++m) {
      out.push_back(
          Polygon::of({rs.anchor, rs.point_at(m), rs.point_at(m + 1)}));
    }
  }
  return out;
}

// V is star-shaped about the anchor; every hull vertex is on V (a hull
// vertex cannot lie inside any triangle, so it is never negative). Each
// pocket hangs below one hull edge not incident to the anchor.
inline PocketSet compute_pockets(const RadialStructure& rs,
                                 const PointSet& ps) {
  PocketSet out;
  std::vector<int> star;
  star.push_back(rs.anchor);
  for (int r = 2; r <= rs.n; ++r) {
    if (rs.plus_like(r)) star.push_back(rs.point_at(r));
  }
  out.star = Polygon::of(std::move(star));

  const Polygon hull = convex_hull(ps);
  std::vector<bool> on_hull(static_cast<size_t>(ps.size()), false);
  for (int id : hull.v) on_hull[static_cast<size_t>(id)] = true;

  // Walk V between consecutive hull vertices; a nonempty chain in between
  // bounds a pocket together with the skipped hull edge.
  const std::vector<int>& v = out.star.v;
  const int mv = static_cast<int>(v.size());
  int start = 0;
  while (!on_hull[static_cast<size_t>(v[static_cast<size_t>(start)])]) {
    ++start;  // anchor is on the hull, so this terminates immediately
  }
  int t = start;
  while (true) {
    int u = t;
    std::vector<int> chain;
    int w = -1;
    for (int step = 1; step <= mv; ++step) {
      const int idx = v[static_cast<size_t>((u + step) % mv)];
      if (on_hull[static_cast<size_t>(idx)]) {
        w = (u + step) % mv;
        break;
      }
      chain.push_back(idx);
    }
    assert(w != -1);
    if (!chain.empty()) {
      std::vector<int> pocket;
      pocket.push_back(v[static_cast<size_t>(u)]);
      pocket.push_back(v[static_cast<size_t>(w)]);
      for (auto it = chain.rbegin(); it != chain.rend(); ++it) {
        pocket.push_back(*it);
      }
      out.pockets.push_back(Polygon::of(std::move(pocket)));
    }
    t = w;
    if (t == start) break;
  }
  return out;
}

// Ear-clip every pocket over its own boundary; the pocket boundary already
// carries all relevant points, so the triangles are empty by construction
// (still checked by the committing caller).
inline std::vector<Polygon> triangulate_pockets(const PocketSet& pockets,
                                                const PointSet& ps) {
  std::vector<Polygon> out;
  for (const Polygon& pocket : pockets.pockets) {
    for (auto& tri : detail::ear_clip(pocket, ps)) {
      out.push_back(std::move(tri));
    }
  }
  return out;
}

// The radial construction: fan-sector polygons and caps over ranks 2..n,
// plus a triangulation of the pockets. Cell count is n + k - c whenever no
// claim failed at runtime.
inline Decomposition baseline_decompose(const PointSet& ps) {
  const RadialStructure rs = build_radial_structure(ps);
  Decomposition d;
  d.source = "baseline";
  d.acct.n = rs.n;
  d.acct.k = rs.k;
  const Polygon hull = convex_hull(ps);
  d.acct.c = hull.size();

  int a_cells = 0;
  detail::range_fan_cells(rs, ps, 2, rs.n, d, &a_cells);
  if (a_cells != rs.k) {
    d.add_discrepancy("block-count-mismatch",
                      "emitted " + std::to_string(a_cells) +
                          " fan-sector polygons for k=" + std::to_string(rs.k));
  }

  const PocketSet pockets = compute_pockets(rs, ps);
  if (static_cast<int>(pockets.pockets.size()) > d.acct.c - 2) {
    d.add_discrepancy("pocket-count",
                      std::to_string(pockets.pockets.size()) + " pockets for c=" +
                          std::to_string(d.acct.c));
  }
  int positives = 0;
  for (int r = 3; r <= rs.n - 1; ++r) {
    if (rs.is_plus(r)) ++positives;
  }
  for (auto& tri : triangulate_pockets(pockets, ps)) {
    detail::commit_cell(d, std::move(tri), true, ps, "pocket-triangle");
    ++d.acct.t_u;
  }
  if (d.acct.t_u != positives - (d.acct.c - 3)) {
    d.add_discrepancy("pocket-triangle-count",
                      std::to_string(d.acct.t_u) + " vs expected " +
                          std::to_string(positives - (d.acct.c - 3)));
  }

  std::int64_t cell_area = 0;
  for (const Polygon& cell : d.cells) cell_area += area2(cell, ps);
  if (cell_area != area2(hull, ps)) {
    d.add_discrepancy("area-mismatch", "cells do not tile the hull exactly");
  }
  const long long expected = static_cast<long long>(rs.n) + rs.k - d.acct.c;
  if (d.acct.fallbacks == 0 &&
      static_cast<long long>(d.cells.size()) != expected) {
    d.add_discrepancy("cardinality",
                      std::to_string(d.cells.size()) + " cells, expected n+k-c=" +
                          std::to_string(expected));
  }
  return d;
}

}  // namespace convexdecomp
