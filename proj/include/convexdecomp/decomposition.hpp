#pragma once

#include <array>
#include <cassert>
#include <string>
#include <vector>

#include "convexdecomp/geometry.hpp"
#include "convexdecomp/radial.hpp"

namespace convexdecomp {

// A construction claim that failed its runtime check. Discrepancies are
// first-class output: the point of the runtime checks is to audit the
// construction on every input, not to assume it.
struct Discrepancy {
  std::string kind;
  std::string detail;
};

struct Accounting {
  int n = 0;
  int c = 0;
  int k = 0;
  int t_b = 0;           // fan triangles over negative runs
  int t_u = 0;           // pocket triangles
  int case_b = 0;        // blocks handled as case (b), each commits a quad
  int tail_cells = 0;    // cells covering the partial block at the end
  int merges_attempted = 0;
  int merges_applied = 0;
  int fallbacks = 0;     // cells that failed a check and were re-split
  std::string branch;    // strategy taken by the top-level decomposer
  long long skeleton_cells = -1;     // |Gamma| of the extracted subset
  int interior_inserts = 0;
  int exterior_inserts = 0;
  int exterior_added_cells = 0;
  long long pre_minimalize_cells = -1;
};

struct Decomposition {
  std::vector<Polygon> cells;
  std::string source;  // baseline | pm | main | oracle | file tag
  Accounting acct;
  std::vector<Discrepancy> discrepancies;

  void add_discrepancy(std::string kind, std::string detail) {
    discrepancies.push_back({std::move(kind), std::move(detail)});
  }
};

// Sort cells so equal decompositions serialize identically.
inline void canonicalize_cells(std::vector<Polygon>& cells) {
  std::sort(cells.begin(), cells.end(),
            [](const Polygon& a, const Polygon& b) { return a.v < b.v; });
}

namespace detail {

// Triangulate a simple polygon over its own vertices. Among the valid ears
// of each step the one with the smallest point index is clipped, so the
// result is deterministic.
inline std::vector<Polygon> ear_clip(const Polygon& poly, const PointSet& ps) {
  std::vector<int> ring = poly.v;
  std::vector<Polygon> out;
  while (ring.size() > 3) {
    const int m = static_cast<int>(ring.size());
    int best = -1;
    for (int i = 0; i < m; ++i) {
      const Point& a = ps[ring[(i + m - 1) % m]];
      const Point& b = ps[ring[i]];
      const Point& c = ps[ring[(i + 1) % m]];
      if (orient(a, b, c) <= 0) continue;
      bool blocked = false;
      for (int j = 0; j < m && !blocked; ++j) {
        if (j == i || j == (i + m - 1) % m || j == (i + 1) % m) continue;
        if (in_triangle_interior(ps[ring[j]], a, b, c)) blocked = true;
      }
      if (blocked) continue;
      if (best == -1 || ring[i] < ring[best]) best = i;
    }
    assert(best != -1 && "simple polygon must have an ear");
    if (best == -1) throw Error("ear clipping failed (polygon not simple?)");
    const int m2 = static_cast<int>(ring.size());
    out.push_back(make_ccw({ring[(best + m2 - 1) % m2], ring[best],
                            ring[(best + 1) % m2]},
                           ps));
    ring.erase(ring.begin() + best);
  }
  out.push_back(make_ccw(std::move(ring), ps));
  return out;
}

// Cut a convex cell at an interior point along three of its vertices chosen
// so the point is strictly inside the spanned triangle. Each of the three
// parts is convex; the angles at the cut point each stay below pi.
inline std::array<Polygon, 3> split_at_interior(const Polygon& cell, int p,
                                                const PointSet& ps) {
  const int m = cell.size();
  int j = -1;
  for (int t = 1; t + 1 < m; ++t) {
    if (in_triangle_interior(ps[p], ps[cell[0]], ps[cell[t]],
                             ps[cell[t + 1]])) {
      j = t;
      break;
    }
  }
  if (j == -1) throw Error("split point is not strictly inside the cell");
  std::vector<int> x{p};
  for (int t = 0; t <= j; ++t) x.push_back(cell[t]);
  std::vector<int> y{p, cell[j], cell[j + 1]};
  std::vector<int> z{p};
  for (int t = j + 1; t < m; ++t) z.push_back(cell[t]);
  z.push_back(cell[0]);
  return {Polygon::of(std::move(x)), Polygon::of(std::move(y)),
          Polygon::of(std::move(z))};
}

// Re-split a cell that failed a convexity or emptiness check into valid
// pieces: ear-clip it, then keep splitting any piece that still has a point
// of the set strictly inside. Always terminates with empty convex cells.
inline void repair_cell(const Polygon& cell, const PointSet& ps,
                        std::vector<Polygon>& out) {
  std::vector<Polygon> queue = ear_clip(cell, ps);
  while (!queue.empty()) {
    Polygon piece = std::move(queue.back());
    queue.pop_back();
    int stray = -1;
    for (int i = 0; i < ps.size() && stray == -1; ++i) {
      if (strictly_inside(ps[i], piece, ps)) stray = i;
    }
    if (stray == -1) {
      out.push_back(std::move(piece));
      continue;
    }
    for (auto& part : split_at_interior(piece, stray, ps)) {
      queue.push_back(std::move(part));
    }
  }
}

// Append a cell that the construction claims is convex (if requested) and
// empty. A failed claim is logged and the cell replaced by valid pieces.
inline void commit_cell(Decomposition& d, Polygon cell, bool expect_convex,
                        const PointSet& ps, const char* tag) {
  bool ok = true;
  if (expect_convex && !is_convex(cell, ps)) {
    d.add_discrepancy("nonconvex-cell", std::string(tag));
    ok = false;
  }
  if (ok) {
    for (int i = 0; i < ps.size(); ++i) {
      if (strictly_inside(ps[i], cell, ps)) {
        d.add_discrepancy("nonempty-cell", std::string(tag) + " contains point " +
                                               std::to_string(i));
        ok = false;
        break;
      }
    }
  }
  if (ok) {
    d.cells.push_back(std::move(cell));
    return;
  }
  ++d.acct.fallbacks;
  repair_cell(cell, ps, d.cells);
}

}  // namespace detail

}  // namespace convexdecomp
