#pragma once

#include <array>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "convexdecomp/decomposition.hpp"
#include "convexdecomp/geometry.hpp"
#include "convexdecomp/radial.hpp"

namespace convexdecomp {

struct CheckResult {
  bool pass = true;
  std::vector<std::string> witnesses;

  void fail(std::string witness) {
    pass = false;
    witnesses.push_back(std::move(witness));
  }
};

struct CountsRecord {
  long long cells = 0;
  int n = 0;
  int c = 0;
  int k = 0;
  long long target_main = 0;      // floor(10n/7) - c
  long long target_baseline = 0;  // n + k - c
  long long target_prior = 0;     // floor(3n/2) - c
  long long slack_main = 0;
  long long slack_baseline = 0;
  long long slack_prior = 0;
};

struct VerificationReport {
  CheckResult wellformed;
  CheckResult c1_empty;
  CheckResult c2_disjoint;
  CheckResult c3_cover;
  CheckResult minimal;
  CountsRecord counts;
  std::vector<Discrepancy> discrepancies;

  bool valid() const {
    return wellformed.pass && c1_empty.pass && c2_disjoint.pass &&
           c3_cover.pass;
  }
  bool all_pass() const { return valid() && minimal.pass; }
};

namespace detail {

inline std::string cell_str(const Polygon& cell) {
  std::string s = "[";
  for (size_t i = 0; i < cell.v.size(); ++i) {
    if (i) s += ' ';
    s += std::to_string(cell.v[i]);
  }
  return s + "]";
}

}  // namespace detail

// Structural sanity of each cell: indices in range, >= 3 distinct vertices,
// simple boundary, CCW orientation.
inline CheckResult check_wellformed(const Decomposition& d,
                                    const PointSet& ps) {
  CheckResult r;
  for (size_t ci = 0; ci < d.cells.size(); ++ci) {
    const Polygon& cell = d.cells[ci];
    if (cell.size() < 3) {
      r.fail("cell " + std::to_string(ci) + " has fewer than 3 vertices");
      continue;
    }
    bool range_ok = true;
    for (int id : cell.v) {
      if (id < 0 || id >= ps.size()) {
        r.fail("cell " + std::to_string(ci) + " references point " +
               std::to_string(id));
        range_ok = false;
        break;
      }
    }
    if (!range_ok) continue;
    if (!is_simple(cell, ps)) {
      r.fail("cell " + std::to_string(ci) + " is not a simple polygon");
      continue;
    }
    if (area2(cell, ps) <= 0) {
      r.fail("cell " + std::to_string(ci) + " is not counterclockwise");
    }
  }
  return r;
}

// C1: no point of the set strictly inside any cell.
inline CheckResult check_emptiness(const Decomposition& d,
                                   const PointSet& ps) {
  CheckResult r;
  for (size_t ci = 0; ci < d.cells.size(); ++ci) {
    for (int p = 0; p < ps.size(); ++p) {
      if (strictly_inside(ps[p], d.cells[ci], ps)) {
        r.fail("point " + std::to_string(p) + " inside cell " +
               detail::cell_str(d.cells[ci]));
      }
    }
  }
  return r;
}

struct DisjointCover {
  CheckResult c2;
  CheckResult c3;
};

// C2 by exact pairwise boundary tests plus representative-point probes; C3
// by the exact area identity plus per-cell hull containment. Cells live on
// points of the set, so under general position an overlap always shows up
// as a proper edge crossing, an identically oriented shared edge, a vertex
// strictly inside the other cell, or a swallowed centroid.
inline DisjointCover check_disjoint_and_cover(const Decomposition& d,
                                              const PointSet& ps) {
  DisjointCover out;
  const Polygon hull = convex_hull(ps);
  const std::int64_t hull_area = area2(hull, ps);

  std::int64_t total = 0;
  for (const Polygon& cell : d.cells) total += area2(cell, ps);
  if (total != hull_area) {
    out.c3.fail("cell areas sum to " + std::to_string(total) +
                ", hull area is " + std::to_string(hull_area));
  }
  for (size_t ci = 0; ci < d.cells.size(); ++ci) {
    for (int id : d.cells[ci].v) {
      if (locate_point(ps[id], hull, ps) == Location::Outside) {
        out.c3.fail("cell " + std::to_string(ci) + " leaves the hull");
        break;
      }
    }
  }

  // Duplicate directed edges: two cells whose interiors sit on the same side
  // of a shared edge.
  std::map<std::pair<int, int>, int> directed;
  for (size_t ci = 0; ci < d.cells.size(); ++ci) {
    const Polygon& cell = d.cells[ci];
    const int m = cell.size();
    for (int e = 0; e < m; ++e) {
      auto key = std::make_pair(cell[e], cell[(e + 1) % m]);
      auto [it, fresh] = directed.emplace(key, static_cast<int>(ci));
      if (!fresh) {
        out.c2.fail("cells " + std::to_string(it->second) + " and " +
                    std::to_string(ci) + " share directed edge " +
                    std::to_string(key.first) + "->" +
                    std::to_string(key.second));
      }
    }
  }

  auto bbox = [&](const Polygon& cell) {
    Coord xlo = kCoordLimit + 1, xhi = -xlo, ylo = xlo, yhi = xhi;
    for (int id : cell.v) {
      xlo = std::min(xlo, ps[id].x);
      xhi = std::max(xhi, ps[id].x);
      ylo = std::min(ylo, ps[id].y);
      yhi = std::max(yhi, ps[id].y);
    }
    return std::array<Coord, 4>{xlo, xhi, ylo, yhi};
  };
  std::vector<std::array<Coord, 4>> boxes;
  boxes.reserve(d.cells.size());
  for (const Polygon& cell : d.cells) boxes.push_back(bbox(cell));

  auto centroid = [&](const Polygon& cell) {
    Wide sx = 0, sy = 0;
    for (int id : cell.v) {
      sx += ps[id].x;
      sy += ps[id].y;
    }
    return ScaledPoint{sx, sy, static_cast<Wide>(cell.size())};
  };

  for (size_t a = 0; a < d.cells.size(); ++a) {
    for (size_t b = a + 1; b < d.cells.size(); ++b) {
      if (boxes[a][1] < boxes[b][0] || boxes[b][1] < boxes[a][0] ||
          boxes[a][3] < boxes[b][2] || boxes[b][3] < boxes[a][2]) {
        continue;
      }
      const Polygon& pa = d.cells[a];
      const Polygon& pb = d.cells[b];
      bool overlap = false;
      for (int i = 0; i < pa.size() && !overlap; ++i) {
        const Point& u = ps[pa[i]];
        const Point& v = ps[pa[(i + 1) % pa.size()]];
        for (int j = 0; j < pb.size() && !overlap; ++j) {
          if (detail::segments_properly_cross(u, v, ps[pb[j]],
                                              ps[pb[(j + 1) % pb.size()]])) {
            overlap = true;
          }
        }
      }
      for (int i = 0; i < pa.size() && !overlap; ++i) {
        if (strictly_inside(ps[pa[i]], pb, ps)) overlap = true;
      }
      for (int j = 0; j < pb.size() && !overlap; ++j) {
        if (strictly_inside(ps[pb[j]], pa, ps)) overlap = true;
      }
      if (!overlap) {
        if (locate_point(centroid(pa), pb, ps) == Location::Inside ||
            locate_point(centroid(pb), pa, ps) == Location::Inside) {
          overlap = true;
        }
      }
      if (overlap) {
        out.c2.fail("cells " + std::to_string(a) + " and " +
                    std::to_string(b) + " overlap: " + detail::cell_str(pa) +
                    " vs " + detail::cell_str(pb));
      }
    }
  }
  return out;
}

// Definition check: the union of two cells can only be convex if they share
// an edge (a union joined at a point or disconnected is not a convex
// polygon), so only edge-adjacent pairs are examined.
inline CheckResult check_minimality(const Decomposition& d,
                                    const PointSet& ps) {
  CheckResult r;
  std::map<std::pair<int, int>, int> owner;
  for (size_t ci = 0; ci < d.cells.size(); ++ci) {
    const Polygon& cell = d.cells[ci];
    const int m = cell.size();
    for (int e = 0; e < m; ++e) {
      owner[{cell[e], cell[(e + 1) % m]}] = static_cast<int>(ci);
    }
  }
  for (size_t ci = 0; ci < d.cells.size(); ++ci) {
    const Polygon& cell = d.cells[ci];
    const int m = cell.size();
    for (int e = 0; e < m; ++e) {
      auto it = owner.find({cell[(e + 1) % m], cell[e]});
      if (it == owner.end() || it->second <= static_cast<int>(ci)) continue;
      Polygon joined;
      try {
        joined = edge_join(d.cells[ci],
                           d.cells[static_cast<size_t>(it->second)]);
      } catch (const JoinError&) {
        continue;
      }
      if (is_convex(joined, ps)) {
        r.fail("cells " + std::to_string(ci) + " and " +
               std::to_string(it->second) + " merge into a convex polygon");
      }
    }
  }
  return r;
}

inline CountsRecord check_bounds(const Decomposition& d,
                                 const RadialStructure& rs, int c) {
  CountsRecord rec;
  rec.cells = static_cast<long long>(d.cells.size());
  rec.n = rs.n;
  rec.c = c;
  rec.k = rs.k;
  rec.target_main = (10LL * rs.n) / 7 - c;
  rec.target_baseline = static_cast<long long>(rs.n) + rs.k - c;
  rec.target_prior = (3LL * rs.n) / 2 - c;
  rec.slack_main = rec.cells - rec.target_main;
  rec.slack_baseline = rec.cells - rec.target_baseline;
  rec.slack_prior = rec.cells - rec.target_prior;
  return rec;
}

inline VerificationReport verify_decomposition(const Decomposition& d,
                                               const PointSet& ps) {
  VerificationReport rep;
  rep.discrepancies = d.discrepancies;
  rep.wellformed = check_wellformed(d, ps);
  if (!rep.wellformed.pass) {
    const std::string skip = "skipped: decomposition is not well formed";
    rep.c1_empty.fail(skip);
    rep.c2_disjoint.fail(skip);
    rep.c3_cover.fail(skip);
    rep.minimal.fail(skip);
    return rep;
  }
  rep.c1_empty = check_emptiness(d, ps);
  DisjointCover dc = check_disjoint_and_cover(d, ps);
  rep.c2_disjoint = std::move(dc.c2);
  rep.c3_cover = std::move(dc.c3);
  if (rep.valid()) {
    rep.minimal = check_minimality(d, ps);
  } else {
    rep.minimal.fail("skipped: C1-C3 did not pass");
  }
  const RadialStructure rs = build_radial_structure(ps);
  rep.counts = check_bounds(d, rs, convex_hull(ps).size());
  return rep;
}

inline std::string report_lines(const VerificationReport& rep) {
  std::ostringstream os;
  auto line = [&](const char* name, const CheckResult& r) {
    os << "CHECK " << name << ' ' << (r.pass ? "PASS" : "FAIL");
    for (const auto& w : r.witnesses) os << ' ' << w << ';';
    os << '\n';
  };
  line("wellformed", rep.wellformed);
  line("c1_empty", rep.c1_empty);
  line("c2_disjoint", rep.c2_disjoint);
  line("c3_cover", rep.c3_cover);
  line("minimal", rep.minimal);
  os << "COUNTS cells=" << rep.counts.cells << " n=" << rep.counts.n
     << " c=" << rep.counts.c << " k=" << rep.counts.k
     << " bound_main=" << rep.counts.target_main
     << " slack_main=" << rep.counts.slack_main
     << " bound_baseline=" << rep.counts.target_baseline
     << " bound_prior=" << rep.counts.target_prior << '\n';
  for (const auto& disc : rep.discrepancies) {
    os << "DISCREPANCY " << disc.kind << ' ' << disc.detail << '\n';
  }
  return os.str();
}

}  // namespace convexdecomp
