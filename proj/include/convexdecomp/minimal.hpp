#pragma once

#include <algorithm>
#include <array>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "convexdecomp/baseline.hpp"
#include "convexdecomp/decomposition.hpp"
#include "convexdecomp/geometry.hpp"
#include "convexdecomp/pm.hpp"
#include "convexdecomp/radial.hpp"

namespace convexdecomp {

enum class Branch { BaselineSmallK, PmExact, Hybrid };

struct StrategyChoice {
  Branch branch;
  int n = 0;
  int k = 0;

  const char* name() const {
    switch (branch) {
      case Branch::BaselineSmallK: return "baseline";
      case Branch::PmExact: return "pm";
      case Branch::Hybrid: return "hybrid";
    }
    return "?";
  }
};

// Integer comparisons only: the radial construction when 7k <= 3n, the block
// construction when the set alternates exactly (2k = n), the skeleton route
// otherwise.
inline StrategyChoice choose_strategy(const RadialStructure& rs) {
  StrategyChoice c{Branch::Hybrid, rs.n, rs.k};
  if (7LL * rs.k <= 3LL * rs.n) {
    c.branch = Branch::BaselineSmallK;
  } else if (2LL * rs.k == rs.n) {
    c.branch = Branch::PmExact;
  }
  return c;
}

class SkeletonError : public Error {
 public:
  using Error::Error;
};

// One representative per block plus the three frame points. Removing the
// rest of the set leaves an alternating subset when the construction's
// claim holds (checked by the caller, never assumed).
struct PmSkeleton {
  std::vector<int> members;     // point indices, includes p1, p2, pn
  std::vector<int> q_selected;  // one per A block
  std::vector<int> r_selected;  // one per B block
  std::vector<int> s_interior;  // rest of the set, inside Conv(members)
  std::vector<int> s_exterior;  // rest of the set, outside Conv(members)
};

inline PmSkeleton extract_pm_subset(const RadialStructure& rs,
                                    const PointSet& ps) {
  PmSkeleton sk;
  const Polygon hull = convex_hull(ps);
  std::vector<bool> on_hull(static_cast<size_t>(ps.size()), false);
  for (int id : hull.v) on_hull[static_cast<size_t>(id)] = true;

  for (const Run& a : rs.blocks_a) {
    if (a.empty()) {
      throw SkeletonError("empty positive block; no representative to pick");
    }
    int best = -1;
    bool block_has_hull_point = false;
    for (int r = a.lo; r <= a.hi; ++r) {
      if (on_hull[static_cast<size_t>(rs.point_at(r))]) {
        block_has_hull_point = true;
      }
    }
    if (block_has_hull_point) {
      // Highest rank among the hull members keeps the skeleton's hull arc.
      for (int r = a.hi; r >= a.lo; --r) {
        if (on_hull[static_cast<size_t>(rs.point_at(r))]) {
          best = rs.point_at(r);
          break;
        }
      }
    } else {
      for (int r = a.lo; r <= a.hi; ++r) {
        const int id = rs.point_at(r);
        if (best == -1 || ps[id].y > ps[best].y ||
            (ps[id].y == ps[best].y && ps[id].x > ps[best].x)) {
          best = id;
        }
      }
    }
    sk.q_selected.push_back(best);
  }
  for (const Run& b : rs.blocks_b) {
    int best = -1;
    for (int r = b.lo; r <= b.hi; ++r) {
      const int id = rs.point_at(r);
      if (best == -1 || ps[id].y < ps[best].y ||
          (ps[id].y == ps[best].y && ps[id].x > ps[best].x)) {
        best = id;
      }
    }
    sk.r_selected.push_back(best);
  }

  std::vector<bool> chosen(static_cast<size_t>(ps.size()), false);
  chosen[static_cast<size_t>(rs.anchor)] = true;
  chosen[static_cast<size_t>(rs.point_at(2))] = true;
  chosen[static_cast<size_t>(rs.point_at(rs.n))] = true;
  for (int id : sk.q_selected) chosen[static_cast<size_t>(id)] = true;
  for (int id : sk.r_selected) chosen[static_cast<size_t>(id)] = true;
  for (int r = 1; r <= rs.n; ++r) {
    const int id = rs.point_at(r);
    if (chosen[static_cast<size_t>(id)]) sk.members.push_back(id);
  }

  Polygon skel_hull = convex_hull_of(sk.members, ps);
  for (int i = 0; i < ps.size(); ++i) {
    if (chosen[static_cast<size_t>(i)]) continue;
    if (strictly_inside(ps[i], skel_hull, ps)) {
      sk.s_interior.push_back(i);
    } else {
      sk.s_exterior.push_back(i);
    }
  }
  return sk;
}

// Cut a convex cell at a point strictly inside it into three convex cells.
// Any two of the three unite to a polygon reflex at the cut point, so the
// split never undoes itself under minimalization.
inline std::array<Polygon, 3> split_cell_at_interior_point(
    const Polygon& cell, int p, const PointSet& ps) {
  if (!strictly_inside(ps[p], cell, ps)) {
    throw Error("point " + std::to_string(p) +
                " is not strictly inside the cell");
  }
  return detail::split_at_interior(cell, p, ps);
}

// Add a point outside the current cells: fan it over the hull edges it sees
// and greedily merge consecutive fan triangles while the union stays convex.
// Returns the number of cells added.
inline int insert_exterior_point(Decomposition& d, int p,
                                 const std::vector<int>& current_points,
                                 const PointSet& ps) {
  const Polygon hull = convex_hull_of(current_points, ps);
  const int mh = hull.size();
  std::vector<int> visible;  // positions of visible hull edges
  for (int e = 0; e < mh; ++e) {
    if (orient(ps[hull[e]], ps[hull[(e + 1) % mh]], ps[p]) < 0) {
      visible.push_back(e);
    }
  }
  if (visible.empty()) {
    throw Error("point " + std::to_string(p) +
                " is not outside the current hull");
  }
  // The visible edges form one contiguous arc; rotate so it starts after an
  // invisible edge.
  int start = 0;
  if (static_cast<int>(visible.size()) < mh) {
    std::vector<bool> vis(static_cast<size_t>(mh), false);
    for (int e : visible) vis[static_cast<size_t>(e)] = true;
    while (!(vis[static_cast<size_t>(start)] &&
             !vis[static_cast<size_t>((start + mh - 1) % mh)])) {
      ++start;
    }
  }
  std::vector<Polygon> fans;
  for (size_t t = 0; t < visible.size(); ++t) {
    const int e = (start + static_cast<int>(t)) % mh;
    fans.push_back(
        Polygon::of({p, hull[(e + 1) % mh], hull[e]}));
  }
  int added = 0;
  Polygon current = fans[0];
  for (size_t t = 1; t < fans.size(); ++t) {
    bool merged = false;
    try {
      Polygon j = edge_join(current, fans[t]);
      if (is_convex(j, ps)) {
        current = std::move(j);
        merged = true;
      }
    } catch (const JoinError&) {
    }
    if (!merged) {
      d.cells.push_back(std::move(current));
      ++added;
      current = fans[t];
    }
  }
  d.cells.push_back(std::move(current));
  ++added;
  return added;
}

// Greedy post-pass: merge the lowest-indexed adjacent cell pair whose union
// is convex, until none exists. The fixed point is a minimal convex
// decomposition; the scan order is deterministic.
inline Decomposition minimalize(Decomposition d, const PointSet& ps) {
  bool changed = true;
  while (changed) {
    changed = false;
    std::map<std::pair<int, int>, int> owner;  // directed edge -> cell
    for (size_t ci = 0; ci < d.cells.size(); ++ci) {
      const Polygon& cell = d.cells[ci];
      const int m = cell.size();
      for (int e = 0; e < m; ++e) {
        owner[{cell[e], cell[(e + 1) % m]}] = static_cast<int>(ci);
      }
    }
    std::vector<std::pair<int, int>> pairs;
    for (size_t ci = 0; ci < d.cells.size(); ++ci) {
      const Polygon& cell = d.cells[ci];
      const int m = cell.size();
      for (int e = 0; e < m; ++e) {
        auto it = owner.find({cell[(e + 1) % m], cell[e]});
        if (it != owner.end() && it->second > static_cast<int>(ci)) {
          pairs.emplace_back(static_cast<int>(ci), it->second);
        }
      }
    }
    std::sort(pairs.begin(), pairs.end());
    pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
    for (const auto& [a, b] : pairs) {
      Polygon joined;
      try {
        joined = edge_join(d.cells[static_cast<size_t>(a)],
                           d.cells[static_cast<size_t>(b)]);
      } catch (const JoinError&) {
        continue;
      }
      if (!is_convex(joined, ps)) continue;
      d.cells[static_cast<size_t>(a)] = std::move(joined);
      d.cells.erase(d.cells.begin() + b);
      changed = true;
      break;
    }
  }
  return d;
}

namespace detail {

// Remap a decomposition built on a subset back onto the parent set.
inline void remap_cells(Decomposition& d, const std::vector<int>& to_parent) {
  for (Polygon& cell : d.cells) {
    for (int& id : cell.v) id = to_parent[static_cast<size_t>(id)];
    cell.canonicalize();
  }
}

}  // namespace detail

// Full pipeline: dispatch on the block count, reinsert skipped points in the
// skeleton branch, then minimalize. The output always satisfies the
// verifier's four checks; the bound accounting is recorded, not assumed.
inline Decomposition decompose(const PointSet& ps) {
  const RadialStructure rs = build_radial_structure(ps);
  const StrategyChoice choice = choose_strategy(rs);
  Decomposition d;
  switch (choice.branch) {
    case Branch::BaselineSmallK: {
      d = baseline_decompose(ps);
      d.acct.branch = "baseline";
      break;
    }
    case Branch::PmExact: {
      d = pm_decompose(ps);
      d.acct.branch = "pm";
      break;
    }
    case Branch::Hybrid: {
      bool fell_back = false;
      PmSkeleton sk;
      try {
        sk = extract_pm_subset(rs, ps);
      } catch (const SkeletonError& e) {
        d = baseline_decompose(ps);
        d.acct.branch = "hybrid-fallback";
        d.add_discrepancy("skeleton", e.what());
        fell_back = true;
      }
      if (!fell_back) {
        std::vector<Point> sub_points;
        sub_points.reserve(sk.members.size());
        for (int id : sk.members) sub_points.push_back(ps[id]);
        const PointSet sub =
            PointSet::from_points_unchecked(std::move(sub_points));
        const RadialStructure sub_rs = build_radial_structure(sub);
        if (!is_pm_set(sub_rs) ||
            static_cast<int>(sk.members.size()) != 2 * rs.k + 2) {
          d = baseline_decompose(ps);
          d.acct.branch = "hybrid-fallback";
          d.add_discrepancy(
              "skeleton-not-pm",
              "extracted subset of " + std::to_string(sk.members.size()) +
                  " points is not an alternating set");
        } else {
          d = pm_decompose(sub);
          detail::remap_cells(d, sk.members);
          d.acct.branch = "hybrid";
          d.acct.skeleton_cells = static_cast<long long>(d.cells.size());
          d.acct.n = rs.n;
          d.acct.k = rs.k;
          d.acct.c = convex_hull(ps).size();

          std::vector<int> working = sk.members;
          std::vector<int> rest;
          for (int i = 0; i < ps.size(); ++i) {
            if (std::find(sk.members.begin(), sk.members.end(), i) ==
                sk.members.end()) {
              rest.push_back(i);
            }
          }
          for (int p : rest) {
            int host = -1;
            for (size_t ci = 0; ci < d.cells.size(); ++ci) {
              if (strictly_inside(ps[p], d.cells[ci], ps)) {
                host = static_cast<int>(ci);
                break;
              }
            }
            if (host >= 0) {
              auto parts = detail::split_at_interior(
                  d.cells[static_cast<size_t>(host)], p, ps);
              d.cells.erase(d.cells.begin() + host);
              for (auto& part : parts) d.cells.push_back(std::move(part));
              ++d.acct.interior_inserts;
            } else {
              d.acct.exterior_added_cells +=
                  insert_exterior_point(d, p, working, ps);
              ++d.acct.exterior_inserts;
            }
            working.push_back(p);
          }
        }
      }
      break;
    }
  }
  d.acct.pre_minimalize_cells = static_cast<long long>(d.cells.size());
  d = minimalize(std::move(d), ps);
  d.source = "main";
  return d;
}

}  // namespace convexdecomp
