#pragma once

// Test-only oracles, deliberately independent of the library code paths they
// cross-check.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "convexdecomp/convexdecomp.hpp"

namespace testutil {

using namespace convexdecomp;

// The worked five-point configuration used across the suite:
// anchor (0,0); radial order (4,0), (2,1), (5,3), (0,4).
inline PointSet five_points() {
  return PointSet::from_points(
      {{0, 0}, {4, 0}, {5, 3}, {2, 1}, {0, 4}});
}

// Brute-force hull: (i, j) is a hull edge iff every other point lies
// strictly left of i->j. Returns the CCW cycle.
inline std::vector<int> brute_hull(const PointSet& ps) {
  const int n = ps.size();
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      bool edge = true;
      for (int k = 0; k < n && edge; ++k) {
        if (k == i || k == j) continue;
        if (orient(ps[i], ps[j], ps[k]) <= 0) edge = false;
      }
      if (edge) edges.emplace_back(i, j);
    }
  }
  std::vector<int> next(static_cast<size_t>(n), -1);
  for (auto [a, b] : edges) next[static_cast<size_t>(a)] = b;
  std::vector<int> cycle;
  int start = edges.front().first;
  int cur = start;
  do {
    cycle.push_back(cur);
    cur = next[static_cast<size_t>(cur)];
  } while (cur != start);
  return cycle;
}

// Slope-sort oracle: quadrant split first (rightward baseline, first
// quadrant, straight up, second quadrant), then slope comparison by
// cross-multiplication. Independent formulation of the orientation-based
// angular sort; all angles lie in [0, pi) because the anchor is lowest.
inline std::vector<int> slope_sort_order(const PointSet& ps, int anchor) {
  std::vector<int> rest;
  for (int i = 0; i < ps.size(); ++i) {
    if (i != anchor) rest.push_back(i);
  }
  const Point& a = ps[anchor];
  auto quadrant = [&](int id) {
    const std::int64_t dx = ps[id].x - a.x;
    const std::int64_t dy = ps[id].y - a.y;
    if (dy == 0) return 0;  // dx > 0 here: lowest-then-leftmost anchor
    if (dx > 0) return 1;
    if (dx == 0) return 2;
    return 3;
  };
  std::sort(rest.begin(), rest.end(), [&](int u, int v) {
    const int qu = quadrant(u);
    const int qv = quadrant(v);
    if (qu != qv) return qu < qv;
    const std::int64_t dxu = ps[u].x - a.x, dyu = ps[u].y - a.y;
    const std::int64_t dxv = ps[v].x - a.x, dyv = ps[v].y - a.y;
    // within one open quadrant the angle grows with the slope dy/dx, and
    // dx_u * dx_v > 0 makes the cross-multiplied comparison safe
    return dyu * dxv < dyv * dxu;
  });
  return rest;
}

// Triangle fan area: independent route for the shoelace value of convex
// CCW polygons.
inline std::int64_t fan_area2(const Polygon& poly, const PointSet& ps) {
  std::int64_t total = 0;
  for (int i = 1; i + 1 < poly.size(); ++i) {
    const Point& a = ps[poly[0]];
    const Point& b = ps[poly[i]];
    const Point& c = ps[poly[i + 1]];
    total += (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
  }
  return total;
}

inline std::mt19937_64 rng(std::uint64_t seed) { return std::mt19937_64(seed); }

// Random small general-position set for property tests.
inline PointSet random_set(std::uint64_t seed, int n, Coord range = 1000) {
  return gen_random(n, seed, range);
}

}  // namespace testutil
