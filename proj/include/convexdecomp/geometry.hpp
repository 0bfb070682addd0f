#pragma once

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace convexdecomp {

using Coord = std::int64_t;
using Wide = __int128;

// Coordinates are capped so that every predicate below evaluates exactly:
// orientation determinants of in-range points fit in signed 64-bit, and all
// wider accumulations (areas, rational probes) fit in signed 128-bit.
inline constexpr Coord kCoordLimit = 1'000'000'000;

class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

class GeneralPositionError : public Error {
 public:
  GeneralPositionError(int a, int b, int c)
      : Error("general position violated: points " + std::to_string(a) + ", " +
              std::to_string(b) + ", " + std::to_string(c) + " are collinear"),
        i(a), j(b), k(c) {}
  int i, j, k;
};

class DuplicatePointError : public Error {
 public:
  DuplicatePointError(int a, int b)
      : Error("duplicate point: indices " + std::to_string(a) + " and " +
              std::to_string(b)),
        i(a), j(b) {}
  int i, j;
};

class JoinError : public Error {
 public:
  using Error::Error;
};

struct Point {
  Coord x = 0;
  Coord y = 0;

  friend bool operator==(const Point&, const Point&) = default;
};

// Sign of the cross product (b-a) x (c-a): +1 left turn, -1 right turn,
// 0 collinear. Exact for |coords| <= kCoordLimit.
inline int orient(const Point& a, const Point& b, const Point& c) {
  const std::int64_t lhs = (b.x - a.x) * (c.y - a.y);
  const std::int64_t rhs = (b.y - a.y) * (c.x - a.x);
  if (lhs == rhs) return 0;
  return lhs > rhs ? 1 : -1;
}

// Strict interior of triangle abc (any orientation, not degenerate).
inline bool in_triangle_interior(const Point& p, const Point& a,
                                 const Point& b, const Point& c) {
  const int s = orient(a, b, c);
  assert(s != 0 && "triangle is degenerate");
  return orient(a, b, p) == s && orient(b, c, p) == s && orient(c, a, p) == s;
}

// Indexed universe of points. Immutable once built; every polygon and
// decomposition refers to it by index.
class PointSet {
 public:
  // Validates n >= 3, the coordinate cap, no duplicates, and (for
  // n <= kExhaustiveScan) no collinear triple. Larger sets are checked
  // lazily by the predicates that would be confused by a violation.
  static PointSet from_points(std::vector<Point> pts) {
    PointSet ps(std::move(pts));
    ps.validate();
    return ps;
  }

  // Caller guarantees the invariants (used for generator output and for
  // subsets of an already validated set).
  static PointSet from_points_unchecked(std::vector<Point> pts) {
    return PointSet(std::move(pts));
  }

  int size() const { return static_cast<int>(pts_.size()); }
  const Point& operator[](int i) const { return pts_[static_cast<size_t>(i)]; }
  const std::vector<Point>& points() const { return pts_; }

  static constexpr int kExhaustiveScan = 2000;

 private:
  explicit PointSet(std::vector<Point> pts) : pts_(std::move(pts)) {}

  void validate() const {
    const int n = size();
    if (n < 3) throw Error("point set needs at least 3 points");
    for (int i = 0; i < n; ++i) {
      if (pts_[i].x < -kCoordLimit || pts_[i].x > kCoordLimit ||
          pts_[i].y < -kCoordLimit || pts_[i].y > kCoordLimit) {
        throw Error("coordinate out of range at index " + std::to_string(i));
      }
    }
    {
      std::vector<int> order(pts_.size());
      for (int i = 0; i < n; ++i) order[i] = i;
      std::sort(order.begin(), order.end(), [&](int a, int b) {
        return pts_[a].x != pts_[b].x ? pts_[a].x < pts_[b].x
                                      : pts_[a].y < pts_[b].y;
      });
      for (int i = 0; i + 1 < n; ++i) {
        if (pts_[order[i]] == pts_[order[i + 1]]) {
          throw DuplicatePointError(std::min(order[i], order[i + 1]),
                                    std::max(order[i], order[i + 1]));
        }
      }
    }
    if (n <= kExhaustiveScan) {
      for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
          for (int k = j + 1; k < n; ++k) {
            if (orient(pts_[i], pts_[j], pts_[k]) == 0) {
              throw GeneralPositionError(i, j, k);
            }
          }
        }
      }
    }
  }

  std::vector<Point> pts_;
};

// Vertex cycle into a PointSet, canonically rotated to start at the smallest
// index so equal cells compare equal.
struct Polygon {
  std::vector<int> v;

  static Polygon of(std::vector<int> ids) {
    Polygon p;
    p.v = std::move(ids);
    p.canonicalize();
    return p;
  }

  void canonicalize() {
    if (v.empty()) return;
    auto it = std::min_element(v.begin(), v.end());
    std::rotate(v.begin(), it, v.end());
  }

  int size() const { return static_cast<int>(v.size()); }
  int operator[](int i) const { return v[static_cast<size_t>(i)]; }

  friend bool operator==(const Polygon&, const Polygon&) = default;
};

// Twice the signed area (shoelace). Positive for CCW cycles.
inline std::int64_t area2(const Polygon& poly, const PointSet& ps) {
  Wide acc = 0;
  const int m = poly.size();
  for (int i = 0; i < m; ++i) {
    const Point& a = ps[poly[i]];
    const Point& b = ps[poly[(i + 1) % m]];
    acc += static_cast<Wide>(a.x) * b.y - static_cast<Wide>(b.x) * a.y;
  }
  assert(acc <= static_cast<Wide>(INT64_MAX) &&
         acc >= static_cast<Wide>(INT64_MIN));
  return static_cast<std::int64_t>(acc);
}

inline Polygon make_ccw(std::vector<int> ids, const PointSet& ps) {
  Polygon p = Polygon::of(std::move(ids));
  if (area2(p, ps) < 0) {
    std::reverse(p.v.begin(), p.v.end());
    p.canonicalize();
  }
  return p;
}

// True iff the cycle has >= 3 distinct vertices and turns strictly left at
// every one of them (convex and CCW). Repeated indices fail.
inline bool is_convex(const Polygon& poly, const PointSet& ps) {
  const int m = poly.size();
  if (m < 3) return false;
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) {
      if (poly[i] == poly[j]) return false;
    }
  }
  for (int i = 0; i < m; ++i) {
    const Point& a = ps[poly[i]];
    const Point& b = ps[poly[(i + 1) % m]];
    const Point& c = ps[poly[(i + 2) % m]];
    if (orient(a, b, c) <= 0) return false;
  }
  return true;
}

namespace detail {

inline bool on_segment(const Point& p, const Point& a, const Point& b) {
  if (orient(a, b, p) != 0) return false;
  return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) &&
         std::min(a.y, b.y) <= p.y && p.y <= std::max(a.y, b.y);
}

// Proper crossing: the open segments intersect in a single point.
inline bool segments_properly_cross(const Point& a, const Point& b,
                                    const Point& c, const Point& d) {
  const int o1 = orient(a, b, c);
  const int o2 = orient(a, b, d);
  const int o3 = orient(c, d, a);
  const int o4 = orient(c, d, b);
  return o1 * o2 < 0 && o3 * o4 < 0;
}

}  // namespace detail

// Simplicity test for arbitrary index cycles: distinct vertices, no edge
// properly crossing another, no vertex in the interior of a non-incident
// edge. O(m^2), fine at the scales this library targets.
inline bool is_simple(const Polygon& poly, const PointSet& ps) {
  const int m = poly.size();
  if (m < 3) return false;
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) {
      if (poly[i] == poly[j]) return false;
    }
  }
  for (int i = 0; i < m; ++i) {
    const Point& a = ps[poly[i]];
    const Point& b = ps[poly[(i + 1) % m]];
    for (int j = i + 1; j < m; ++j) {
      const Point& c = ps[poly[j]];
      const Point& d = ps[poly[(j + 1) % m]];
      const bool adjacent = (j == i + 1) || (i == 0 && j == m - 1);
      if (adjacent) continue;
      if (detail::segments_properly_cross(a, b, c, d)) return false;
      if (detail::on_segment(c, a, b) || detail::on_segment(d, a, b) ||
          detail::on_segment(a, c, d) || detail::on_segment(b, c, d)) {
        return false;
      }
    }
  }
  return true;
}

enum class Location { Inside, Boundary, Outside };

// Exact point location for a rational query point (x, y) = (num_x, num_y) /
// den against a simple polygon. den must be positive. Integer points use
// den = 1.
struct ScaledPoint {
  Wide num_x;
  Wide num_y;
  Wide den;  // > 0

  static ScaledPoint at(const Point& p) { return {p.x, p.y, 1}; }
};

namespace detail {

inline int orient_scaled(const Point& a, const Point& b, const ScaledPoint& p) {
  // sign of (b-a) x (p-a) after clearing the denominator
  const Wide lhs = static_cast<Wide>(b.x - a.x) * (p.num_y - p.den * a.y);
  const Wide rhs = static_cast<Wide>(b.y - a.y) * (p.num_x - p.den * a.x);
  if (lhs == rhs) return 0;
  return lhs > rhs ? 1 : -1;
}

}  // namespace detail

inline Location locate_point(const ScaledPoint& p, const Polygon& poly,
                             const PointSet& ps) {
  const int m = poly.size();
  int winding = 0;
  for (int i = 0; i < m; ++i) {
    const Point& a = ps[poly[i]];
    const Point& b = ps[poly[(i + 1) % m]];
    const int side = detail::orient_scaled(a, b, p);
    const bool a_below = static_cast<Wide>(a.y) * p.den <= p.num_y;
    const bool b_below = static_cast<Wide>(b.y) * p.den <= p.num_y;
    if (side == 0) {
      // On the supporting line; on the segment iff within its bounding box.
      const Wide px = p.num_x;
      const Wide lo = static_cast<Wide>(std::min(a.x, b.x)) * p.den;
      const Wide hi = static_cast<Wide>(std::max(a.x, b.x)) * p.den;
      const Wide ylo = static_cast<Wide>(std::min(a.y, b.y)) * p.den;
      const Wide yhi = static_cast<Wide>(std::max(a.y, b.y)) * p.den;
      if (lo <= px && px <= hi && ylo <= p.num_y && p.num_y <= yhi) {
        return Location::Boundary;
      }
    }
    if (a_below && !b_below) {
      if (side > 0) ++winding;
    } else if (!a_below && b_below) {
      if (side < 0) --winding;
    }
  }
  return winding != 0 ? Location::Inside : Location::Outside;
}

inline Location locate_point(const Point& p, const Polygon& poly,
                             const PointSet& ps) {
  return locate_point(ScaledPoint::at(p), poly, ps);
}

inline bool strictly_inside(const Point& p, const Polygon& poly,
                            const PointSet& ps) {
  return locate_point(p, poly, ps) == Location::Inside;
}

// CCW convex hull (monotone chain, strict turns). Throws if a collinear
// triple shows up among hull candidates.
inline Polygon convex_hull_of(std::vector<int> ids, const PointSet& ps) {
  const int n = static_cast<int>(ids.size());
  if (n < 3) throw Error("hull needs at least 3 points");
  std::sort(ids.begin(), ids.end(), [&](int a, int b) {
    return ps[a].x != ps[b].x ? ps[a].x < ps[b].x : ps[a].y < ps[b].y;
  });
  std::vector<int> hull;
  hull.reserve(2 * ids.size());
  auto build = [&](auto begin, auto end) {
    const size_t base = hull.size();
    for (auto it = begin; it != end; ++it) {
      while (hull.size() >= base + 2) {
        const int o = orient(ps[hull[hull.size() - 2]],
                             ps[hull[hull.size() - 1]], ps[*it]);
        if (o == 0) {
          throw GeneralPositionError(hull[hull.size() - 2],
                                     hull[hull.size() - 1], *it);
        }
        if (o > 0) break;
        hull.pop_back();
      }
      hull.push_back(*it);
    }
    hull.pop_back();
  };
  build(ids.begin(), ids.end());
  build(ids.rbegin(), ids.rend());
  return Polygon::of(std::move(hull));
}

inline Polygon convex_hull(const PointSet& ps) {
  std::vector<int> ids(static_cast<size_t>(ps.size()));
  for (int i = 0; i < ps.size(); ++i) ids[i] = i;
  return convex_hull_of(std::move(ids), ps);
}

// Union of two polygons sharing exactly one edge, with that edge removed
// from the boundary. Both inputs and the output are CCW index cycles; the
// output need not be convex.
inline Polygon edge_join(const Polygon& a, const Polygon& b) {
  const int ma = a.size();
  const int mb = b.size();
  int pos_a = -1;
  int pos_b = -1;
  int shared = 0;
  for (int i = 0; i < ma; ++i) {
    const int u = a[i];
    const int v = a[(i + 1) % ma];
    for (int j = 0; j < mb; ++j) {
      if (b[j] == v && b[(j + 1) % mb] == u) {
        ++shared;
        pos_a = i;
        pos_b = j;
      } else if (b[j] == u && b[(j + 1) % mb] == v) {
        throw JoinError("polygons share an identically oriented edge "
                        "(overlapping interiors)");
      }
    }
  }
  if (shared == 0) throw JoinError("no shared edge");
  if (shared > 1) throw JoinError("more than one shared edge");
  // a: ... u v ...   b: ... v u x ... ; splice b's chain after u into a.
  std::vector<int> out;
  out.reserve(static_cast<size_t>(ma + mb - 2));
  for (int i = 0; i < ma; ++i) out.push_back(a[(pos_a + 1 + i) % ma]);
  // out currently starts at v and ends at u; append b's vertices strictly
  // between u and v going CCW.
  for (int j = 2; j < mb; ++j) out.push_back(b[(pos_b + j) % mb]);
  return Polygon::of(std::move(out));
}

}  // namespace convexdecomp
