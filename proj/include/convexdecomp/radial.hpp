#pragma once

#include <algorithm>
#include <cassert>
#include <string>
#include <vector>

#include "convexdecomp/geometry.hpp"

namespace convexdecomp {

enum class Sign : unsigned char { Plus, Minus };

// Second-order label relative to the two nearest same-sign neighbours:
// the trailing symbol is Minus iff the point lies strictly inside the
// triangle spanned by the anchor and those neighbours.
enum class Refined : unsigned char { PP, PM, MP, MM };

inline char sign_char(Sign s) { return s == Sign::Plus ? '+' : '-'; }

// Inclusive rank interval. lo > hi encodes an empty block positioned so that
// the flanking ranks are still lo-1 and hi+1.
struct Run {
  int lo = 0;
  int hi = -1;

  bool empty() const { return lo > hi; }
  int size() const { return empty() ? 0 : hi - lo + 1; }
  friend bool operator==(const Run&, const Run&) = default;
};

// Anchor, angular ranks, sign labels and the block partition of a point set.
// Ranks are 1-based (p1 = anchor, p2 the smallest angle); file formats stay
// 0-based point indices.
struct RadialStructure {
  int n = 0;
  int anchor = -1;                // point index of p1
  std::vector<int> by_rank;       // size n+1, by_rank[r] = point index, r>=1
  std::vector<int> rank_of;       // size n, inverse of by_rank
  std::vector<Sign> sign;         // size n+1, valid for ranks 3..n-1
  std::vector<Refined> refined;   // size n+1, valid where sign is valid
  std::vector<Run> blocks_a;      // k runs, first/last possibly empty
  std::vector<Run> blocks_b;      // k-1 runs
  int k = 0;

  int point_at(int rank) const { return by_rank[static_cast<size_t>(rank)]; }
  bool labeled(int rank) const { return rank >= 3 && rank <= n - 1; }
  bool is_plus(int rank) const {
    assert(labeled(rank));
    return sign[static_cast<size_t>(rank)] == Sign::Plus;
  }
  // p2 and pn carry no label but sit on the hull and act as positive flanks.
  bool plus_like(int rank) const {
    return rank == 2 || rank == n || (labeled(rank) && is_plus(rank));
  }
};

// Lexicographically (y, x) least point.
inline int select_anchor(const PointSet& ps) {
  int best = 0;
  for (int i = 1; i < ps.size(); ++i) {
    const Point& p = ps[i];
    const Point& q = ps[best];
    if (p.y < q.y || (p.y == q.y && p.x < q.x)) best = i;
  }
  return best;
}

// Ranks 2..n sorted by strictly increasing angle about the anchor, measured
// from the rightward horizontal. All comparisons are exact cross products;
// the angle itself is never materialized.
inline std::vector<int> radial_order(const PointSet& ps, int anchor) {
  std::vector<int> by_rank(static_cast<size_t>(ps.size()) + 1, -1);
  std::vector<int> rest;
  rest.reserve(static_cast<size_t>(ps.size()) - 1);
  for (int i = 0; i < ps.size(); ++i) {
    if (i != anchor) rest.push_back(i);
  }
  const Point& a = ps[anchor];
  std::sort(rest.begin(), rest.end(), [&](int u, int v) {
    const int o = orient(a, ps[u], ps[v]);
    if (o == 0) throw GeneralPositionError(anchor, u, v);
    return o > 0;
  });
  by_rank[1] = anchor;
  for (size_t r = 0; r < rest.size(); ++r) by_rank[r + 2] = rest[r];
  return by_rank;
}

// p_i is Minus iff it lies strictly inside triangle(p1, p_{i-1}, p_{i+1}).
inline void sign_labels(RadialStructure& rs, const PointSet& ps) {
  rs.sign.assign(static_cast<size_t>(rs.n) + 1, Sign::Plus);
  const Point& p1 = ps[rs.anchor];
  for (int r = 3; r <= rs.n - 1; ++r) {
    const Point& prev = ps[rs.point_at(r - 1)];
    const Point& cur = ps[rs.point_at(r)];
    const Point& next = ps[rs.point_at(r + 1)];
    rs.sign[static_cast<size_t>(r)] =
        in_triangle_interior(cur, p1, prev, next) ? Sign::Minus : Sign::Plus;
  }
}

// Maximal same-sign runs over ranks 3..n-1. A-blocks and B-blocks alternate
// A,B,A,...,A; an empty A_1 (p3 negative) or A_k (p_{n-1} negative) keeps the
// alternation while contributing only its flanks.
inline void partition_blocks(RadialStructure& rs) {
  rs.blocks_a.clear();
  rs.blocks_b.clear();
  const int lo = 3;
  const int hi = rs.n - 1;
  if (lo > hi) {
    rs.blocks_a.push_back(Run{3, 2});  // no labeled ranks at all (n = 3)
    rs.k = 1;
    return;
  }
  if (!rs.is_plus(lo)) rs.blocks_a.push_back(Run{lo, lo - 1});
  int r = lo;
  while (r <= hi) {
    int end = r;
    while (end + 1 <= hi && rs.is_plus(end + 1) == rs.is_plus(r)) ++end;
    (rs.is_plus(r) ? rs.blocks_a : rs.blocks_b).push_back(Run{r, end});
    r = end + 1;
  }
  if (!rs.is_plus(hi)) rs.blocks_a.push_back(Run{hi + 1, hi});
  rs.k = static_cast<int>(rs.blocks_a.size());
  assert(static_cast<int>(rs.blocks_b.size()) == rs.k - 1);
}

namespace detail {

// Nearest same-sign rank below/above r; the unlabeled flanks p2 and pn act
// as virtual neighbours so the labeling is total.
inline int same_sign_prev(const RadialStructure& rs, int r) {
  const Sign s = rs.sign[static_cast<size_t>(r)];
  for (int q = r - 1; q >= 3; --q) {
    if (rs.sign[static_cast<size_t>(q)] == s) return q;
  }
  return 2;
}

inline int same_sign_next(const RadialStructure& rs, int r) {
  const Sign s = rs.sign[static_cast<size_t>(r)];
  for (int q = r + 1; q <= rs.n - 1; ++q) {
    if (rs.sign[static_cast<size_t>(q)] == s) return q;
  }
  return rs.n;
}

}  // namespace detail

inline void refine_labels(RadialStructure& rs, const PointSet& ps) {
  rs.refined.assign(static_cast<size_t>(rs.n) + 1, Refined::PP);
  const Point& p1 = ps[rs.anchor];
  for (int r = 3; r <= rs.n - 1; ++r) {
    const Point& prev = ps[rs.point_at(detail::same_sign_prev(rs, r))];
    const Point& next = ps[rs.point_at(detail::same_sign_next(rs, r))];
    const Point& cur = ps[rs.point_at(r)];
    const bool inside = in_triangle_interior(cur, p1, prev, next);
    const bool plus = rs.is_plus(r);
    rs.refined[static_cast<size_t>(r)] =
        plus ? (inside ? Refined::PM : Refined::PP)
             : (inside ? Refined::MM : Refined::MP);
  }
}

// Odd ranks >= 3 negative and even ranks <= n-1 positive.
inline bool is_pm_set(const RadialStructure& rs) {
  for (int r = 3; r <= rs.n - 1; ++r) {
    const bool want_minus = (r % 2) == 1;
    if ((rs.sign[static_cast<size_t>(r)] == Sign::Minus) != want_minus) {
      return false;
    }
  }
  return true;
}

inline RadialStructure build_radial_structure(const PointSet& ps) {
  RadialStructure rs;
  rs.n = ps.size();
  rs.anchor = select_anchor(ps);
  rs.by_rank = radial_order(ps, rs.anchor);
  rs.rank_of.assign(static_cast<size_t>(rs.n), 0);
  for (int r = 1; r <= rs.n; ++r) {
    rs.rank_of[static_cast<size_t>(rs.by_rank[static_cast<size_t>(r)])] = r;
  }
  sign_labels(rs, ps);
  partition_blocks(rs);
  refine_labels(rs, ps);
  return rs;
}

}  // namespace convexdecomp
