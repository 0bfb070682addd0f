#pragma once

#include <algorithm>
#include <array>
#include <string>
#include <vector>

#include "convexdecomp/baseline.hpp"
#include "convexdecomp/decomposition.hpp"
#include "convexdecomp/geometry.hpp"
#include "convexdecomp/radial.hpp"

namespace convexdecomp {

class NotPmSetError : public Error {
 public:
  NotPmSetError() : Error("not a \xc2\xb1 set") {}
};

// Seven consecutive radial points plus the anchor, tiled by nine canonical
// triangles: four fan triangles under the chain and five caps/wedges over
// it. Triangle ids follow the construction (1..9).
struct QBlock {
  int i = 0;                    // start rank (even)
  std::array<Polygon, 9> tri;   // tri[t-1], CCW
};

inline QBlock base_triangles(int i, const RadialStructure& rs,
                             const PointSet& ps) {
  if (i < 2 || i + 6 > rs.n) {
    throw Error("block at rank " + std::to_string(i) +
                " exceeds the point set");
  }
  QBlock b;
  b.i = i;
  auto P = [&](int r) { return rs.point_at(r); };
  auto T = [&](int a, int c, int e) {
    return make_ccw({a, c, e}, ps);
  };
  const int a = rs.anchor;
  b.tri[0] = T(a, P(i), P(i + 1));
  b.tri[1] = T(a, P(i + 1), P(i + 3));
  b.tri[2] = T(a, P(i + 3), P(i + 5));
  b.tri[3] = T(a, P(i + 5), P(i + 6));
  b.tri[4] = T(P(i), P(i + 1), P(i + 2));
  b.tri[5] = T(P(i + 1), P(i + 2), P(i + 3));
  b.tri[6] = T(P(i + 2), P(i + 3), P(i + 4));
  b.tri[7] = T(P(i + 3), P(i + 4), P(i + 5));
  b.tri[8] = T(P(i + 4), P(i + 5), P(i + 6));
  return b;
}

enum class HalfplaneSide { D, Uside };

namespace detail {

// View of a block that optionally reverses the rank order. The case table
// for labels (+-, ++) is the mirror image of the (++, +-) one, so the
// selection logic runs on the view and maps triangle ids back at the end.
struct BlockView {
  int i;
  bool mirrored;

  int rank(int offset) const { return mirrored ? i + 6 - offset : i + offset; }
  int tri(int id) const {
    if (!mirrored) return id;
    static constexpr int kMirror[10] = {0, 4, 3, 2, 1, 9, 8, 7, 6, 5};
    return kMirror[id];
  }
};

inline HalfplaneSide side_in_view(const BlockView& view, int rank_j,
                                  const RadialStructure& rs,
                                  const PointSet& ps) {
  const Point& l1 = ps[rs.point_at(view.rank(1))];
  const Point& l2 = ps[rs.point_at(view.rank(3))];
  const int ref = orient(l1, l2, ps[rs.anchor]);
  const int s = orient(l1, l2, ps[rs.point_at(rank_j)]);
  if (ref == 0 || s == 0) {
    throw GeneralPositionError(rs.point_at(view.rank(1)),
                               rs.point_at(view.rank(3)),
                               s == 0 ? rs.point_at(rank_j) : rs.anchor);
  }
  return s == ref ? HalfplaneSide::D : HalfplaneSide::Uside;
}

}  // namespace detail

// Which side of the line through p_{i+1} and p_{i+3} the point of rank j
// lies on; D is the open side containing the anchor.
inline HalfplaneSide halfplane_side(int rank_j, const QBlock& block,
                                    const RadialStructure& rs,
                                    const PointSet& ps) {
  return detail::side_in_view(detail::BlockView{block.i, false}, rank_j, rs,
                              ps);
}

// How the nine triangles of one block get grouped into cells. Groups hold
// actual triangle ids; each group is a chain of edge-joinable triangles.
struct MergePlan {
  std::vector<std::vector<int>> groups;
  bool has_quad = false;  // case (b): quad over the four positive ranks
  std::string case_tag;
  std::vector<std::string> notes;  // always-convex claims that failed while choosing
};

namespace detail {

inline Polygon join_tris(const QBlock& block, const std::vector<int>& ids,
                         bool* ok) {
  std::vector<Polygon> parts;
  for (int id : ids) parts.push_back(block.tri[static_cast<size_t>(id - 1)]);
  while (parts.size() > 1) {
    bool merged = false;
    for (size_t a = 0; a < parts.size() && !merged; ++a) {
      for (size_t b = a + 1; b < parts.size() && !merged; ++b) {
        try {
          Polygon j = edge_join(parts[a], parts[b]);
          parts[a] = std::move(j);
          parts.erase(parts.begin() + static_cast<long>(b));
          merged = true;
        } catch (const JoinError&) {
        }
      }
    }
    if (!merged) {
      if (ok) *ok = false;
      return Polygon{};
    }
  }
  if (ok) *ok = true;
  return parts.front();
}

inline bool group_convex(const QBlock& block, const std::vector<int>& ids,
                         const PointSet& ps) {
  bool ok = false;
  Polygon p = join_tris(block, ids, &ok);
  return ok && is_convex(p, ps);
}

}  // namespace detail

// The case analysis over the refined labels of p_{i+2}, p_{i+3}, p_{i+4}.
// Case (a): labels (++, +-); case (b): (+-, +-); case (c): (++, ++);
// labels (+-, ++) reuse case (a) with the block mirrored.
inline MergePlan select_merge_plan(const QBlock& block,
                                   const RadialStructure& rs,
                                   const PointSet& ps) {
  const int i = block.i;
  const Refined l2 = rs.refined[static_cast<size_t>(i + 2)];
  const Refined l3 = rs.refined[static_cast<size_t>(i + 3)];
  const Refined l4 = rs.refined[static_cast<size_t>(i + 4)];

  MergePlan plan;
  auto emit = [&](const detail::BlockView& view,
                  std::vector<std::vector<int>> groups_v, std::string tag) {
    for (auto& g : groups_v) {
      for (int& id : g) id = view.tri(id);
      std::sort(g.begin(), g.end());
    }
    std::sort(groups_v.begin(), groups_v.end());
    plan.groups = std::move(groups_v);
    plan.case_tag = std::move(tag);
  };

  if (l2 == Refined::PM && l4 == Refined::PM) {
    emit(detail::BlockView{i, false},
         {{1}, {2, 6}, {3, 8}, {4}, {5}, {7}, {9}}, "b");
    plan.has_quad = true;
    return plan;
  }

  const bool mirrored = (l2 == Refined::PM && l4 == Refined::PP);
  const detail::BlockView view{i, mirrored};
  const bool case_c = (l2 == Refined::PP && l4 == Refined::PP);
  const char* base = case_c ? "c" : (mirrored ? "a-mirror" : "a");
  auto convex_v = [&](std::vector<int> ids) {
    for (int& id : ids) id = view.tri(id);
    return detail::group_convex(block, ids, ps);
  };

  if (l3 == Refined::MM) {
    const HalfplaneSide s_i = detail::side_in_view(view, view.rank(0), rs, ps);
    if (case_c) {
      if (s_i == HalfplaneSide::D) {
        if (convex_v({5, 6, 7, 8})) {
          emit(view, {{1}, {2}, {3}, {4}, {5, 6, 7, 8}, {9}},
               std::string(base) + "1-hexagon");
        } else {
          emit(view, {{1, 2}, {3}, {4}, {5}, {6, 7, 8}, {9}},
               std::string(base) + "1-split");
        }
      } else {
        if (!convex_v({5, 6, 7, 8})) {
          plan.notes.push_back(
              "hexagon claimed always convex for (++,++) with p_i outside, "
              "found nonconvex at block " + std::to_string(i));
          emit(view, {{1, 2}, {3}, {4}, {5}, {6, 7, 8}, {9}},
               std::string(base) + "1-split");
        } else {
          emit(view, {{1}, {2}, {3}, {4}, {5, 6, 7, 8}, {9}},
               std::string(base) + "1-hexagon");
        }
      }
    } else {
      if (s_i == HalfplaneSide::D) {
        if (convex_v({6, 7, 8})) {
          emit(view, {{1, 2}, {3}, {4}, {5}, {6, 7, 8}, {9}},
               std::string(base) + "1-pentagon");
        } else {
          emit(view, {{1, 2}, {3, 8}, {4}, {5}, {6, 7}, {9}},
               std::string(base) + "1-pentsplit");
        }
      } else {
        if (convex_v({5, 6, 7, 8})) {
          emit(view, {{1}, {2}, {3}, {4}, {5, 6, 7, 8}, {9}},
               std::string(base) + "1-hexagon");
        } else {
          emit(view, {{1}, {2}, {3, 8}, {4}, {5, 6, 7}, {9}},
               std::string(base) + "1-hexsplit");
        }
      }
    }
    return plan;
  }

  // l3 == MP (or MM handled above): branch on the sides of the first and
  // fifth point of the view; the middle point's side is not consulted.
  const HalfplaneSide s_i = detail::side_in_view(view, view.rank(0), rs, ps);
  const HalfplaneSide s_4 = detail::side_in_view(view, view.rank(4), rs, ps);
  if (s_i == HalfplaneSide::D && s_4 == HalfplaneSide::D) {
    emit(view, {{1, 2, 3, 8}, {4}, {5}, {6}, {7}, {9}},
         std::string(base) + "2-dd");
  } else if (s_i == HalfplaneSide::Uside && s_4 == HalfplaneSide::D) {
    emit(view, {{1}, {2, 3, 8}, {5, 6}, {4}, {7}, {9}},
         std::string(base) + "2-ud");
  } else if (s_i == HalfplaneSide::D && s_4 == HalfplaneSide::Uside) {
    emit(view, {{1, 2, 3}, {4}, {5}, {6, 7}, {8}, {9}},
         std::string(base) + "2-du");
  } else {
    emit(view, {{1}, {2, 3}, {4}, {5, 6, 7}, {8}, {9}},
         std::string(base) + "2-uu");
  }
  return plan;
}

// Result of applying a plan to one block.
struct BlockCells {
  std::vector<Polygon> cells;
  int cell_of_t1 = -1;  // positions in cells
  int cell_of_t4 = -1;
  bool quad_committed = false;
  int quad_index = -1;
};

// Edge-join each group and check the result convex; a group that fails its
// convexity claim is logged and emitted as bare triangles instead.
inline BlockCells apply_merge_plan(const MergePlan& plan, const QBlock& block,
                                   const RadialStructure& rs,
                                   const PointSet& ps, Decomposition& d) {
  for (const auto& note : plan.notes) {
    d.add_discrepancy("plan-claim", note);
  }
  BlockCells out;
  auto record = [&](const std::vector<int>& ids, int cell_index) {
    for (int id : ids) {
      if (id == 1) out.cell_of_t1 = cell_index;
      if (id == 4) out.cell_of_t4 = cell_index;
    }
  };
  for (const auto& group : plan.groups) {
    if (group.size() == 1) {
      record(group, static_cast<int>(out.cells.size()));
      out.cells.push_back(block.tri[static_cast<size_t>(group[0] - 1)]);
      continue;
    }
    bool chained = false;
    Polygon joined = detail::join_tris(block, group, &chained);
    if (chained && is_convex(joined, ps)) {
      record(group, static_cast<int>(out.cells.size()));
      out.cells.push_back(std::move(joined));
      continue;
    }
    std::string ids;
    for (int id : group) ids += "t" + std::to_string(id);
    d.add_discrepancy("group-nonconvex",
                      plan.case_tag + " group " + ids + " at block " +
                          std::to_string(block.i));
    ++d.acct.fallbacks;
    for (int id : group) {
      record({id}, static_cast<int>(out.cells.size()));
      out.cells.push_back(block.tri[static_cast<size_t>(id - 1)]);
    }
  }
  if (plan.has_quad) {
    const int i = block.i;
    Polygon quad = make_ccw({rs.point_at(i), rs.point_at(i + 2),
                             rs.point_at(i + 4), rs.point_at(i + 6)},
                            ps);
    if (is_convex(quad, ps)) {
      out.quad_committed = true;
      out.quad_index = static_cast<int>(out.cells.size());
      out.cells.push_back(std::move(quad));
    } else {
      d.add_discrepancy("case-b-quad-nonconvex",
                        "block " + std::to_string(i));
    }
  }
  return out;
}

namespace detail {

inline std::vector<int> block_starts(int n) {
  std::vector<int> starts;
  for (int i = 2; i + 6 <= n; i += 6) starts.push_back(i);
  return starts;
}

inline ScaledPoint triangle_centroid(const Polygon& tri, const PointSet& ps) {
  Wide sx = 0;
  Wide sy = 0;
  for (int id : tri.v) {
    sx += ps[id].x;
    sy += ps[id].y;
  }
  return ScaledPoint{sx, sy, 3};
}

inline int cell_containing(const std::vector<Polygon>& cells,
                           const ScaledPoint& p, const PointSet& ps) {
  for (size_t i = 0; i < cells.size(); ++i) {
    if (locate_point(p, cells[i], ps) == Location::Inside) {
      return static_cast<int>(i);
    }
  }
  return -1;
}

}  // namespace detail

// Join consecutive blocks across the shared fan edge: the cell holding t4
// of one block and the cell holding t1 of the next meet along the edge from
// the anchor to the shared rank. The join is kept only if convex.
inline Decomposition merge_across_blocks(Decomposition d,
                                         const RadialStructure& rs,
                                         const PointSet& ps) {
  const std::vector<int> starts = detail::block_starts(rs.n);
  for (size_t b = 1; b < starts.size(); ++b) {
    const int m = starts[b];  // shared rank between block b-1 and block b
    ++d.acct.merges_attempted;
    const Polygon t4 = make_ccw(
        {rs.anchor, rs.point_at(m - 1), rs.point_at(m)}, ps);
    const Polygon t1 = make_ccw(
        {rs.anchor, rs.point_at(m), rs.point_at(m + 1)}, ps);
    const int ia =
        detail::cell_containing(d.cells, detail::triangle_centroid(t4, ps), ps);
    const int ib =
        detail::cell_containing(d.cells, detail::triangle_centroid(t1, ps), ps);
    if (ia < 0 || ib < 0 || ia == ib) {
      d.add_discrepancy("block-merge-skip",
                        "boundary rank " + std::to_string(m) +
                            ": boundary cells not found");
      continue;
    }
    Polygon joined;
    try {
      joined = edge_join(d.cells[static_cast<size_t>(ia)],
                         d.cells[static_cast<size_t>(ib)]);
    } catch (const JoinError& e) {
      d.add_discrepancy("block-merge-skip", "boundary rank " +
                                                std::to_string(m) + ": " +
                                                e.what());
      continue;
    }
    if (!is_convex(joined, ps)) {
      d.add_discrepancy("block-merge-nonconvex",
                        "boundary rank " + std::to_string(m));
      continue;
    }
    d.cells[static_cast<size_t>(ia)] = std::move(joined);
    d.cells.erase(d.cells.begin() + ib);
    ++d.acct.merges_applied;
  }
  return d;
}

// The block construction for alternating sets. Full blocks cover ranks in
// groups of six; a trailing partial block falls back to the fan-and-cap
// covering; committed case (b) quads are carved out of the pockets before
// the pockets are triangulated.
inline Decomposition pm_decompose(const PointSet& ps) {
  const RadialStructure rs = build_radial_structure(ps);
  if (!is_pm_set(rs)) throw NotPmSetError();

  Decomposition d;
  d.source = "pm";
  d.acct.n = rs.n;
  d.acct.k = rs.k;
  const Polygon hull = convex_hull(ps);
  d.acct.c = hull.size();

  struct QuadRef {
    int block_i;
    int cell_index;
  };
  std::vector<QuadRef> quads;

  const std::vector<int> starts = detail::block_starts(rs.n);
  for (int i : starts) {
    const QBlock block = base_triangles(i, rs, ps);
    const MergePlan plan = select_merge_plan(block, rs, ps);
    if (plan.has_quad) ++d.acct.case_b;
    BlockCells bc = apply_merge_plan(plan, block, rs, ps, d);
    const int base_index = static_cast<int>(d.cells.size());
    for (auto& cell : bc.cells) d.cells.push_back(std::move(cell));
    if (bc.quad_committed) {
      quads.push_back(QuadRef{i, base_index + bc.quad_index});
    }
  }

  const int covered = starts.empty() ? 2 : starts.back() + 6;
  if (covered < rs.n) {
    const size_t before = d.cells.size();
    detail::range_fan_cells(rs, ps, covered, rs.n, d, nullptr);
    d.acct.tail_cells = static_cast<int>(d.cells.size() - before);
  }

  PocketSet pockets = compute_pockets(rs, ps);
  std::vector<int> dropped_quads;
  for (const QuadRef& q : quads) {
    const int pi = rs.point_at(q.block_i);
    const int p2 = rs.point_at(q.block_i + 2);
    const int p4 = rs.point_at(q.block_i + 4);
    const int p6 = rs.point_at(q.block_i + 6);
    // The pocket boundary runs the chain in reverse: ... p6 p4 p2 pi ...
    bool carved = false;
    for (Polygon& pocket : pockets.pockets) {
      const int m = pocket.size();
      for (int s = 0; s < m && !carved; ++s) {
        if (pocket[s] == p6 && pocket[(s + 1) % m] == p4 &&
            pocket[(s + 2) % m] == p2 && pocket[(s + 3) % m] == pi) {
          const std::int64_t before_area = area2(pocket, ps);
          const std::int64_t quad_area =
              area2(d.cells[static_cast<size_t>(q.cell_index)], ps);
          std::vector<int> trimmed;
          for (int t = 0; t < m; ++t) {
            if (t == (s + 1) % m || t == (s + 2) % m) continue;
            trimmed.push_back(pocket[t]);
          }
          Polygon candidate = Polygon::of(std::move(trimmed));
          if (candidate.size() >= 3 &&
              area2(candidate, ps) != before_area - quad_area) {
            break;  // carving claim failed; keep the pocket intact
          }
          if (candidate.size() < 3 && before_area != quad_area) {
            break;
          }
          pocket = std::move(candidate);
          carved = true;
        }
      }
      if (carved) break;
    }
    if (!carved) {
      d.add_discrepancy("case-b-pocket-carve",
                        "quad at block " + std::to_string(q.block_i) +
                            " could not be removed from a pocket");
      dropped_quads.push_back(q.cell_index);
    }
  }
  std::sort(dropped_quads.rbegin(), dropped_quads.rend());
  for (int idx : dropped_quads) {
    d.cells.erase(d.cells.begin() + idx);
    --d.acct.case_b;
  }
  pockets.pockets.erase(
      std::remove_if(pockets.pockets.begin(), pockets.pockets.end(),
                     [](const Polygon& p) { return p.size() < 3; }),
      pockets.pockets.end());

  for (auto& tri : triangulate_pockets(pockets, ps)) {
    detail::commit_cell(d, std::move(tri), true, ps, "pocket-triangle");
    ++d.acct.t_u;
  }

  d = merge_across_blocks(std::move(d), rs, ps);

  std::int64_t cell_area = 0;
  for (const Polygon& cell : d.cells) cell_area += area2(cell, ps);
  if (cell_area != area2(hull, ps)) {
    d.add_discrepancy("area-mismatch", "cells do not tile the hull exactly");
  }
  return d;
}

}  // namespace convexdecomp
