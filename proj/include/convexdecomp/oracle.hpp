#pragma once

#include <algorithm>
#include <cassert>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "convexdecomp/decomposition.hpp"
#include "convexdecomp/geometry.hpp"

namespace convexdecomp {

class CapExceededError : public Error {
 public:
  explicit CapExceededError(int n, int cap)
      : Error("n = " + std::to_string(n) + " exceeds the exhaustive cap of " +
              std::to_string(cap)) {}
};

inline constexpr int kTriangulationCap = 12;
inline constexpr int kOracleCap = 9;

struct OracleResult {
  long long min_cells = 0;
  Decomposition witness;
  long long triangulations = 0;  // triangulations enumerated
  long long partitions = 0;      // complete valid face partitions examined
};

namespace detail {

// A still-untriangulated part of the plane: a simple CCW boundary plus the
// points strictly inside it.
struct Region {
  std::vector<int> boundary;
  std::vector<int> free;
};

inline bool chord_is_boundary_edge(const Region& reg, int a, int b) {
  const int m = static_cast<int>(reg.boundary.size());
  for (int e = 0; e < m; ++e) {
    const int u = reg.boundary[static_cast<size_t>(e)];
    const int v = reg.boundary[static_cast<size_t>((e + 1) % m)];
    if ((u == a && v == b) || (u == b && v == a)) return true;
  }
  return false;
}

inline bool chord_inside_region(const Region& reg, int a, int b,
                                const PointSet& ps) {
  if (chord_is_boundary_edge(reg, a, b)) return true;
  const int m = static_cast<int>(reg.boundary.size());
  for (int e = 0; e < m; ++e) {
    const int u = reg.boundary[static_cast<size_t>(e)];
    const int v = reg.boundary[static_cast<size_t>((e + 1) % m)];
    if (u == a || u == b || v == a || v == b) continue;
    if (segments_properly_cross(ps[a], ps[b], ps[u], ps[v])) return false;
  }
  // No crossing: the chord is entirely inside or entirely outside. Decide by
  // its midpoint, kept rational by scaling everything by two.
  const ScaledPoint mid{static_cast<Wide>(ps[a].x) + ps[b].x,
                        static_cast<Wide>(ps[a].y) + ps[b].y, 2};
  return locate_point(mid, Polygon::of(reg.boundary), ps) == Location::Inside;
}

// Every triangulation of the region has exactly one triangle resting on the
// base edge, so recursing over the apex choices enumerates each one once.
inline void enumerate_region_stack(
    std::vector<Region>& stack, std::vector<Polygon>& acc,
    const PointSet& ps, const std::function<void(const std::vector<Polygon>&)>& emit) {
  if (stack.empty()) {
    emit(acc);
    return;
  }
  Region reg = std::move(stack.back());
  stack.pop_back();

  if (reg.boundary.size() == 3 && reg.free.empty()) {
    acc.push_back(make_ccw(reg.boundary, ps));
    enumerate_region_stack(stack, acc, ps, emit);
    acc.pop_back();
    stack.push_back(std::move(reg));
    return;
  }

  const int m = static_cast<int>(reg.boundary.size());
  int base = 0;
  for (int e = 1; e < m; ++e) {
    const auto cur = std::make_pair(reg.boundary[static_cast<size_t>(e)],
                                    reg.boundary[static_cast<size_t>((e + 1) % m)]);
    const auto bst = std::make_pair(reg.boundary[static_cast<size_t>(base)],
                                    reg.boundary[static_cast<size_t>((base + 1) % m)]);
    if (cur < bst) base = e;
  }
  std::vector<int> ring(reg.boundary.size());
  for (int t = 0; t < m; ++t) {
    ring[static_cast<size_t>(t)] =
        reg.boundary[static_cast<size_t>((base + t) % m)];
  }
  const int u = ring[0];
  const int w = ring[1];

  std::vector<int> candidates;
  for (int j = 2; j < m; ++j) candidates.push_back(ring[static_cast<size_t>(j)]);
  for (int f : reg.free) candidates.push_back(f);
  std::sort(candidates.begin(), candidates.end());

  for (int x : candidates) {
    if (orient(ps[u], ps[w], ps[x]) <= 0) continue;
    bool empty_tri = true;
    auto consider = [&](int q) {
      if (q == u || q == w || q == x) return;
      if (in_triangle_interior(ps[q], ps[u], ps[w], ps[x])) empty_tri = false;
    };
    for (int q : reg.boundary) consider(q);
    for (int q : reg.free) consider(q);
    if (!empty_tri) continue;
    if (!chord_inside_region(reg, u, x, ps)) continue;
    if (!chord_inside_region(reg, w, x, ps)) continue;

    acc.push_back(make_ccw({u, w, x}, ps));
    const size_t stack_mark = stack.size();
    const auto free_of = [&](const Polygon& poly, std::vector<int>& dst,
                             const std::vector<int>& src) {
      for (int f : src) {
        if (f != x && strictly_inside(ps[f], poly, ps)) dst.push_back(f);
      }
    };
    bool feasible = true;
    const auto it = std::find(ring.begin() + 2, ring.end(), x);
    if (it == ring.end()) {
      // Interior apex: the base edge bulges inward to pass through x.
      Region next;
      next.boundary.push_back(u);
      next.boundary.push_back(x);
      for (int t = 1; t < m; ++t) next.boundary.push_back(ring[static_cast<size_t>(t)]);
      Polygon poly = Polygon::of(next.boundary);
      free_of(poly, next.free, reg.free);
      if (next.free.size() + 1 != reg.free.size()) feasible = false;
      stack.push_back(std::move(next));
    } else {
      const int j = static_cast<int>(it - ring.begin());
      size_t distributed = 0;
      if (j >= 3) {
        Region r1;
        for (int t = 1; t <= j; ++t) r1.boundary.push_back(ring[static_cast<size_t>(t)]);
        Polygon poly = Polygon::of(r1.boundary);
        free_of(poly, r1.free, reg.free);
        distributed += r1.free.size();
        stack.push_back(std::move(r1));
      }
      if (j <= m - 2) {
        Region r2;
        for (int t = j; t < m; ++t) r2.boundary.push_back(ring[static_cast<size_t>(t)]);
        r2.boundary.push_back(u);
        Polygon poly = Polygon::of(r2.boundary);
        free_of(poly, r2.free, reg.free);
        distributed += r2.free.size();
        stack.push_back(std::move(r2));
      }
      if (distributed != reg.free.size()) feasible = false;
    }
    if (feasible) enumerate_region_stack(stack, acc, ps, emit);
    stack.resize(stack_mark);
    acc.pop_back();
  }
  stack.push_back(std::move(reg));
}

}  // namespace detail

// Stream every triangulation of the point set to the callback. Hard-capped;
// the recursion splits on the lexicographically smallest boundary edge.
inline long long enumerate_triangulations(
    const PointSet& ps,
    const std::function<void(const std::vector<Polygon>&)>& emit) {
  if (ps.size() > kTriangulationCap) {
    throw CapExceededError(ps.size(), kTriangulationCap);
  }
  const Polygon hull = convex_hull(ps);
  detail::Region root;
  root.boundary = hull.v;
  std::vector<bool> on_hull(static_cast<size_t>(ps.size()), false);
  for (int id : hull.v) on_hull[static_cast<size_t>(id)] = true;
  for (int i = 0; i < ps.size(); ++i) {
    if (!on_hull[static_cast<size_t>(i)]) root.free.push_back(i);
  }
  const long long expected_faces =
      2LL * ps.size() - hull.size() - 2;
  long long count = 0;
  std::vector<detail::Region> stack{root};
  std::vector<Polygon> acc;
  detail::enumerate_region_stack(stack, acc, ps,
                                 [&](const std::vector<Polygon>& tris) {
                                   assert(static_cast<long long>(tris.size()) ==
                                          expected_faces);
                                   (void)expected_faces;
                                   ++count;
                                   emit(tris);
                                 });
  return count;
}

inline std::vector<std::vector<Polygon>> enumerate_triangulations(
    const PointSet& ps) {
  std::vector<std::vector<Polygon>> out;
  enumerate_triangulations(ps, [&](const std::vector<Polygon>& t) {
    out.push_back(t);
  });
  return out;
}

namespace detail {

// Union of a set of triangulation faces, accepted only if its boundary is a
// single simple cycle. Returns nothing on pinches or annuli.
inline std::optional<Polygon> face_union(const std::vector<Polygon>& faces,
                                         const std::vector<int>& members) {
  std::map<std::pair<int, int>, int> boundary;
  for (int f : members) {
    const Polygon& tri = faces[static_cast<size_t>(f)];
    for (int e = 0; e < 3; ++e) {
      const int a = tri[e];
      const int b = tri[(e + 1) % 3];
      if (boundary.erase({b, a}) == 0) boundary[{a, b}] = f;
    }
  }
  if (boundary.empty()) return std::nullopt;
  std::map<int, int> next;
  for (const auto& [edge, f] : boundary) {
    if (!next.emplace(edge.first, edge.second).second) {
      return std::nullopt;  // pinch: two boundary edges leave one vertex
    }
  }
  std::vector<int> cycle;
  int start = next.begin()->first;
  int cur = start;
  do {
    cycle.push_back(cur);
    auto it = next.find(cur);
    if (it == next.end()) return std::nullopt;
    cur = it->second;
  } while (cur != start && cycle.size() <= next.size());
  if (cycle.size() != next.size()) return std::nullopt;  // several cycles
  return Polygon::of(std::move(cycle));
}

struct PartitionSearch {
  PartitionSearch(const PointSet& points, const std::vector<Polygon>& fs)
      : ps(points), faces(fs) {}

  const PointSet& ps;
  const std::vector<Polygon>& faces;
  std::vector<std::vector<int>> adjacent;  // face -> neighbouring faces
  std::vector<int> assignment;             // face -> group or -1
  std::vector<Polygon> group_cells;
  long long best = 1LL << 40;
  std::vector<Polygon> best_cells;
  long long* partitions = nullptr;

  bool group_valid(const std::vector<int>& members, Polygon* out) {
    auto poly = face_union(faces, members);
    if (!poly) return false;
    if (!is_convex(*poly, ps)) return false;
    for (int i = 0; i < ps.size(); ++i) {
      if (strictly_inside(ps[i], *poly, ps)) return false;
    }
    *out = std::move(*poly);
    return true;
  }

  void close_group_and_continue(std::vector<int>& members, int depth) {
    Polygon cell;
    if (!group_valid(members, &cell)) return;
    group_cells.push_back(std::move(cell));
    search(depth + 1);
    group_cells.pop_back();
  }

  // Enumerate connected supersets of the current member set exactly once:
  // extensions are taken in list order and everything skipped is banned for
  // the rest of the branch.
  void grow(std::vector<int>& members, std::vector<int> frontier,
            std::vector<bool>& banned, int depth) {
    close_group_and_continue(members, depth);
    for (size_t i = 0; i < frontier.size(); ++i) {
      const int f = frontier[i];
      if (assignment[static_cast<size_t>(f)] != -1) continue;
      assignment[static_cast<size_t>(f)] = depth;
      members.push_back(f);
      std::vector<int> next_frontier(frontier.begin() + static_cast<long>(i) + 1,
                                     frontier.end());
      std::vector<int> newly_banned;
      for (size_t b = 0; b <= i; ++b) {
        if (!banned[static_cast<size_t>(frontier[b])]) {
          banned[static_cast<size_t>(frontier[b])] = true;
          newly_banned.push_back(frontier[b]);
        }
      }
      for (int nb : adjacent[static_cast<size_t>(f)]) {
        if (assignment[static_cast<size_t>(nb)] == -1 &&
            !banned[static_cast<size_t>(nb)] &&
            std::find(next_frontier.begin(), next_frontier.end(), nb) ==
                next_frontier.end()) {
          next_frontier.push_back(nb);
        }
      }
      grow(members, std::move(next_frontier), banned, depth);
      for (int nb : newly_banned) banned[static_cast<size_t>(nb)] = false;
      members.pop_back();
      assignment[static_cast<size_t>(f)] = -1;
    }
  }

  void search(int depth) {
    if (static_cast<long long>(depth) >= best) return;  // cannot improve
    int root = -1;
    for (size_t f = 0; f < faces.size(); ++f) {
      if (assignment[f] == -1) {
        root = static_cast<int>(f);
        break;
      }
    }
    if (root == -1) {
      ++*partitions;
      if (static_cast<long long>(group_cells.size()) < best) {
        best = static_cast<long long>(group_cells.size());
        best_cells = group_cells;
      }
      return;
    }
    assignment[static_cast<size_t>(root)] = depth;
    std::vector<int> members{root};
    std::vector<bool> banned(faces.size(), false);
    std::vector<int> frontier;
    for (int nb : adjacent[static_cast<size_t>(root)]) {
      if (assignment[static_cast<size_t>(nb)] == -1) frontier.push_back(nb);
    }
    grow(members, std::move(frontier), banned, depth);
    assignment[static_cast<size_t>(root)] = -1;
  }
};

}  // namespace detail

// Exhaustive minimum: every convex decomposition refines to a triangulation,
// so searching all triangulations and all ways of merging their faces into
// convex empty groups is complete.
inline OracleResult min_convex_decomposition(const PointSet& ps) {
  if (ps.size() > kOracleCap) {
    throw CapExceededError(ps.size(), kOracleCap);
  }
  OracleResult res;
  res.min_cells = 1LL << 40;
  long long partitions = 0;

  res.triangulations =
      enumerate_triangulations(ps, [&](const std::vector<Polygon>& faces) {
        detail::PartitionSearch search(ps, faces);
        search.adjacent.assign(faces.size(), {});
        std::map<std::pair<int, int>, int> edge_face;
        for (size_t f = 0; f < faces.size(); ++f) {
          for (int e = 0; e < 3; ++e) {
            const int a = faces[f][e];
            const int b = faces[f][(e + 1) % 3];
            auto it = edge_face.find({b, a});
            if (it != edge_face.end()) {
              search.adjacent[f].push_back(it->second);
              search.adjacent[static_cast<size_t>(it->second)].push_back(
                  static_cast<int>(f));
            } else {
              edge_face[{a, b}] = static_cast<int>(f);
            }
          }
        }
        for (auto& lst : search.adjacent) std::sort(lst.begin(), lst.end());
        search.assignment.assign(faces.size(), -1);
        search.best = res.min_cells;
        search.partitions = &partitions;
        search.search(0);
        if (search.best < res.min_cells) {
          res.min_cells = search.best;
          res.witness.cells = search.best_cells;
        }
      });
  res.partitions = partitions;
  res.witness.source = "oracle";
  res.witness.acct.n = ps.size();
  res.witness.acct.c = convex_hull(ps).size();
  canonicalize_cells(res.witness.cells);
  return res;
}

// True iff the exhaustive minimum meets the floor(10n/7) - c target. A false
// answer at tiny n is data, not an error.
inline bool theorem_bound_check(const PointSet& ps, const OracleResult& res) {
  const long long c = convex_hull(ps).size();
  return res.min_cells <= (10LL * ps.size()) / 7 - c;
}

}  // namespace convexdecomp
