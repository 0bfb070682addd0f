#include <catch2/catch_amalgamated.hpp>

#include "convexdecomp/baseline.hpp"
#include "convexdecomp/verify.hpp"
#include "helpers.hpp"

using namespace convexdecomp;

namespace {

// 15 points with k = 4 and c = 3: a triangle frame around a fan whose sign
// pattern is + + - + + - + + - + + +, giving blocks A1={3,4}, B1={5},
// A2={6,7}, B2={8}, A3={9,10}, B3={11}, A4={12,13,14}.
PointSet fifteen_k4_c3() {
  return PointSet::from_points({{0, 0},
                                {4000000, 100000},
                                {355291, 95200},
                                {165006, 90100},
                                {33441, 30400},
                                {53875, 79600},
                                {30174, 80900},
                                {3742, 31300},
                                {-9589, 80200},
                                {-30473, 81700},
                                {-21726, 32100},
                                {-88663, 80600},
                                {-156215, 85300},
                                {-338870, 90800},
                                {-4000000, 100000}});
}

}  // namespace

TEST_CASE("A polygons on the worked example") {
  const PointSet ps = testutil::five_points();
  const RadialStructure rs = build_radial_structure(ps);
  REQUIRE(rs.k == 2);
  // A_1 is empty: the flank triangle p1 p2 p3
  CHECK(build_a_polygon(0, rs).v == std::vector<int>{0, 1, 3});
  // A_2 = {p4}: quad p1 p3 p4 p5 = (0,0) (2,1) (5,3) (0,4)
  const Polygon a2 = build_a_polygon(1, rs);
  CHECK(a2.v == std::vector<int>{0, 3, 2, 4});
  CHECK(is_convex(a2, ps));
  CHECK(area2(a2, ps) == 21);
}

TEST_CASE("B polygon on the worked example") {
  const PointSet ps = testutil::five_points();
  const RadialStructure rs = build_radial_structure(ps);
  const Polygon b1 = build_b_polygon(0, rs, ps);
  CHECK(b1.v == std::vector<int>{1, 2, 3});  // (4,0) (5,3) (2,1), CCW
  CHECK(is_convex(b1, ps));
  CHECK(area2(b1, ps) == 7);
  CHECK(build_b_fans(rs).empty());  // singleton run: no fan triangles
}

TEST_CASE("B fans for a run of three") {
  // anchor, flanks, and a negative run of length 3 under a high frame
  const PointSet ps = PointSet::from_points({{0, 0},
                                             {1000000, 10000},
                                             {400000, 90000},
                                             {90000, 30000},
                                             {30000, 27000},
                                             {-50000, 29000},
                                             {-400000, 91000},
                                             {-1000000, 12000}});
  const RadialStructure rs = build_radial_structure(ps);
  REQUIRE(rs.blocks_b.size() == 1);
  REQUIRE(rs.blocks_b[0].size() == 3);
  const auto fans = build_b_fans(rs);
  REQUIRE(fans.size() == 2);  // |B| - 1
  for (const auto& tri : fans) {
    CHECK(tri.size() == 3);
    CHECK(tri.v.front() == rs.anchor);
  }
  // the cap over the run is a (|B|+2)-gon; convexity is checked, not assumed
  const Polygon cap = build_b_polygon(0, rs, ps);
  CHECK(cap.size() == 5);
  CHECK(is_convex(cap, ps));
}

TEST_CASE("pockets on the worked example: V equals the hull") {
  const PointSet ps = testutil::five_points();
  const RadialStructure rs = build_radial_structure(ps);
  const PocketSet pockets = compute_pockets(rs, ps);
  CHECK(pockets.pockets.empty());
  CHECK(pockets.star.v == convex_hull(ps).v);
}

TEST_CASE("convex position: no pockets, single hull cell") {
  const PointSet ps = PointSet::from_points(
      {{0, 0}, {100, 1}, {90, 45}, {60, 80}, {20, 98}});
  const RadialStructure rs = build_radial_structure(ps);
  CHECK(compute_pockets(rs, ps).pockets.empty());
  const Decomposition d = baseline_decompose(ps);
  CHECK(d.cells.size() == 1);  // n + k - c = 5 + 1 - 5
  CHECK(d.cells[0].size() == 5);
}

TEST_CASE("one interior plus point makes exactly one pocket") {
  // one negative shields a positive point that stays inside the hull, so V
  // dips under the hull edge from p2 to the apex
  const PointSet ps = PointSet::from_points(
      {{0, 0}, {1000, 10}, {500, 100}, {300, 500}, {0, 900}, {-1000, 20}});
  const RadialStructure rs = build_radial_structure(ps);
  REQUIRE(convex_hull(ps).size() == 4);
  const PocketSet pockets = compute_pockets(rs, ps);
  REQUIRE(pockets.pockets.size() == 1);
  CHECK(pockets.pockets[0].size() == 3);
  const auto tris = triangulate_pockets(pockets, ps);
  CHECK(tris.size() == 1);
}

TEST_CASE("pocket triangulation of a quadrilateral pocket") {
  // two interior plus points under one hull edge: one pocket, two triangles
  const PointSet ps = PointSet::from_points({{0, 0},
                                             {1000, 10},
                                             {500, 100},
                                             {350, 450},
                                             {150, 750},
                                             {0, 900},
                                             {-1000, 20}});
  const RadialStructure rs = build_radial_structure(ps);
  const PocketSet pockets = compute_pockets(rs, ps);
  REQUIRE(pockets.pockets.size() == 1);
  CHECK(pockets.pockets[0].size() == 4);
  CHECK(triangulate_pockets(pockets, ps).size() == 2);
}

TEST_CASE("baseline on the worked example") {
  const PointSet ps = testutil::five_points();
  const Decomposition d = baseline_decompose(ps);
  REQUIRE(d.cells.size() == 3);  // 5 + 2 - 4
  CHECK(d.discrepancies.empty());
  std::int64_t total = 0;
  for (const auto& cell : d.cells) total += area2(cell, ps);
  CHECK(total == 32);
  CHECK(verify_decomposition(d, ps).valid());
}

TEST_CASE("baseline on a triangle") {
  const PointSet ps = PointSet::from_points({{0, 0}, {4, 1}, {1, 4}});
  const Decomposition d = baseline_decompose(ps);
  CHECK(d.cells.size() == 1);  // 3 + 1 - 3
}

TEST_CASE("baseline on the 15-point k=4 c=3 configuration") {
  const PointSet ps = fifteen_k4_c3();
  const RadialStructure rs = build_radial_structure(ps);
  REQUIRE(rs.k == 4);
  REQUIRE(convex_hull(ps).size() == 3);
  const Decomposition d = baseline_decompose(ps);
  CHECK(d.cells.size() == 16);  // n + k - c = 15 + 4 - 3
  CHECK(d.acct.fallbacks == 0);
  CHECK(d.discrepancies.empty());
  const VerificationReport rep = verify_decomposition(d, ps);
  CHECK(rep.valid());
  CHECK(rep.counts.target_main == 18);  // floor(150/7) - 3
  CHECK(rep.counts.slack_main == -2);
}

TEST_CASE("baseline cardinality, area conservation and validity under fuzz") {
  for (std::uint64_t seed = 200; seed < 300; ++seed) {
    const int n = 4 + static_cast<int>(seed % 40);
    const PointSet ps = gen_random(n, seed, 100000);
    const RadialStructure rs = build_radial_structure(ps);
    const Decomposition d = baseline_decompose(ps);
    REQUIRE(d.acct.fallbacks == 0);
    CHECK(static_cast<int>(d.cells.size()) == rs.n + rs.k - d.acct.c);
    std::int64_t total = 0;
    for (const auto& cell : d.cells) total += area2(cell, ps);
    CHECK(total == area2(convex_hull(ps), ps));
    CHECK(static_cast<int>(compute_pockets(rs, ps).pockets.size()) <=
          d.acct.c - 2);
    const VerificationReport rep = verify_decomposition(d, ps);
    CHECK(rep.valid());
  }
}
