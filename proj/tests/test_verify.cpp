#include <catch2/catch_amalgamated.hpp>

#include "convexdecomp/verify.hpp"
#include "helpers.hpp"

using namespace convexdecomp;

namespace {

Decomposition fan_triangulation(const PointSet& ps) {
  // triangulate by ear clipping the hull after star-splitting interior
  // points: simplest valid decomposition source for tests is the baseline
  Decomposition d = baseline_decompose(ps);
  return d;
}

}  // namespace

TEST_CASE("verifier passes valid decompositions") {
  const PointSet ps = testutil::five_points();
  const Decomposition d = fan_triangulation(ps);
  const VerificationReport rep = verify_decomposition(d, ps);
  CHECK(rep.wellformed.pass);
  CHECK(rep.c1_empty.pass);
  CHECK(rep.c2_disjoint.pass);
  CHECK(rep.c3_cover.pass);
  CHECK(rep.counts.cells == 3);
  CHECK(rep.counts.target_baseline == 3);
}

TEST_CASE("C1 catches a swallowed point with a witness") {
  const PointSet ps = PointSet::from_points(
      {{0, 0}, {10, 1}, {11, 10}, {1, 9}, {5, 5}});
  Decomposition d;
  d.cells.push_back(Polygon::of({0, 1, 2, 3}));  // center point 4 inside
  const CheckResult r = check_emptiness(d, ps);
  REQUIRE_FALSE(r.pass);
  CHECK(r.witnesses[0].find("point 4") != std::string::npos);
}

TEST_CASE("C2 catches duplicate cells via the area identity and edges") {
  const PointSet ps = PointSet::from_points({{0, 0}, {10, 1}, {4, 10}});
  Decomposition d;
  d.cells.push_back(Polygon::of({0, 1, 2}));
  d.cells.push_back(Polygon::of({0, 1, 2}));
  const DisjointCover dc = check_disjoint_and_cover(d, ps);
  CHECK_FALSE(dc.c2.pass);
  CHECK_FALSE(dc.c3.pass);  // area sum exceeds the hull
}

TEST_CASE("C2 catches overlapping cells with a witness pair") {
  const PointSet ps = PointSet::from_points(
      {{0, 0}, {10, 1}, {11, 10}, {1, 9}, {5, 5}});
  Decomposition d;
  d.cells.push_back(Polygon::of({0, 1, 2}));
  d.cells.push_back(Polygon::of({0, 1, 2, 3}));  // contains the triangle
  const DisjointCover dc = check_disjoint_and_cover(d, ps);
  REQUIRE_FALSE(dc.c2.pass);
  CHECK(dc.c2.witnesses[0].find("cells 0 and 1") != std::string::npos);
}

TEST_CASE("C2 catches proper edge crossings") {
  const PointSet ps = PointSet::from_points(
      {{0, 0}, {10, 1}, {11, 10}, {1, 9}, {5, 5}});
  Decomposition d;
  d.cells.push_back(Polygon::of({0, 1, 2}));  // diagonal 0-2
  d.cells.push_back(Polygon::of({1, 2, 3}));  // diagonal 1-3 crosses it
  const DisjointCover dc = check_disjoint_and_cover(d, ps);
  CHECK_FALSE(dc.c2.pass);
}

TEST_CASE("C3 area identity on the worked example") {
  const PointSet ps = testutil::five_points();
  Decomposition d = baseline_decompose(ps);
  const DisjointCover ok = check_disjoint_and_cover(d, ps);
  CHECK(ok.c3.pass);
  d.cells.pop_back();  // remove a cell: union no longer covers the hull
  const DisjointCover bad = check_disjoint_and_cover(d, ps);
  CHECK_FALSE(bad.c3.pass);
}

TEST_CASE("minimality fails on two triangles of a convex quad") {
  const PointSet ps = PointSet::from_points({{0, 0}, {10, 1}, {11, 10}, {1, 9}});
  Decomposition d;
  d.cells.push_back(Polygon::of({0, 1, 2}));
  d.cells.push_back(Polygon::of({0, 2, 3}));
  const CheckResult r = check_minimality(d, ps);
  REQUIRE_FALSE(r.pass);
  CHECK(r.witnesses[0].find("cells 0 and 1") != std::string::npos);
}

TEST_CASE("minimality passes on single cells and minimalized output") {
  const PointSet ps = PointSet::from_points({{0, 0}, {10, 1}, {4, 10}});
  Decomposition d;
  d.cells.push_back(Polygon::of({0, 1, 2}));
  CHECK(check_minimality(d, ps).pass);

  const PointSet ps2 = testutil::random_set(42, 15, 100000);
  const Decomposition d2 = minimalize(baseline_decompose(ps2), ps2);
  CHECK(check_minimality(d2, ps2).pass);
}

TEST_CASE("wellformed rejects malformed cells and gates the other checks") {
  const PointSet ps = PointSet::from_points(
      {{0, 0}, {10, 1}, {11, 10}, {1, 9}, {5, 5}});
  Decomposition d;
  d.cells.push_back(Polygon::of({0, 1, 3, 2}));  // bowtie
  const VerificationReport rep = verify_decomposition(d, ps);
  CHECK_FALSE(rep.wellformed.pass);
  CHECK_FALSE(rep.valid());
}

TEST_CASE("clockwise cells are rejected as not wellformed") {
  const PointSet ps = PointSet::from_points({{0, 0}, {10, 1}, {4, 10}});
  Decomposition d;
  Polygon cw;
  cw.v = {2, 1, 0};
  d.cells.push_back(cw);
  CHECK_FALSE(check_wellformed(d, ps).pass);
}

TEST_CASE("check_bounds arithmetic") {
  const PointSet tri = PointSet::from_points({{0, 0}, {4, 1}, {1, 4}});
  const Decomposition d = baseline_decompose(tri);
  const RadialStructure rs = build_radial_structure(tri);
  const CountsRecord rec = check_bounds(d, rs, 3);
  CHECK(rec.cells == 1);
  CHECK(rec.target_main == (10 * 3) / 7 - 3);  // 4 - 3 = 1
  CHECK(rec.slack_main == 0);
  CHECK(rec.target_prior == 4 - 3);
}

TEST_CASE("report_lines format") {
  const PointSet ps = testutil::five_points();
  const VerificationReport rep =
      verify_decomposition(baseline_decompose(ps), ps);
  const std::string text = report_lines(rep);
  CHECK(text.find("CHECK wellformed PASS") != std::string::npos);
  CHECK(text.find("CHECK c1_empty PASS") != std::string::npos);
  CHECK(text.find("CHECK c2_disjoint PASS") != std::string::npos);
  CHECK(text.find("CHECK c3_cover PASS") != std::string::npos);
  CHECK(text.find("COUNTS cells=3") != std::string::npos);
}

TEST_CASE("verifier is construction-agnostic across sources") {
  const PointSet ps = testutil::random_set(7, 9, 100000);
  const Decomposition a = baseline_decompose(ps);
  const Decomposition b = decompose(ps);
  CHECK(verify_decomposition(a, ps).valid());
  CHECK(verify_decomposition(b, ps).valid());
  const OracleResult oracle = min_convex_decomposition(ps);
  Decomposition w = oracle.witness;
  w.acct.n = ps.size();
  CHECK(verify_decomposition(w, ps).valid());
}
