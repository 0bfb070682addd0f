// Minimal library walkthrough: build a point set, decompose it, verify the
// result, and print the cells.

#include <iostream>

#include "convexdecomp/convexdecomp.hpp"

int main() {
  using namespace convexdecomp;

  const PointSet points = PointSet::from_points(
      {{0, 0}, {4, 0}, {5, 3}, {2, 1}, {0, 4}});

  // radial structure: anchor, angular ranks, sign labels, blocks
  const RadialStructure rs = build_radial_structure(points);
  std::cout << "anchor index " << rs.anchor << ", k = " << rs.k << "\n";

  // full pipeline: strategy dispatch + greedy merging to a minimal result
  const Decomposition d = decompose(points);
  std::cout << d.cells.size() << " cells, strategy " << d.acct.branch << "\n";
  for (const Polygon& cell : d.cells) {
    for (int v : cell.v) std::cout << v << ' ';
    std::cout << "(area2 " << area2(cell, points) << ")\n";
  }

  // every claim is checkable after the fact
  const VerificationReport report = verify_decomposition(d, points);
  std::cout << report_lines(report);
  return report.all_pass() ? 0 : 1;
}
