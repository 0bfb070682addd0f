#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <unordered_set>
#include <vector>

#include "convexdecomp/geometry.hpp"
#include "convexdecomp/radial.hpp"

namespace convexdecomp {

namespace detail {

inline std::mt19937_64 seeded_rng(std::uint64_t seed, std::uint64_t a,
                                  std::uint64_t b) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed),
                    static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(a),
                    static_cast<std::uint32_t>(a >> 32),
                    static_cast<std::uint32_t>(b),
                    static_cast<std::uint32_t>(b >> 32)};
  return std::mt19937_64(seq);
}

inline Coord div_round(Wide num, Wide den) {
  // nearest integer, halves away from zero; den > 0
  if (num >= 0) return static_cast<Coord>((num + den / 2) / den);
  return -static_cast<Coord>((-num + den / 2) / den);
}

}  // namespace detail

// n integer points uniform in [0, range]^2, rejection-resampled until no
// duplicate and no collinear triple. Deterministic per (n, seed, range).
inline PointSet gen_random(int n, std::uint64_t seed, Coord range) {
  if (n < 3) throw Error("gen_random needs n >= 3");
  if (range < 2 || range > kCoordLimit) {
    throw Error("range must be in [2, " + std::to_string(kCoordLimit) + "]");
  }
  auto rng = detail::seeded_rng(seed, static_cast<std::uint64_t>(n),
                                static_cast<std::uint64_t>(range));
  std::vector<Point> pts;
  pts.reserve(static_cast<size_t>(n));
  std::unordered_set<std::uint64_t> used;
  const std::uint64_t span = static_cast<std::uint64_t>(range) + 1;
  long long attempts_left = 2000LL * n + 10000;
  while (static_cast<int>(pts.size()) < n) {
    if (--attempts_left < 0) {
      throw Error("gen_random resample limit exceeded (range too small?)");
    }
    const Point cand{static_cast<Coord>(rng() % span),
                     static_cast<Coord>(rng() % span)};
    const std::uint64_t key =
        (static_cast<std::uint64_t>(cand.x) << 32) ^
        static_cast<std::uint64_t>(cand.y);
    if (used.count(key)) continue;
    bool ok = true;
    for (size_t i = 0; i < pts.size() && ok; ++i) {
      for (size_t j = i + 1; j < pts.size() && ok; ++j) {
        if (orient(pts[i], pts[j], cand) == 0) ok = false;
      }
    }
    if (!ok) continue;
    used.insert(key);
    pts.push_back(cand);
  }
  return PointSet::from_points_unchecked(std::move(pts));
}

// Alternating-sign set: points on a fan of rational-direction rays from the
// origin anchor, odd ranks pulled to half the radius of even ranks, then
// seeded jitter until the exact sign pattern and general position both hold.
inline PointSet gen_pm_set(int n, std::uint64_t seed) {
  if (n < 5) throw Error("gen_pm_set needs n >= 5");
  constexpr Coord kOuter = 8'000'000;
  constexpr Coord kInner = 4'000'000;
  for (int attempt = 0; attempt < 64; ++attempt) {
    auto rng = detail::seeded_rng(seed, static_cast<std::uint64_t>(n),
                                  static_cast<std::uint64_t>(attempt) + 1);
    std::vector<Point> pts;
    pts.push_back(Point{0, 0});
    for (int rank = 2; rank <= n; ++rank) {
      // tan(theta/2) = t/(n-t) sweeps the angle monotonically across (0, pi)
      const Wide p = rank - 1;
      const Wide q = n - (rank - 1);
      const Coord base =
          (rank == 2 || rank == n || rank % 2 == 0) ? kOuter : kInner;
      const Coord r = base + static_cast<Coord>(rng() % 40001) - 20000;
      const Wide norm = p * p + q * q;
      pts.push_back(Point{detail::div_round(r * (q * q - p * p), norm),
                          detail::div_round(r * 2 * p * q, norm)});
    }
    // deterministic Fisher-Yates so point indices are decoupled from ranks
    for (size_t i = pts.size() - 1; i > 0; --i) {
      std::swap(pts[i], pts[rng() % (i + 1)]);
    }
    try {
      PointSet ps = PointSet::from_points(std::move(pts));
      if (is_pm_set(build_radial_structure(ps))) return ps;
    } catch (const Error&) {
      // collinear or duplicate after rounding; jitter again
    }
  }
  throw Error("gen_pm_set: no valid alternating set after 64 attempts for n=" +
              std::to_string(n) + " seed=" + std::to_string(seed));
}

}  // namespace convexdecomp
