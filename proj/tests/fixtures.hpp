#pragma once

#include <vector>

#include "latdiam/geometry.hpp"
#include "latdiam/rng.hpp"

namespace fixture {

using latdiam::Int;
using latdiam::LatticePolytope;
using latdiam::Point;

inline std::vector<Point> cube_corners(int d, Int k) {
  std::vector<Point> out;
  for (unsigned m = 0; m < (1u << d); ++m) {
    Point p(d);
    for (int i = 0; i < d; ++i) p[i] = (m >> i & 1u) ? k : 0;
    out.push_back(p);
  }
  return out;
}

inline LatticePolytope cube(int d, Int k) { return latdiam::convex_hull(cube_corners(d, k), d, k); }

inline std::vector<Point> octagon_points() {
  return {{1, 0}, {2, 0}, {3, 1}, {3, 2}, {2, 3}, {1, 3}, {0, 2}, {0, 1}};
}

inline LatticePolytope octagon() { return latdiam::convex_hull(octagon_points(), 2, 3); }

inline std::vector<Point> random_points(latdiam::Rng& rng, std::size_t n, int d, Int k) {
  std::vector<Point> pts(n, Point(d));
  for (auto& p : pts)
    for (auto& x : p) x = rng.uniform(0, k);
  return pts;
}

}  // namespace fixture
