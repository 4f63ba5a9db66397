#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "latdiam/geometry.hpp"

namespace latdiam {

/// Integer vectors whose Minkowski sum of segments [0,v] forms a zonotope.
/// For the primitive sets built here every vector has content 1 and a
/// positive first non-zero coordinate.
struct GeneratorSet {
  int d = 0;
  std::vector<Point> vectors;

  bool operator==(const GeneratorSet&) const = default;
};

struct ZonotopeStats {
  Point extents;               ///< per coordinate, sum of |v_i| over the generators
  std::size_t direction_count; ///< number of pairwise non-parallel generators
};

/// Euler's totient. Throws std::invalid_argument for n == 0.
std::int64_t euler_phi(std::int64_t n);

/// True iff the first non-zero coordinate is positive.
bool is_positive(const Point& v);

/// All v in Z^d with |v|_1 <= p, content 1 and v positive, sorted ascending.
GeneratorSet primitive_generators(int d, int p);

Point coordinate_extents(const GeneratorSet& gens);
ZonotopeStats zonotope_stats(const GeneratorSet& gens);

/// Vertices of sum_i [0, g_i], translated so every coordinate minimum is 0,
/// as a lattice (d, max extent)-polytope. Candidate points come from all 2^m
/// subset sums. Throws BudgetExceeded when m > 20 and std::invalid_argument
/// when d > 6. Generator sets of deficient rank give lower-dimensional zonotopes.
LatticePolytope zonotope_vertices(const GeneratorSet& gens);

struct H1PlaneStats {
  std::int64_t k = 0;         ///< sum_{i<=p} i phi(i)
  std::int64_t diameter = 0;  ///< sum_{i<=p} 2 phi(i), the generator count
  double estimate = 0.0;      ///< 6 (k / 2 pi)^(2/3)
};

H1PlaneStats h1_2d_stats(int p);

struct SubsetSearchResult {
  GeneratorSet gens;
  int diameter = 0;          ///< BFS value when verified, otherwise the generator count
  bool bfs_verified = false; ///< false only when the subset is too large to enumerate
};

/// Depth-first search for `target` generators of H1(d,2) whose coordinate
/// extents all stay within k. Generators are tried by increasing 1-norm, then
/// in decreasing lexicographic order; the first subset whose zonotope passes
/// the BFS check is returned. Returns nullopt when the space is exhausted and
/// throws BudgetExceeded after `node_budget` search nodes.
/// Requires d <= 5 and k <= 2d - 1.
std::optional<SubsetSearchResult> subset_search(int d, int k, int target,
                                                std::uint64_t node_budget = 50'000'000);

}  // namespace latdiam
