#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "latdiam/arith.hpp"

namespace latdiam {

/// Supporting inequality `normal . x >= offset`, tight on the facet.
/// The normal points inward and has content 1.
struct Facet {
  Point normal;
  Int offset = 0;

  auto operator<=>(const Facet&) const = default;
};

/// Unordered vertex pair, stored with first < second.
using Edge = std::pair<std::size_t, std::size_t>;

/// Vertices (lexicographically sorted), facets and 1-skeleton of a lattice
/// polytope contained in [0,k]^d.
///
/// Lower-dimensional polytopes are only produced by `relative_convex_hull`;
/// their facets are the relative facets, lifted with zero coefficients on the
/// coordinates dropped by the projection.
struct LatticePolytope {
  int d = 0;
  Int k = 0;
  int affine_dim = 0;
  std::vector<Point> vertices;
  std::vector<Facet> facets;
  std::vector<Edge> edges;

  [[nodiscard]] std::size_t num_vertices() const noexcept { return vertices.size(); }
  /// Index of `p` in the vertex list, if it is a vertex.
  [[nodiscard]] std::optional<std::size_t> index_of(std::span<const Int> p) const;
};

/// Affine dimension of a point set (-1 for the empty set).
int affine_dimension(std::span<const Point> points);

/// Convex hull of full-dimensional input.
///
/// Duplicates are ignored; points that are not extreme are dropped. `k`
/// defaults to the largest coordinate. Throws DimensionMismatch,
/// DegenerateInput (carrying the affine dimension), OverflowError, and
/// std::invalid_argument for empty input or points outside [0,k]^d.
LatticePolytope convex_hull(std::span<const Point> points, int d,
                            std::optional<Int> k = std::nullopt);

/// Like convex_hull, but accepts input of any affine dimension and computes the
/// hull inside its affine span.
LatticePolytope relative_convex_hull(std::span<const Point> points, int d,
                                     std::optional<Int> k = std::nullopt);

/// The 1-skeleton from vertex-facet incidences: (u,v) is an edge iff the
/// normals of the facets containing both have rank affine_dim - 1.
/// Throws std::invalid_argument if the facets are missing or some vertex
/// violates one of them.
std::vector<Edge> vertex_adjacency(const LatticePolytope& polytope);

struct MinFace {
  Int gamma = 0;
  std::vector<std::size_t> face;  ///< vertex indices with c.x == gamma, ascending
};

/// Minimum of the functional `c` over the polytope and the vertices attaining it.
MinFace min_face(const LatticePolytope& polytope, std::span<const Int> c);

/// Indices of the facets tight at each vertex.
std::vector<std::vector<std::size_t>> vertex_facet_incidence(const LatticePolytope& polytope);

/// Checks the polytope against its invariants: box containment, sorted
/// vertices, facet validity and content, extremality through the facet ranks.
/// Returns an empty string when valid, otherwise a description of the problem.
std::string validate(const LatticePolytope& polytope);

/// Generalized cross product: the vector orthogonal to n-1 rows of length n,
/// whose entries are signed maximal minors.
Point orthogonal_complement(const std::vector<Point>& rows);

/// Exact determinant of a square integer matrix.
Int determinant(std::vector<std::vector<Int>> m);

}  // namespace latdiam
