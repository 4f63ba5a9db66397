#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <unordered_set>
#include <vector>

#include "latdiam/geometry.hpp"

namespace latdiam {

// ---------------------------------------------------------------------------
// Symmetry

/// Element of the symmetry group of [0,k]^d: coordinate i of the image is
/// coordinate perm[i] of the source, reflected to k - x where flip[i] is set.
struct BoxSymmetry {
  std::vector<int> perm;
  std::vector<bool> flip;
};

/// All 2^d d! elements, identity first.
std::vector<BoxSymmetry> box_symmetries(int d);

std::vector<Point> apply(const BoxSymmetry& g, std::span<const Point> points, Int k);

/// Lexicographically least sorted vertex list over all box symmetries,
/// each image translated so that every coordinate minimum is 0.
std::vector<Point> canonical_form(std::span<const Point> vertices, int d);
std::vector<Point> canonical_form(const LatticePolytope& polytope);

/// 64-bit FNV-1a hash of a canonical vertex list, as 16 lowercase hex digits.
std::string canonical_digest(std::span<const Point> canonical);

// ---------------------------------------------------------------------------
// Certificates

/// A polytope whose diameter claim can be re-checked from scratch.
struct SearchCertificate {
  LatticePolytope polytope;
  int diameter = 0;
  Edge witness{0, 0};
  std::string canonical_digest;
};

SearchCertificate make_certificate(LatticePolytope polytope);

/// Re-derives hull, box containment, BFS diameter, witness and digest.
/// Returns an empty string when the certificate holds.
std::string verify_certificate(const SearchCertificate& cert);

// ---------------------------------------------------------------------------
// Planar enumeration

enum class PlaneStrategy {
  Auto,         ///< Subsets for k <= 3, EdgeVectors for 4 <= k <= 6
  Subsets,      ///< every subset of the (k+1)^2 grid; k <= 3
  EdgeVectors,  ///< angularly sorted primitive edge-vector sequences; k <= 6
};

struct MaxDiameter2d {
  int value = 0;
  std::vector<SearchCertificate> maximizers;  ///< one per canonical form, digest order
  std::uint64_t polygons_examined = 0;
};

/// Largest diameter over lattice (2,k)-polygons, with all maximizers.
/// Throws std::invalid_argument outside the strategy's range and
/// BudgetExceeded when `budget_seconds` runs out.
MaxDiameter2d enumerate_max_diameter_2d(int k, PlaneStrategy strategy = PlaneStrategy::Auto,
                                        double budget_seconds = 1e9);

/// Vertex sets of every convex lattice polygon in [0,k]^2 (all placements), k <= 3.
std::vector<std::vector<Point>> all_lattice_polygons(int k);

// ---------------------------------------------------------------------------
// Pruned search

struct SearchBudget {
  double seconds = 60.0;
  std::uint64_t nodes = UINT64_MAX;
};

enum class SearchStatus { CertificateFound, Exhausted, BudgetExceeded };

std::string_view to_string(SearchStatus s);

struct PruneOutcome {
  SearchStatus status = SearchStatus::Exhausted;
  std::optional<SearchCertificate> certificate;
  /// Every restriction the enumeration relied on.
  std::vector<std::string> assumptions;
  /// Whether exhaustion proves that no lattice (d,k)-polytope reaches the
  /// target. False when some assumption is only a heuristic at this target.
  bool refutes_target = false;
  std::uint64_t nodes = 0;
  /// Digests of every fully examined candidate, in sorted order (resume data).
  std::vector<std::string> examined;
};

struct PruneOptions {
  /// Try zonotopes of H1(d,2) before the facet-section search (d >= 3).
  bool constructive_first = true;
  /// Decide d = 2 by the facet-section search (with segment sections)
  /// instead of exhaustive enumeration; used to cross-check the search.
  bool sections_in_plane = false;
  /// Require the neighbor differences at the witness pair to lie in {-1,0,1}^d.
  bool neighbor_condition = true;
};

/// Looks for a lattice (d,k)-polytope of diameter >= target.
///
/// d = 1, 2 are decided by exhaustive enumeration. For d = 3 (k <= 6) and
/// (d,k) = (5,3) the search first tries zonotopes of H1(d,2) generators, then
/// assembles candidates from an antipodal vertex pair and prescribed
/// cube-facet sections of diameter delta(d-1,k), adding interior points.
/// Those restrictions are necessary exactly when target >= delta(d-1,k) + k,
/// and the optional neighbor condition when target >= upper_bound(d,k);
/// otherwise exhaustion is reported without refuting the target.
/// Digests in `resume` are treated as already examined.
/// Throws std::invalid_argument for target < 1 or unsupported (d,k).
PruneOutcome pruned_search(int d, int k, int target, SearchBudget budget = {},
                           const std::unordered_set<std::string>* resume = nullptr,
                           PruneOptions options = {});

/// One-line human-readable result that keeps exhaustion-under-assumptions
/// distinct from a refutation.
std::string describe(const PruneOutcome& outcome, int d, int k, int target);

}  // namespace latdiam
