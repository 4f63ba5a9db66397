#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "latdiam/geometry.hpp"
#include "latdiam/rng.hpp"

namespace latdiam {

enum class CheckStatus { Holds, Violated, NotApplicable };

/// "holds", "violated", "not_applicable".
std::string_view to_string(CheckStatus s);

/// Outcome of one inequality check. Both sides are reported even when the
/// check is not applicable (then they may be 0).
struct CheckReport {
  std::string lemma;
  std::string instance_digest;
  long long lhs = 0;
  long long rhs = 0;
  CheckStatus status = CheckStatus::NotApplicable;
  std::string note;
  /// The strict form of the inequality was required (pair bound only).
  bool strict = false;
  /// Per-clause outcome of the inductive step, (i) to (iii).
  std::vector<bool> clauses;
};

nlohmann::ordered_json to_json(const CheckReport& r);

/// Coordinates (0-based) and optional claimed bounds l_i <= x_i <= h_i.
struct IndexSet {
  std::vector<int> indices;
  std::vector<std::pair<Int, Int>> bounds;  ///< empty, or one pair per index
};

/// Exact delta(d,k) where known, with delta(0,k) = 0.
std::optional<long long> known_delta(int d, int k);

/// d(u,F) <= c.u - gamma, where gamma = min c.x over P and F the minimizing face.
/// Throws std::invalid_argument for c = 0 or a wrong length, std::out_of_range for a bad u.
CheckReport check_facet_distance(const LatticePolytope& P, std::size_t u, std::span<const Int> c);

/// delta(P) <= delta(d-|I|,k) + sum over I of (h_i - l_i), with l, h recomputed
/// from P. Throws std::invalid_argument for repeated or out-of-range indices
/// and for claimed bounds that differ from the recomputed ones.
CheckReport check_box_restriction(const LatticePolytope& P, const IndexSet& I);

/// d(u,v) <= delta(d-|I|,k) + sum over I of (u_i + v_i), strict when
/// 1 <= |I| <= 2 and the sum over I of x_i is positive on all of P.
/// Throws std::invalid_argument when |I| > 3 or u_i + v_i > k for some i in I.
CheckReport check_pair_bound(const LatticePolytope& P, std::size_t u, std::size_t v, const IndexSet& I);

/// The coordinate-sum drop along a cyclically labeled lattice polygon
/// u^0..u^p with u^p = (0,0) and u^0 - u^1 in {(1,0),(0,1),(1,1)}.
/// Unmet preconditions give NotApplicable; p <= 2 holds vacuously.
CheckReport check_polygon_path(std::span<const Point> path);

/// One of the three inductive-step inequalities for d >= 3, k >= 3.
CheckReport check_inductive_step(const LatticePolytope& P, std::size_t u, std::size_t v);

/// Hull of 4..12 uniform points of {0..k}^d, redrawn until full-dimensional.
LatticePolytope random_polytope(Rng& rng, int d, Int k);

struct SuiteSummary {
  std::string suite;
  std::uint64_t seed = 0;
  std::size_t holds = 0;
  std::size_t violated = 0;
  std::size_t not_applicable = 0;
  std::size_t strict_required = 0;  ///< reports where the strict form applied
  std::vector<CheckReport> reports;  ///< in instance order
};

nlohmann::ordered_json to_json(const SuiteSummary& s);

/// Names accepted by run_suite.
const std::vector<std::string>& suite_names();

/// Runs n seeded random instances of one checker ("lemma1", "lemma2",
/// "lemma3", "lemma4", "step"). Instance i draws from its own generator
/// seeded by mixing `seed` and i, so the result does not depend on `workers`.
/// Throws std::invalid_argument for an unknown suite.
SuiteSummary run_suite(std::string_view suite, std::size_t n, std::uint64_t seed, unsigned workers = 1);

}  // namespace latdiam
