#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "latdiam/geometry.hpp"

namespace latdiam {

/// Shortest-path edge counts from one vertex of a polytope graph.
struct DistanceTable {
  std::size_t source = 0;
  std::vector<int> dist;
};

struct Diameter {
  int value = 0;
  Edge witness{0, 0};  ///< lexicographically smallest pair attaining the value
};

using Adjacency = std::vector<std::vector<std::size_t>>;

Adjacency adjacency_lists(const LatticePolytope& polytope);

/// Throws std::out_of_range for a bad source and std::runtime_error if the
/// graph is disconnected (which only an inconsistent polytope can be).
DistanceTable bfs_distances(const LatticePolytope& polytope, std::size_t source);
DistanceTable bfs_distances(const Adjacency& adj, std::size_t source);

/// Graph diameter by breadth-first search from every vertex. With `workers` > 1
/// the sources are split across threads; the result does not depend on it.
Diameter diameter(const LatticePolytope& polytope, unsigned workers = 1);

/// d(u,F): the least distance from `u` to a vertex of `face`.
int distance_to_face(const LatticePolytope& polytope, std::size_t u,
                     std::span<const std::size_t> face);

}  // namespace latdiam
