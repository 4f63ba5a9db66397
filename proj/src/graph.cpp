#include "latdiam/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <thread>

namespace latdiam {

Adjacency adjacency_lists(const LatticePolytope& polytope) {
  Adjacency adj(polytope.vertices.size());
  for (const auto& [u, v] : polytope.edges) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  for (auto& row : adj) std::sort(row.begin(), row.end());
  return adj;
}

DistanceTable bfs_distances(const Adjacency& adj, std::size_t source) {
  if (source >= adj.size()) throw std::out_of_range("bfs_distances: source out of range");
  DistanceTable t{source, std::vector<int>(adj.size(), -1)};
  std::vector<std::size_t> queue{source};
  queue.reserve(adj.size());
  t.dist[source] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const auto u = queue[head];
    for (auto v : adj[u])
      if (t.dist[v] < 0) {
        t.dist[v] = t.dist[u] + 1;
        queue.push_back(v);
      }
  }
  if (queue.size() != adj.size())
    throw std::runtime_error("bfs_distances: polytope graph is disconnected");
  return t;
}

DistanceTable bfs_distances(const LatticePolytope& polytope, std::size_t source) {
  return bfs_distances(adjacency_lists(polytope), source);
}

namespace {

// Best pair over sources in [begin, end), scanning targets above the source.
Diameter diameter_range(const Adjacency& adj, std::size_t begin, std::size_t end) {
  Diameter best;
  best.value = -1;
  for (std::size_t s = begin; s < end; ++s) {
    const auto t = bfs_distances(adj, s);
    for (std::size_t v = s + 1; v < adj.size(); ++v)
      if (t.dist[v] > best.value) best = {t.dist[v], {s, v}};
  }
  return best;
}

}  // namespace

Diameter diameter(const LatticePolytope& polytope, unsigned workers) {
  const auto adj = adjacency_lists(polytope);
  const std::size_t n = adj.size();
  if (n == 0) throw std::invalid_argument("diameter: polytope without vertices");
  if (n == 1) return {};
  workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(n)));
  if (workers == 1) return diameter_range(adj, 0, n);

  std::vector<Diameter> partial(workers);
  std::vector<std::thread> threads;
  const std::size_t chunk = (n + workers - 1) / workers;
  for (unsigned w = 0; w < workers; ++w)
    threads.emplace_back([&, w] {
      const std::size_t b = std::min(n, w * chunk), e = std::min(n, b + chunk);
      partial[w] = b < e ? diameter_range(adj, b, e) : Diameter{-1, {0, 0}};
    });
  for (auto& t : threads) t.join();
  // Chunks are ordered by source, so the first strict maximum is the lexicographic one.
  Diameter best{-1, {0, 0}};
  for (const auto& p : partial)
    if (p.value > best.value) best = p;
  return best;
}

int distance_to_face(const LatticePolytope& polytope, std::size_t u,
                     std::span<const std::size_t> face) {
  if (face.empty()) throw std::invalid_argument("distance_to_face: empty face");
  const auto t = bfs_distances(polytope, u);
  int best = t.dist.at(face.front());
  for (auto v : face) best = std::min(best, t.dist.at(v));
  return best;
}

}  // namespace latdiam
