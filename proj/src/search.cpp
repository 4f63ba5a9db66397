#include "latdiam/search.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <chrono>
#include <cstdio>
#include <map>
#include <mutex>
#include <numeric>
#include <set>
#include <stdexcept>
#include <tuple>

#include "latdiam/bounds.hpp"
#include "latdiam/graph.hpp"
#include "latdiam/zonotope.hpp"

namespace latdiam {

// ---------------------------------------------------------------------------
// Symmetry

std::vector<BoxSymmetry> box_symmetries(int d) {
  if (d < 1 || d > 6) throw std::invalid_argument("box_symmetries: need 1 <= d <= 6");
  std::vector<BoxSymmetry> out;
  std::vector<int> perm(d);
  for (int i = 0; i < d; ++i) perm[i] = i;
  do {
    for (unsigned mask = 0; mask < (1u << d); ++mask) {
      BoxSymmetry g{perm, std::vector<bool>(d)};
      for (int i = 0; i < d; ++i) g.flip[i] = (mask >> i) & 1u;
      out.push_back(std::move(g));
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

namespace {

const std::vector<BoxSymmetry>& cached_symmetries(int d) {
  static std::array<std::vector<BoxSymmetry>, 7> cache;
  static std::once_flag once;
  std::call_once(once, [] {
    for (int i = 1; i <= 6; ++i) cache[i] = box_symmetries(i);
  });
  if (d < 1 || d > 6) throw std::invalid_argument("symmetries: need 1 <= d <= 6");
  return cache[d];
}

// Image under g with reflections as negation, translated to non-negative minima.
std::vector<Point> normalized_image(const BoxSymmetry& g, std::span<const Point> pts, int d) {
  std::vector<Point> img;
  img.reserve(pts.size());
  Point lo(d, INT64_MAX);
  for (const auto& p : pts) {
    Point q(d);
    for (int i = 0; i < d; ++i) {
      q[i] = g.flip[i] ? -p[g.perm[i]] : p[g.perm[i]];
      lo[i] = std::min(lo[i], q[i]);
    }
    img.push_back(std::move(q));
  }
  for (auto& q : img)
    for (int i = 0; i < d; ++i) q[i] -= lo[i];
  std::sort(img.begin(), img.end());
  return img;
}

// Least image under the symmetries of [0,k]^d, no translation.
std::vector<Point> box_canonical(std::span<const Point> pts, int d, Int k) {
  std::vector<Point> best;
  for (const auto& g : cached_symmetries(d)) {
    auto img = apply(g, pts, k);
    std::sort(img.begin(), img.end());
    if (best.empty() || img < best) best = std::move(img);
  }
  return best;
}

}  // namespace

std::vector<Point> apply(const BoxSymmetry& g, std::span<const Point> points, Int k) {
  std::vector<Point> out;
  out.reserve(points.size());
  const int d = static_cast<int>(g.perm.size());
  for (const auto& p : points) {
    Point q(d);
    for (int i = 0; i < d; ++i) q[i] = g.flip[i] ? k - p[g.perm[i]] : p[g.perm[i]];
    out.push_back(std::move(q));
  }
  return out;
}

std::vector<Point> canonical_form(std::span<const Point> vertices, int d) {
  std::vector<Point> best;
  for (const auto& g : cached_symmetries(d)) {
    auto img = normalized_image(g, vertices, d);
    if (best.empty() || img < best) best = std::move(img);
  }
  return best;
}

std::vector<Point> canonical_form(const LatticePolytope& polytope) {
  return canonical_form(polytope.vertices, polytope.d);
}

std::string canonical_digest(std::span<const Point> canonical) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  auto mix = [&h](std::uint64_t x) {
    for (int b = 0; b < 8; ++b) {
      h ^= (x >> (8 * b)) & 0xffu;
      h *= 0x100000001b3ULL;
    }
  };
  mix(canonical.empty() ? 0 : canonical.front().size());
  mix(canonical.size());
  for (const auto& p : canonical)
    for (Int x : p) mix(static_cast<std::uint64_t>(x));
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

// ---------------------------------------------------------------------------
// Certificates

SearchCertificate make_certificate(LatticePolytope polytope) {
  const auto diam = diameter(polytope);
  const auto canon = canonical_form(polytope);
  SearchCertificate c{std::move(polytope), diam.value, diam.witness, canonical_digest(canon)};
  return c;
}

std::string verify_certificate(const SearchCertificate& cert) {
  const auto& P = cert.polytope;
  LatticePolytope fresh;
  try {
    fresh = relative_convex_hull(P.vertices, P.d, P.k);
  } catch (const std::exception& e) {
    return std::string("hull failed: ") + e.what();
  }
  if (fresh.vertices != P.vertices) return "listed points are not exactly the hull vertices";
  if (fresh.edges != P.edges) return "edge list differs from the recomputed 1-skeleton";
  if (auto why = validate(fresh); !why.empty()) return why;
  const auto diam = diameter(fresh);
  if (diam.value != cert.diameter) return "diameter mismatch";
  const auto t = bfs_distances(fresh, cert.witness.first);
  if (cert.witness.second >= t.dist.size() || t.dist[cert.witness.second] != cert.diameter)
    return "witness pair does not attain the diameter";
  if (canonical_digest(canonical_form(fresh)) != cert.canonical_digest) return "digest mismatch";
  return "";
}

// ---------------------------------------------------------------------------
// Planar enumeration

namespace {

using Clock = std::chrono::steady_clock;

class Deadline {
public:
  explicit Deadline(double seconds)
      : end_(seconds >= 1e8 ? Clock::time_point::max()
                            : Clock::now() + std::chrono::duration_cast<Clock::duration>(
                                                 std::chrono::duration<double>(seconds))) {}
  [[nodiscard]] bool passed() const { return end_ != Clock::time_point::max() && Clock::now() >= end_; }

private:
  Clock::time_point end_;
};

// Collects maximizers by canonical form as polygons stream past.
class PlaneMaximizers {
public:
  void offer(const std::vector<Point>& vertices, int k) {
    const int diam = static_cast<int>(vertices.size() / 2);
    if (diam < best_) return;
    if (diam > best_) {
      best_ = diam;
      found_.clear();
    }
    auto canon = canonical_form(vertices, 2);
    auto digest = canonical_digest(canon);
    if (found_.count(digest)) return;
    auto cert = make_certificate(convex_hull(canon, 2, k));
    if (cert.diameter != diam)
      throw std::logic_error("polygon diameter differs from half its vertex count");
    found_.emplace(std::move(digest), std::move(cert));
  }

  [[nodiscard]] int best() const { return best_; }

  MaxDiameter2d result(std::uint64_t examined) && {
    MaxDiameter2d out{best_, {}, examined};
    for (auto& [_, c] : found_) out.maximizers.push_back(std::move(c));
    return out;
  }

private:
  int best_ = 0;
  std::map<std::string, SearchCertificate> found_;
};

std::vector<Point> grid_points(int k) {
  std::vector<Point> grid;
  for (Int x = 0; x <= k; ++x)
    for (Int y = 0; y <= k; ++y) grid.push_back({x, y});
  return grid;
}

// Calls fn(vertices, polytope) for every grid subset in convex position.
template <class Fn>
std::uint64_t for_each_subset_polygon(int k, const Deadline& deadline, Fn&& fn) {
  const auto grid = grid_points(k);
  const std::uint32_t n = static_cast<std::uint32_t>(grid.size());
  std::uint64_t examined = 0;
  std::vector<Point> pts;
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    if ((mask & 0xfffu) == 0 && deadline.passed())
      throw BudgetExceeded("subset enumeration: time budget exhausted");
    if (std::popcount(mask) < 3) continue;
    pts.clear();
    for (std::uint32_t i = 0; i < n; ++i)
      if (mask >> i & 1u) pts.push_back(grid[i]);
    if (affine_dimension(pts) < 2) continue;
    auto poly = convex_hull(pts, 2, k);
    if (poly.vertices.size() != pts.size()) continue;
    ++examined;
    fn(pts, poly);
  }
  return examined;
}

MaxDiameter2d by_subsets(int k, double budget_seconds) {
  if (k < 1 || k > 3) throw std::invalid_argument("subset enumeration requires 1 <= k <= 3");
  Deadline deadline(budget_seconds);
  PlaneMaximizers best;
  const auto examined = for_each_subset_polygon(k, deadline, [&](const std::vector<Point>& pts,
                                                                 const LatticePolytope& poly) {
    if (static_cast<int>(pts.size() / 2) < best.best()) return;
    if (diameter(poly).value != static_cast<int>(pts.size() / 2))
      throw std::logic_error("polygon diameter differs from half its vertex count");
    best.offer(pts, k);
  });
  return std::move(best).result(examined);
}

// Convex lattice polygons up to translation are the angularly sorted sequences
// of edge vectors m*w (w primitive, directions distinct) summing to zero; the
// polygon fits in [0,k]^2 iff the positive x-parts and y-parts each sum to at most k.
class EdgeVectorEnumerator {
public:
  EdgeVectorEnumerator(int k, double budget_seconds) : k_(k), deadline_(budget_seconds) {
    for (Int x = -k; x <= k; ++x)
      for (Int y = -k; y <= k; ++y)
        if ((x != 0 || y != 0) && std::gcd(x < 0 ? -x : x, y < 0 ? -y : y) == 1) dirs_.push_back({x, y});
    auto half = [](const Point& v) { return (v[1] > 0 || (v[1] == 0 && v[0] > 0)) ? 0 : 1; };
    std::sort(dirs_.begin(), dirs_.end(), [&](const Point& a, const Point& b) {
      if (half(a) != half(b)) return half(a) < half(b);
      return a[0] * b[1] - a[1] * b[0] > 0;
    });
    const std::size_t n = dirs_.size();
    ypos_.assign(n + 1, 0);
    yneg_ = xpos_ = xneg_ = ypos_;
    for (std::size_t i = n; i-- > 0;) {
      ypos_[i] = ypos_[i + 1] || dirs_[i][1] > 0;
      yneg_[i] = yneg_[i + 1] || dirs_[i][1] < 0;
      xpos_[i] = xpos_[i + 1] || dirs_[i][0] > 0;
      xneg_[i] = xneg_[i + 1] || dirs_[i][0] < 0;
    }
  }

  MaxDiameter2d run() && {
    dfs(0);
    return std::move(best_).result(examined_);
  }

private:
  void dfs(std::size_t i) {
    if ((++nodes_ & 0xffffu) == 0 && deadline_.passed())
      throw BudgetExceeded("edge-vector enumeration: time budget exhausted");
    if (!ypos_[i] && py_ < ny_) return;
    if (!yneg_[i] && ny_ < py_) return;
    if (!xpos_[i] && px_ < nx_) return;
    if (!xneg_[i] && nx_ < px_) return;
    const Int slack = (k_ - px_) + (k_ - nx_) + (k_ - py_) + (k_ - ny_);
    const auto reachable = edges_.size() + std::min<std::size_t>(dirs_.size() - i, static_cast<std::size_t>(slack));
    if (reachable < 2 * static_cast<std::size_t>(best_.best())) return;
    if (i == dirs_.size()) {
      if (px_ == nx_ && py_ == ny_ && edges_.size() >= 3) emit();
      return;
    }
    const auto& w = dirs_[i];
    for (Int m = 1;; ++m) {
      const Int ax = m * w[0], ay = m * w[1];
      const Int npx = px_ + std::max<Int>(ax, 0), nnx = nx_ + std::max<Int>(-ax, 0);
      const Int npy = py_ + std::max<Int>(ay, 0), nny = ny_ + std::max<Int>(-ay, 0);
      if (npx > k_ || nnx > k_ || npy > k_ || nny > k_) break;
      const std::array<Int, 4> saved{px_, nx_, py_, ny_};
      px_ = npx;
      nx_ = nnx;
      py_ = npy;
      ny_ = nny;
      edges_.push_back({ax, ay});
      dfs(i + 1);
      edges_.pop_back();
      px_ = saved[0];
      nx_ = saved[1];
      py_ = saved[2];
      ny_ = saved[3];
    }
    dfs(i + 1);
  }

  void emit() {
    ++examined_;
    if (static_cast<int>(edges_.size() / 2) < best_.best()) return;
    std::vector<Point> verts;
    verts.reserve(edges_.size());
    Point cur{0, 0};
    Int lx = 0, ly = 0;
    for (const auto& e : edges_) {
      verts.push_back(cur);
      cur[0] += e[0];
      cur[1] += e[1];
      lx = std::min(lx, cur[0]);
      ly = std::min(ly, cur[1]);
    }
    for (auto& v : verts) {
      v[0] -= lx;
      v[1] -= ly;
    }
    std::sort(verts.begin(), verts.end());
    best_.offer(verts, k_);
  }

  Int k_;
  Deadline deadline_;
  std::vector<Point> dirs_;
  std::vector<char> ypos_, yneg_, xpos_, xneg_;
  std::vector<Point> edges_;
  Int px_ = 0, nx_ = 0, py_ = 0, ny_ = 0;
  std::uint64_t nodes_ = 0, examined_ = 0;
  PlaneMaximizers best_;
};

}  // namespace

MaxDiameter2d enumerate_max_diameter_2d(int k, PlaneStrategy strategy, double budget_seconds) {
  if (strategy == PlaneStrategy::Auto)
    strategy = k <= 3 ? PlaneStrategy::Subsets : PlaneStrategy::EdgeVectors;
  if (strategy == PlaneStrategy::Subsets) return by_subsets(k, budget_seconds);
  if (k < 1 || k > 6) throw std::invalid_argument("edge-vector enumeration requires 1 <= k <= 6");
  return EdgeVectorEnumerator(k, budget_seconds).run();
}

std::vector<std::vector<Point>> all_lattice_polygons(int k) {
  if (k < 1 || k > 3) throw std::invalid_argument("all_lattice_polygons requires 1 <= k <= 3");
  std::vector<std::vector<Point>> out;
  for_each_subset_polygon(k, Deadline(1e9),
                          [&](const std::vector<Point>& pts, const LatticePolytope&) { out.push_back(pts); });
  return out;
}

}  // namespace latdiam

// ---------------------------------------------------------------------------
// Pruned search

namespace latdiam {

std::string_view to_string(SearchStatus s) {
  switch (s) {
    case SearchStatus::CertificateFound: return "certificate_found";
    case SearchStatus::Exhausted: return "exhausted";
    case SearchStatus::BudgetExceeded: return "budget_exceeded";
  }
  return "unknown";
}

namespace {

struct SectionCatalog {
  std::vector<std::vector<Point>> placements;  ///< sorted vertex lists inside [0,k]^(d-1)
  bool complete = true;
};

// Every placement of a sorted vertex list under the box symmetries and translations.
void add_placements(const std::vector<Point>& verts, int dim, Int k, std::set<std::vector<Point>>& out) {
  for (const auto& g : cached_symmetries(dim)) {
    auto img = normalized_image(g, verts, dim);
    Point ext(dim, 0);
    for (const auto& p : img)
      for (int i = 0; i < dim; ++i) ext[i] = std::max(ext[i], p[i]);
    Point shift(dim, 0);
    for (;;) {
      std::vector<Point> moved = img;
      for (auto& p : moved)
        for (int i = 0; i < dim; ++i) p[i] += shift[i];
      out.insert(std::move(moved));
      int i = 0;
      while (i < dim && ++shift[i] > k - ext[i]) shift[i++] = 0;
      if (i == dim) break;
    }
  }
}

SectionCatalog section_catalog(int d, int k, const Deadline& deadline) {
  std::set<std::vector<Point>> all;
  SectionCatalog cat;
  if (d == 2) {
    for (Int a = 0; a <= k; ++a)
      for (Int b = a + 1; b <= k; ++b) all.insert(std::vector<Point>{Point{a}, Point{b}});
  } else if (d == 3) {
    const auto best = enumerate_max_diameter_2d(k);
    for (const auto& c : best.maximizers) add_placements(c.polytope.vertices, 2, k, all);
  } else {
    // (5,3): sections of diameter 8 = delta(4,3), drawn from zonotopes of H1(4,2) only.
    cat.complete = false;
    const auto h = primitive_generators(4, 2).vectors;
    const int n = static_cast<int>(h.size());
    std::vector<int> idx(8);
    for (int i = 0; i < 8; ++i) idx[i] = i;
    for (;;) {
      if (deadline.passed()) throw BudgetExceeded("section catalog: time budget exhausted");
      GeneratorSet gs{4, {}};
      for (int i : idx) gs.vectors.push_back(h[i]);
      const auto ext = coordinate_extents(gs);
      if (std::all_of(ext.begin(), ext.end(), [k](Int e) { return e <= k; })) {
        const auto z = zonotope_vertices(gs);
        if (diameter(z).value == 8) add_placements(z.vertices, 4, k, all);
      }
      int i = 7;
      while (i >= 0 && idx[i] == n - 8 + i) --i;
      if (i < 0) break;
      ++idx[i];
      for (int j = i + 1; j < 8; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  cat.placements.assign(all.begin(), all.end());
  return cat;
}

// Inserts coordinate `axis` with value `value` into each point.
std::vector<Point> lift(const std::vector<Point>& pts, int axis, Int value) {
  std::vector<Point> out;
  out.reserve(pts.size());
  for (const auto& p : pts) {
    Point q(p.begin(), p.begin() + axis);
    q.push_back(value);
    q.insert(q.end(), p.begin() + axis, p.end());
    out.push_back(std::move(q));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Point> on_hyperplane(const std::vector<Point>& pts, int axis, Int value) {
  std::vector<Point> out;
  for (const auto& p : pts)
    if (p[axis] == value) out.push_back(p);
  return out;
}

bool outside(const LatticePolytope& P, const Point& p) {
  return std::any_of(P.facets.begin(), P.facets.end(),
                     [&](const Facet& f) { return dot(f.normal, p) < f.offset; });
}

class FacetSearch {
public:
  FacetSearch(int d, int k, int target, bool necessary, bool neighbor_condition, SearchBudget budget,
              Deadline deadline, const std::unordered_set<std::string>* resume)
      : d_(d), k_(k), target_(target), necessary_(necessary), neighbor_condition_(neighbor_condition),
        budget_(budget), deadline_(deadline) {
    if (resume) seen_.insert(resume->begin(), resume->end());
  }

  std::optional<SearchCertificate> run(const SectionCatalog& cat) {
    catalog_ = &cat;
    for (std::size_t i = 0; i < cat.placements.size(); ++i)
      for (int c = 0; c < d_ - 1; ++c)
        for (const Int t : {Int{0}, static_cast<Int>(k_)})
          side_index_[{c, t, on_hyperplane(cat.placements[i], c, t)}].push_back(i);
    // Lower facets first, then the upper ones, x_0 = k last: every facet
    // after the first meets an earlier one in a ridge.
    for (int a = 0; a < d_; ++a) order_.push_back({a, 0});
    for (int a = 1; a < d_; ++a) order_.push_back({a, static_cast<Int>(k_)});
    order_.push_back({0, static_cast<Int>(k_)});
    chosen_.assign(2 * d_, {});
    facet_dfs(0);
    return std::move(found_);
  }

  [[nodiscard]] std::uint64_t nodes() const { return nodes_; }
  [[nodiscard]] std::vector<std::string> examined() const {
    std::vector<std::string> out(seen_.begin(), seen_.end());
    std::sort(out.begin(), out.end());
    return out;
  }

private:
  void tick() {
    ++nodes_;
    if (nodes_ > budget_.nodes) throw BudgetExceeded("pruned search: node budget exhausted");
    if ((nodes_ & 0xffu) == 0 && deadline_.passed()) throw BudgetExceeded("pruned search: time budget exhausted");
  }

  // A section for the facet at position f must agree with every earlier
  // section on their common ridge.
  bool consistent(std::size_t f, const std::vector<Point>& section) const {
    const auto [a, s] = order_[f];
    for (std::size_t g = 0; g < f; ++g) {
      const auto [b, t] = order_[g];
      if (b == a) continue;
      if (on_hyperplane(section, b, t) != on_hyperplane(chosen_[g], a, s)) return false;
    }
    return true;
  }

  void facet_dfs(std::size_t f) {
    if (found_) return;
    if (f == order_.size()) {
      assemble();
      return;
    }
    const auto [axis, value] = order_[f];
    // The ridge with an earlier facet fixes one side of the section, which
    // indexes the candidates.
    const std::vector<std::size_t>* indexed = nullptr;
    if (f >= 1) {
      const std::size_t g = axis == 0 ? 1 : 0;
      const auto [b, t] = order_[g];
      std::vector<Point> side;
      for (const auto& q : on_hyperplane(chosen_[g], axis, value)) {
        Point r = q;
        r.erase(r.begin() + axis);
        side.push_back(std::move(r));
      }
      const auto it = side_index_.find({b - (b > axis ? 1 : 0), t, side});
      if (it == side_index_.end()) return;
      indexed = &it->second;
    }
    const std::size_t count = indexed ? indexed->size() : catalog_->placements.size();
    for (std::size_t c = 0; c < count; ++c) {
      const auto& base = catalog_->placements[indexed ? (*indexed)[c] : c];
      if (found_) return;
      tick();
      if (f == 0 && base != box_canonical(base, d_ - 1, k_)) continue;
      auto section = lift(base, axis, value);
      if (!consistent(f, section)) continue;
      chosen_[f] = std::move(section);
      facet_dfs(f + 1);
    }
  }

  void assemble() {
    std::set<Point> boundary;
    for (const auto& s : chosen_) boundary.insert(s.begin(), s.end());
    std::vector<Point> pts(boundary.begin(), boundary.end());
    if (affine_dimension(pts) < d_) return;
    auto hull = convex_hull(pts, d_, k_);
    if (hull.vertices.size() != pts.size()) return;
    std::vector<Point> interior;
    Point p(d_, 1);
    if (k_ >= 2) {
      for (;;) {
        if (outside(hull, p)) interior.push_back(p);
        int i = 0;
        while (i < d_ && ++p[i] > k_ - 1) p[i++] = 1;
        if (i == d_) break;
      }
    }
    base_count_ = pts.size();
    interior_dfs(pts, hull, interior, 0);
  }

  void interior_dfs(std::vector<Point>& pts, const LatticePolytope& hull, const std::vector<Point>& cand,
                    std::size_t from) {
    if (found_) return;
    tick();
    evaluate(hull);
    for (std::size_t i = from; i < cand.size() && !found_; ++i) {
      if (!outside(hull, cand[i])) continue;
      pts.push_back(cand[i]);
      auto next = convex_hull(pts, d_, k_);
      const bool all_vertices =
          std::all_of(pts.begin() + static_cast<std::ptrdiff_t>(base_count_), pts.end(),
                      [&](const Point& q) { return next.index_of(q).has_value(); });
      if (all_vertices && next.vertices.size() == pts.size()) interior_dfs(pts, next, cand, i + 1);
      pts.pop_back();
    }
  }

  bool admissible_pair(const LatticePolytope& P, const Adjacency& adj, std::size_t u) const {
    for (std::size_t w : adj[u])
      for (int i = 0; i < d_; ++i)
        if (P.vertices[w][i] - P.vertices[u][i] > 1 || P.vertices[u][i] - P.vertices[w][i] > 1) return false;
    return true;
  }

  void evaluate(const LatticePolytope& P) {
    auto digest = canonical_digest(canonical_form(P));
    if (!seen_.insert(digest).second) return;
    const auto adj = adjacency_lists(P);
    if (necessary_) {
      for (std::size_t u = 0; u < P.vertices.size(); ++u) {
        Point opposite(d_);
        for (int i = 0; i < d_; ++i) opposite[i] = k_ - P.vertices[u][i];
        const auto v = P.index_of(opposite);
        if (!v || *v < u) continue;
        if (neighbor_condition_ && (!admissible_pair(P, adj, u) || !admissible_pair(P, adj, *v))) continue;
        if (bfs_distances(adj, u).dist[*v] >= target_) {
          found_ = make_certificate(P);
          return;
        }
      }
      return;
    }
    if (diameter(P).value >= target_) found_ = make_certificate(P);
  }

  int d_, k_, target_;
  bool necessary_;
  bool neighbor_condition_;
  SearchBudget budget_;
  Deadline deadline_;
  const SectionCatalog* catalog_ = nullptr;
  std::vector<std::vector<Point>> chosen_;
  std::vector<std::pair<int, Int>> order_;
  std::map<std::tuple<int, Int, std::vector<Point>>, std::vector<std::size_t>> side_index_;
  std::size_t base_count_ = 0;
  std::unordered_set<std::string> seen_;
  std::uint64_t nodes_ = 0;
  std::optional<SearchCertificate> found_;
};

std::vector<std::string> sorted(const std::unordered_set<std::string>* s) {
  if (!s) return {};
  std::vector<std::string> out(s->begin(), s->end());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

PruneOutcome pruned_search(int d, int k, int target, SearchBudget budget,
                           const std::unordered_set<std::string>* resume, PruneOptions options) {
  if (target < 1) throw std::invalid_argument("pruned_search: target must be at least 1");
  const bool supported = (d == 1 && k >= 1) || (d == 2 && k >= 1 && k <= 6) ||
                         (d == 3 && k >= 1 && k <= 6) || (d == 5 && k == 3);
  if (!supported) throw std::invalid_argument("pruned_search: unsupported (d,k)");
  PruneOutcome out;
  out.examined = sorted(resume);

  if (d == 1) {
    out.nodes = 1;
    if (target <= 1) {
      out.status = SearchStatus::CertificateFound;
      out.certificate = make_certificate(convex_hull(std::vector<Point>{{0}, {k}}, 1, k));
    } else {
      out.status = SearchStatus::Exhausted;
      out.refutes_target = true;
      out.assumptions.push_back("none: every lattice segment has diameter 1");
    }
    return out;
  }

  if (d == 2 && !options.sections_in_plane) {
    try {
      auto best = enumerate_max_diameter_2d(k, PlaneStrategy::Auto, budget.seconds);
      out.nodes = best.polygons_examined;
      if (best.value >= target) {
        out.status = SearchStatus::CertificateFound;
        out.certificate = std::move(best.maximizers.front());
      } else {
        out.status = SearchStatus::Exhausted;
        out.refutes_target = true;
        out.assumptions.push_back("none: exhaustive enumeration of lattice polygons");
      }
    } catch (const BudgetExceeded&) {
      out.status = SearchStatus::BudgetExceeded;
    }
    return out;
  }

  const Deadline deadline(budget.seconds);
  if (d >= 3 && options.constructive_first && k <= 2 * d - 1) {
    try {
      if (auto z = subset_search(d, k, target, std::min<std::uint64_t>(budget.nodes, 200'000))) {
        out.status = SearchStatus::CertificateFound;
        out.certificate = make_certificate(zonotope_vertices(z->gens));
        out.assumptions.push_back("constructive: zonotope of primitive generators with 1-norm at most 2");
        return out;
      }
    } catch (const BudgetExceeded&) {
      // the facet-section search below is independent of this stage
    }
  }

  const auto lower = delta_exact(d - 1, k);
  const bool necessary = lower && target >= lower->value + k;
  out.assumptions.push_back(
      "every cube-facet section is a lattice (d-1,k)-polytope of diameter delta(d-1,k)");
  out.assumptions.push_back("some diameter pair (u,v) has u_i + v_i = k for all i");
  if (options.neighbor_condition)
    out.assumptions.push_back("the neighbors of u and v differ from them by vectors in {-1,0,1}^d");
  if (!lower) {
    out.status = SearchStatus::Exhausted;
    out.assumptions.push_back("delta(d-1,k) is unknown, so no sections can be prescribed");
    return out;
  }
  if (!necessary)
    out.assumptions.push_back("target " + std::to_string(target) + " is below delta(d-1,k) + k = " +
                              std::to_string(lower->value + k) +
                              ", where these conditions are not necessary");
  // The neighbor condition is only known to hold for polytopes attaining the upper bound.
  const bool neighbor_necessary = !options.neighbor_condition || target >= upper_bound(d, k).value;
  if (!neighbor_necessary)
    out.assumptions.push_back("target " + std::to_string(target) + " is below the upper bound " +
                              std::to_string(upper_bound(d, k).value) +
                              ", where the neighbor condition is not known to be necessary");
  FacetSearch search(d, k, target, necessary, options.neighbor_condition, budget, deadline, resume);
  try {
    const auto cat = section_catalog(d, k, deadline);
    if (!cat.complete)
      out.assumptions.push_back("sections restricted to zonotopes of primitive generators with 1-norm at most 2");
    auto cert = search.run(cat);
    if (cert) {
      out.status = SearchStatus::CertificateFound;
      out.certificate = std::move(cert);
    } else {
      out.status = SearchStatus::Exhausted;
      out.refutes_target = necessary && cat.complete && neighbor_necessary;
    }
  } catch (const BudgetExceeded&) {
    out.status = SearchStatus::BudgetExceeded;
  }
  out.nodes = search.nodes();
  out.examined = search.examined();
  return out;
}

std::string describe(const PruneOutcome& o, int d, int k, int target) {
  const std::string what = "(" + std::to_string(d) + "," + std::to_string(k) + ") target " + std::to_string(target);
  switch (o.status) {
    case SearchStatus::CertificateFound:
      return what + ": certificate found, diameter " + std::to_string(o.certificate->diameter) + ", digest " +
             o.certificate->canonical_digest;
    case SearchStatus::BudgetExceeded:
      return what + ": budget exceeded after " + std::to_string(o.nodes) + " nodes";
    case SearchStatus::Exhausted:
      break;
  }
  if (o.refutes_target)
    return what + ": exhausted; no lattice polytope reaches the target";
  return what + ": exhausted under " + std::to_string(o.assumptions.size()) +
         " assumptions, which do not all hold for every polytope at this target; the target is not refuted";
}

}  // namespace latdiam
