#include "latdiam/lemmas.hpp"

#include <algorithm>
#include <cstdio>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "latdiam/bounds.hpp"
#include "latdiam/graph.hpp"

namespace latdiam {

std::string_view to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Holds: return "holds";
    case CheckStatus::Violated: return "violated";
    case CheckStatus::NotApplicable: return "not_applicable";
  }
  return "unknown";
}

nlohmann::ordered_json to_json(const CheckReport& r) {
  nlohmann::ordered_json j;
  j["lemma"] = r.lemma;
  j["instance_digest"] = r.instance_digest;
  j["lhs"] = r.lhs;
  j["rhs"] = r.rhs;
  j["status"] = to_string(r.status);
  return j;
}

std::optional<long long> known_delta(int d, int k) {
  if (d == 0) return 0;
  if (auto b = delta_exact(d, k)) return b->value;
  return std::nullopt;
}

namespace {

std::string fnv_hex(const std::string& s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

void write_points(std::ostringstream& os, std::span<const Point> pts) {
  for (const auto& p : pts) {
    os << '(';
    for (std::size_t i = 0; i < p.size(); ++i) os << (i ? "," : "") << p[i];
    os << ')';
  }
}

std::string digest_of(std::string_view lemma, const LatticePolytope& P, const std::string& args) {
  std::ostringstream os;
  os << lemma << '|' << P.d << ' ' << P.k << '|';
  write_points(os, P.vertices);
  os << '|' << args;
  return fnv_hex(os.str());
}

std::string join(std::span<const Int> v) {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  return os.str();
}

std::string join(const std::vector<int>& v) {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  return os.str();
}

void check_vertex(const LatticePolytope& P, std::size_t u) {
  if (u >= P.vertices.size()) throw std::out_of_range("vertex index out of range");
}

void check_indices(const LatticePolytope& P, const IndexSet& I) {
  std::set<int> seen;
  for (int i : I.indices) {
    if (i < 0 || i >= P.d) throw std::invalid_argument("index " + std::to_string(i) + " outside the dimension");
    if (!seen.insert(i).second) throw std::invalid_argument("index " + std::to_string(i) + " repeated");
  }
  if (!I.bounds.empty() && I.bounds.size() != I.indices.size())
    throw std::invalid_argument("index bounds must match the indices one to one");
}

void decide(CheckReport& r) {
  r.status = (r.strict ? r.lhs < r.rhs : r.lhs <= r.rhs) ? CheckStatus::Holds : CheckStatus::Violated;
}

}  // namespace

CheckReport check_facet_distance(const LatticePolytope& P, std::size_t u, std::span<const Int> c) {
  check_vertex(P, u);
  if (static_cast<int>(c.size()) != P.d) throw std::invalid_argument("functional length differs from the dimension");
  const auto mf = min_face(P, c);
  CheckReport r;
  r.lemma = "lemma1";
  r.instance_digest = digest_of(r.lemma, P, std::to_string(u) + "|" + join(c));
  r.lhs = distance_to_face(P, u, mf.face);
  r.rhs = checked_sub(dot(c, P.vertices[u]), mf.gamma);
  decide(r);
  return r;
}

CheckReport check_box_restriction(const LatticePolytope& P, const IndexSet& I) {
  check_indices(P, I);
  CheckReport r;
  r.lemma = "lemma2";
  r.instance_digest = digest_of(r.lemma, P, join(I.indices));
  long long spread = 0;
  for (std::size_t t = 0; t < I.indices.size(); ++t) {
    const int i = I.indices[t];
    Int lo = P.vertices.front()[i], hi = lo;
    for (const auto& x : P.vertices) {
      lo = std::min(lo, x[i]);
      hi = std::max(hi, x[i]);
    }
    if (!I.bounds.empty() && I.bounds[t] != std::pair<Int, Int>{lo, hi})
      throw std::invalid_argument("claimed bounds for coordinate " + std::to_string(i) +
                                  " differ from the polytope's (" + std::to_string(lo) + "," +
                                  std::to_string(hi) + ")");
    spread += hi - lo;
  }
  r.lhs = diameter(P).value;
  const auto delta = known_delta(P.d - static_cast<int>(I.indices.size()), static_cast<int>(P.k));
  if (!delta) {
    r.note = "delta(d-|I|,k) unknown";
    return r;
  }
  r.rhs = *delta + spread;
  decide(r);
  return r;
}

CheckReport check_pair_bound(const LatticePolytope& P, std::size_t u, std::size_t v, const IndexSet& I) {
  check_vertex(P, u);
  check_vertex(P, v);
  check_indices(P, I);
  if (I.indices.size() > 3) throw std::invalid_argument("the pair bound allows at most 3 indices");
  const auto& pu = P.vertices[u];
  const auto& pv = P.vertices[v];
  long long sum = 0;
  for (int i : I.indices) {
    if (pu[i] + pv[i] > P.k)
      throw std::invalid_argument("u_i + v_i exceeds k at coordinate " + std::to_string(i));
    sum += pu[i] + pv[i];
  }
  CheckReport r;
  r.lemma = "lemma3";
  r.instance_digest = digest_of(r.lemma, P, std::to_string(u) + "," + std::to_string(v) + "|" + join(I.indices));
  r.lhs = bfs_distances(P, u).dist[v];
  const auto delta = known_delta(P.d - static_cast<int>(I.indices.size()), static_cast<int>(P.k));
  if (!delta) {
    r.note = "delta(d-|I|,k) unknown";
    return r;
  }
  r.rhs = *delta + sum;
  if (!I.indices.empty() && I.indices.size() <= 2) {
    r.strict = std::all_of(P.vertices.begin(), P.vertices.end(), [&](const Point& x) {
      Int s = 0;
      for (int i : I.indices) s += x[i];
      return s > 0;
    });
    if (r.strict) r.note = "strict";
  }
  decide(r);
  return r;
}

CheckReport check_polygon_path(std::span<const Point> path) {
  CheckReport r;
  r.lemma = "lemma4";
  {
    std::ostringstream os;
    write_points(os, path);
    r.instance_digest = fnv_hex("lemma4|" + os.str());
  }
  const std::size_t n = path.size();
  auto na = [&r](const char* why) {
    r.status = CheckStatus::NotApplicable;
    r.note = why;
    return r;
  };
  if (n < 3) return na("fewer than three vertices");
  for (const auto& x : path) {
    if (x.size() != 2) return na("not a planar path");
    if (x[0] < 0 || x[1] < 0) return na("negative coordinate");
  }
  if (path.back() != Point{0, 0}) return na("last vertex is not the origin");
  const Point diff{path[0][0] - path[1][0], path[0][1] - path[1][1]};
  if (diff != Point{1, 0} && diff != Point{0, 1} && diff != Point{1, 1}) return na("u0 - u1 not in {(1,0),(0,1),(1,1)}");
  int sign = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const auto& a = path[i];
    const auto& b = path[(i + 1) % n];
    const auto& c = path[(i + 2) % n];
    const Int cross = (b[0] - a[0]) * (c[1] - b[1]) - (b[1] - a[1]) * (c[0] - b[0]);
    const int s = (cross > 0) - (cross < 0);
    if (s == 0 || (sign != 0 && s != sign)) return na("not in strictly convex cyclic order");
    sign = s;
  }
  const std::size_t p = n - 1;
  if (p <= 2) {
    r.status = CheckStatus::Holds;
    r.note = "vacuous";
    return r;
  }
  bool first = true;
  for (std::size_t j = 2; j < p; ++j) {
    const long long lhs = path[j][0] + path[j][1] + 2;
    const long long rhs = path[j - 1][0] + path[j - 1][1];
    if (first || lhs - rhs > r.lhs - r.rhs) {
      r.lhs = lhs;
      r.rhs = rhs;
      r.note = "j=" + std::to_string(j);
      first = false;
    }
  }
  decide(r);
  return r;
}

CheckReport check_inductive_step(const LatticePolytope& P, std::size_t u, std::size_t v) {
  check_vertex(P, u);
  check_vertex(P, v);
  CheckReport r;
  r.lemma = "step";
  r.instance_digest = digest_of(r.lemma, P, std::to_string(u) + "," + std::to_string(v));
  r.lhs = bfs_distances(P, u).dist[v];
  if (P.d < 3 || P.k < 3) {
    r.note = "requires d >= 3 and k >= 3";
    return r;
  }
  const int k = static_cast<int>(P.k);
  const auto d1 = known_delta(P.d - 1, k), d2 = known_delta(P.d - 2, k), d3 = known_delta(P.d - 3, k);
  if (!d1 || !d2 || !d3) {
    r.note = "delta(d-1,k), delta(d-2,k) or delta(d-3,k) unknown";
    return r;
  }
  const long long rhs[3] = {*d1 + k - 1, *d2 + 2 * k - 2, *d3 + 3 * k - 2};
  r.rhs = *std::max_element(rhs, rhs + 3);
  for (long long b : rhs) r.clauses.push_back(r.lhs <= b);
  r.status = std::any_of(r.clauses.begin(), r.clauses.end(), [](bool b) { return b; }) ? CheckStatus::Holds
                                                                                        : CheckStatus::Violated;
  return r;
}

LatticePolytope random_polytope(Rng& rng, int d, Int k) {
  if (d < 1 || k < 1) throw std::invalid_argument("random_polytope: need d >= 1 and k >= 1");
  for (;;) {
    const auto n = static_cast<std::size_t>(rng.uniform(4, 12));
    std::vector<Point> pts(n, Point(d));
    for (auto& p : pts)
      for (auto& x : p) x = rng.uniform(0, k);
    if (affine_dimension(pts) == d) return convex_hull(pts, d, k);
  }
}

nlohmann::ordered_json to_json(const SuiteSummary& s) {
  nlohmann::ordered_json j;
  j["suite"] = s.suite;
  j["seed"] = s.seed;
  j["instances"] = s.reports.size();
  j["holds"] = s.holds;
  j["violated"] = s.violated;
  j["not_applicable"] = s.not_applicable;
  j["strict_required"] = s.strict_required;
  auto arr = nlohmann::ordered_json::array();
  for (const auto& r : s.reports) arr.push_back(to_json(r));
  j["reports"] = std::move(arr);
  return j;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"lemma1", "lemma2", "lemma3", "lemma4", "step"};
  return names;
}

namespace {

// Vertices of a polygon in cyclic order along its edges, starting at vertex 0.
std::vector<std::size_t> cyclic_order(const LatticePolytope& P) {
  std::vector<std::vector<std::size_t>> adj(P.vertices.size());
  for (auto [a, b] : P.edges) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  std::vector<std::size_t> order{0};
  std::size_t prev = 0, cur = adj[0].front();
  while (cur != 0) {
    order.push_back(cur);
    const std::size_t next = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
    prev = cur;
    cur = next;
  }
  return order;
}

std::vector<int> random_subset(Rng& rng, const std::vector<int>& from, std::size_t max_size) {
  std::vector<int> pool = from, out;
  const auto size = std::min<std::size_t>(max_size, static_cast<std::size_t>(rng.below(pool.size() + 1)));
  while (out.size() < size) {
    const auto t = rng.below(pool.size());
    out.push_back(pool[t]);
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(t));
  }
  std::sort(out.begin(), out.end());
  return out;
}

CheckReport lemma1_instance(Rng& rng) {
  const int d = static_cast<int>(rng.uniform(2, 3));
  const auto P = random_polytope(rng, d, rng.uniform(1, 3));
  const auto u = static_cast<std::size_t>(rng.below(P.vertices.size()));
  Point c(d, 0);
  while (std::all_of(c.begin(), c.end(), [](Int x) { return x == 0; }))
    for (auto& x : c) x = rng.uniform(-3, 3);
  return check_facet_distance(P, u, c);
}

CheckReport lemma2_instance(Rng& rng) {
  const int d = static_cast<int>(rng.uniform(2, 3));
  const auto P = random_polytope(rng, d, rng.uniform(1, 3));
  std::vector<int> all(d);
  for (int i = 0; i < d; ++i) all[i] = i;
  return check_box_restriction(P, {random_subset(rng, all, 3), {}});
}

CheckReport lemma3_instance(Rng& rng) {
  const int d = static_cast<int>(rng.uniform(2, 3));
  const auto P = random_polytope(rng, d, rng.uniform(1, 3));
  const auto u = static_cast<std::size_t>(rng.below(P.vertices.size()));
  const auto v = static_cast<std::size_t>(rng.below(P.vertices.size()));
  std::vector<int> allowed;
  for (int i = 0; i < d; ++i)
    if (P.vertices[u][i] + P.vertices[v][i] <= P.k) allowed.push_back(i);
  return check_pair_bound(P, u, v, {random_subset(rng, allowed, 3), {}});
}

// A polygon containing the origin, a and a - delta, with the other points in
// the rectangle [0,a1] x [0,a2], labeled from a towards a - delta.
CheckReport lemma4_instance(Rng& rng) {
  static const Point deltas[3] = {{1, 0}, {0, 1}, {1, 1}};
  const Int k = rng.uniform(2, 6);
  const Point& delta = deltas[rng.below(3)];
  Point a{rng.uniform(delta[0], k), rng.uniform(delta[1], k)};
  std::vector<Point> pts{{0, 0}, a, {a[0] - delta[0], a[1] - delta[1]}};
  const auto extra = rng.below(6);
  for (std::uint64_t i = 0; i < extra; ++i) pts.push_back({rng.uniform(0, a[0]), rng.uniform(0, a[1])});
  if (affine_dimension(pts) < 2) return check_polygon_path(pts);
  const auto P = convex_hull(pts, 2, k);
  const auto order = cyclic_order(P);
  const auto ia = P.index_of(a);
  if (!ia) return check_polygon_path(pts);
  const auto n = order.size();
  const auto pos = static_cast<std::size_t>(std::find(order.begin(), order.end(), *ia) - order.begin());
  std::vector<Point> forward, backward;
  for (std::size_t t = 0; t < n; ++t) {
    forward.push_back(P.vertices[order[(pos + t) % n]]);
    backward.push_back(P.vertices[order[(pos + n - t) % n]]);
  }
  auto r = check_polygon_path(forward);
  if (r.status != CheckStatus::NotApplicable) return r;
  return check_polygon_path(backward);
}

CheckReport step_instance(Rng& rng) {
  const int d = static_cast<int>(rng.uniform(3, 4));
  const auto P = random_polytope(rng, d, 3);
  const auto u = static_cast<std::size_t>(rng.below(P.vertices.size()));
  const auto v = static_cast<std::size_t>(rng.below(P.vertices.size()));
  return check_inductive_step(P, u, v);
}

}  // namespace

SuiteSummary run_suite(std::string_view suite, std::size_t n, std::uint64_t seed, unsigned workers) {
  CheckReport (*instance)(Rng&) = nullptr;
  if (suite == "lemma1") instance = lemma1_instance;
  else if (suite == "lemma2") instance = lemma2_instance;
  else if (suite == "lemma3") instance = lemma3_instance;
  else if (suite == "lemma4") instance = lemma4_instance;
  else if (suite == "step") instance = step_instance;
  else throw std::invalid_argument("unknown suite '" + std::string(suite) + "'");

  SuiteSummary s;
  s.suite = suite;
  s.seed = seed;
  s.reports.resize(n);
  auto work = [&](std::size_t lo, std::size_t hi) {
    for (std::size_t i = lo; i < hi; ++i) {
      Rng rng(splitmix64(seed ^ splitmix64(i)));
      s.reports[i] = instance(rng);
    }
  };
  workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(std::max<std::size_t>(n, 1))));
  if (workers == 1) {
    work(0, n);
  } else {
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(workers);
    for (unsigned w = 0; w < workers; ++w)
      pool.emplace_back([&, w] {
        try {
          work(n * w / workers, n * (w + 1) / workers);
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    for (auto& t : pool) t.join();
    for (auto& e : errors)
      if (e) std::rethrow_exception(e);
  }
  for (const auto& r : s.reports) {
    switch (r.status) {
      case CheckStatus::Holds: ++s.holds; break;
      case CheckStatus::Violated: ++s.violated; break;
      case CheckStatus::NotApplicable: ++s.not_applicable; break;
    }
    if (r.strict) ++s.strict_required;
  }
  return s;
}

}  // namespace latdiam
