#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "fixtures.hpp"
#include "latdiam/graph.hpp"
#include "latdiam/lemmas.hpp"
#include "latdiam/search.hpp"
#include "oracles.hpp"

using namespace latdiam;

namespace {

std::size_t at(const LatticePolytope& P, const Point& p) {
  const auto i = P.index_of(p);
  REQUIRE(i.has_value());
  return *i;
}

// delta(d,k) for d <= 3, k <= 3, typed in independently of the bounds module.
long long small_delta(int d, int k) {
  static const long long t[4][4] = {{0, 0, 0, 0}, {0, 1, 1, 1}, {0, 2, 3, 4}, {0, 3, 4, 6}};
  return t[d][k];
}

bool satisfied(long long lhs, long long rhs, bool strict) { return strict ? lhs < rhs : lhs <= rhs; }

// Cyclic vertex order of a polygon, from the oracle's edge list.
std::vector<Point> cycle_of(const std::vector<Point>& verts) {
  const auto edges = oracle::functional_edges(verts, 8);
  std::vector<std::vector<std::size_t>> adj(verts.size());
  for (auto [a, b] : edges) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  std::vector<Point> out{verts[0]};
  std::size_t prev = 0, cur = adj[0][0];
  while (cur != 0) {
    out.push_back(verts[cur]);
    const auto next = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
    prev = cur;
    cur = next;
  }
  return out;
}

}  // namespace

TEST_CASE("facet distance examples") {
  const auto sq = convex_hull(fixture::cube_corners(2, 3), 2);
  auto r = check_facet_distance(sq, at(sq, {3, 3}), std::vector<Int>{1, 1});
  CHECK(r.lemma == "lemma1");
  CHECK((r.lhs == 2 && r.rhs == 6 && r.status == CheckStatus::Holds));
  const auto O = fixture::octagon();
  r = check_facet_distance(O, at(O, {3, 1}), std::vector<Int>{1, 0});
  CHECK((r.lhs == 3 && r.rhs == 3 && r.status == CheckStatus::Holds));
  r = check_facet_distance(O, at(O, {0, 1}), std::vector<Int>{1, 0});
  CHECK((r.lhs == 0 && r.status == CheckStatus::Holds));
}

TEST_CASE("box restriction examples") {
  const auto O = fixture::octagon();
  auto r = check_box_restriction(O, {{0}, {{0, 3}}});
  CHECK(r.lemma == "lemma2");
  CHECK((r.lhs == 4 && r.rhs == 4 && r.status == CheckStatus::Holds));
  r = check_box_restriction(fixture::cube(3, 1), {{0, 1}, {}});
  CHECK((r.lhs == 3 && r.rhs == 3 && r.status == CheckStatus::Holds));
  r = check_box_restriction(O, {});
  CHECK((r.lhs == 4 && r.rhs == 4 && r.status == CheckStatus::Holds));
  r = check_box_restriction(convex_hull(fixture::cube_corners(3, 4), 3), {});
  CHECK(r.status == CheckStatus::NotApplicable);
}

TEST_CASE("pair bound examples") {
  const auto sq = convex_hull(fixture::cube_corners(2, 3), 2);
  auto r = check_pair_bound(sq, at(sq, {0, 0}), at(sq, {3, 0}), {{1}, {}});
  CHECK(r.lemma == "lemma3");
  CHECK((r.lhs == 1 && r.rhs == 1 && r.status == CheckStatus::Holds && !r.strict));
  const auto O = fixture::octagon();
  r = check_pair_bound(O, at(O, {0, 1}), at(O, {3, 2}), {{0}, {}});
  CHECK((r.lhs == 4 && r.rhs == 4 && r.status == CheckStatus::Holds));
  r = check_pair_bound(O, at(O, {0, 1}), at(O, {3, 2}), {});
  CHECK((r.lhs == 4 && r.rhs == 4 && r.status == CheckStatus::Holds));

  const auto shifted = convex_hull(std::vector<Point>{{1, 0}, {3, 0}, {1, 3}, {3, 3}}, 2, 3);
  r = check_pair_bound(shifted, at(shifted, {1, 0}), at(shifted, {1, 3}), {{0}, {}});
  CHECK(r.strict);
  CHECK((r.lhs == 1 && r.rhs == 3 && r.status == CheckStatus::Holds));
}

TEST_CASE("polygon path examples") {
  auto r = check_polygon_path(std::vector<Point>{{3, 3}, {3, 2}, {2, 1}, {0, 0}});
  CHECK(r.lemma == "lemma4");
  CHECK((r.lhs == 5 && r.rhs == 5 && r.status == CheckStatus::Holds));
  CHECK(r.note == "j=2");
  r = check_polygon_path(std::vector<Point>{{1, 1}, {1, 0}, {0, 0}});
  CHECK((r.status == CheckStatus::Holds && r.note == "vacuous"));
  CHECK(check_polygon_path(std::vector<Point>{{1, 0}, {0, 0}}).status == CheckStatus::NotApplicable);
  CHECK(check_polygon_path(std::vector<Point>{{3, 3}, {3, 1}, {2, 1}, {0, 0}}).status == CheckStatus::NotApplicable);
  CHECK(check_polygon_path(std::vector<Point>{{3, 3}, {3, 2}, {2, 1}, {0, 1}}).status == CheckStatus::NotApplicable);
  CHECK(check_polygon_path(std::vector<Point>{{3, 3}, {3, 2}, {2, 2}, {1, 1}, {0, 0}}).status ==
        CheckStatus::NotApplicable);
}

TEST_CASE("inductive step examples") {
  const auto C3 = convex_hull(fixture::cube_corners(3, 3), 3);
  auto r = check_inductive_step(C3, at(C3, {0, 0, 0}), at(C3, {3, 3, 3}));
  CHECK(r.lemma == "step");
  CHECK(r.lhs == 3);
  REQUIRE(r.clauses.size() == 3);
  CHECK(r.clauses[0]);
  CHECK(r.status == CheckStatus::Holds);
  const auto C4 = convex_hull(fixture::cube_corners(4, 3), 4);
  r = check_inductive_step(C4, at(C4, {0, 0, 0, 0}), at(C4, {3, 3, 3, 3}));
  CHECK(r.lhs == 4);
  CHECK(r.clauses.at(0));
  r = check_inductive_step(C4, 2, 2);
  CHECK(r.lhs == 0);
  CHECK(std::all_of(r.clauses.begin(), r.clauses.end(), [](bool b) { return b; }));
  const auto C5 = convex_hull(fixture::cube_corners(5, 4), 5);
  CHECK(check_inductive_step(C5, 0, 1).status == CheckStatus::NotApplicable);
  CHECK(check_inductive_step(fixture::octagon(), 0, 1).status == CheckStatus::NotApplicable);
}

TEST_CASE("checker input errors") {
  const auto O = fixture::octagon();
  CHECK_THROWS_AS(check_facet_distance(O, 0, std::vector<Int>{0, 0}), std::invalid_argument);
  CHECK_THROWS_AS(check_facet_distance(O, 0, std::vector<Int>{1, 0, 0}), std::invalid_argument);
  CHECK_THROWS_AS(check_facet_distance(O, 99, std::vector<Int>{1, 0}), std::out_of_range);
  CHECK_THROWS_AS(check_box_restriction(O, {{0}, {{0, 2}}}), std::invalid_argument);
  CHECK_THROWS_AS(check_box_restriction(O, {{0, 0}, {}}), std::invalid_argument);
  CHECK_THROWS_AS(check_box_restriction(O, {{2}, {}}), std::invalid_argument);
  CHECK_THROWS_AS(check_pair_bound(fixture::cube(4, 1), 0, 1, {{0, 1, 2, 3}, {}}), std::invalid_argument);
  CHECK_THROWS_AS(check_pair_bound(O, at(O, {3, 1}), at(O, {2, 0}), {{0}, {}}), std::invalid_argument);
  CHECK_THROWS_AS(check_pair_bound(O, 0, 42, {}), std::out_of_range);
}

TEST_CASE("json report shape") {
  const auto r = check_facet_distance(fixture::octagon(), 0, std::vector<Int>{1, 0});
  const auto j = to_json(r);
  std::vector<std::string> keys;
  for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
  CHECK(keys == std::vector<std::string>{"lemma", "instance_digest", "lhs", "rhs", "status"});
  CHECK(j["status"] == "holds");
  CHECK(r.instance_digest.size() == 16);
  CHECK(to_string(CheckStatus::NotApplicable) == "not_applicable");
  CHECK(known_delta(0, 5) == 0);
  CHECK(!known_delta(3, 4).has_value());
}

TEST_CASE("property: lemma4 over every convex lattice polygon with k <= 3") {
  std::size_t applicable = 0, nontrivial = 0;
  for (int k = 1; k <= 3; ++k)
    for (const auto& verts : all_lattice_polygons(k)) {
      if (verts.size() < 3) continue;
      const auto cyc = cycle_of(verts);
      const std::size_t n = cyc.size();
      for (std::size_t start = 0; start < n; ++start)
        for (int dir : {1, -1}) {
          std::vector<Point> path;
          for (std::size_t t = 0; t < n; ++t)
            path.push_back(cyc[(start + (dir > 0 ? t : n - t)) % n]);
          const auto r = check_polygon_path(path);
          REQUIRE(r.status != CheckStatus::Violated);
          if (r.status == CheckStatus::NotApplicable) continue;
          ++applicable;
          if (n - 1 <= 2) continue;
          ++nontrivial;
          for (std::size_t j = 2; j + 1 < n; ++j)
            REQUIRE(path[j][0] + path[j][1] + 2 <= path[j - 1][0] + path[j - 1][1]);
        }
    }
  CHECK(applicable >= 40);
  CHECK(nontrivial >= 10);
}

TEST_CASE("property: self-audit of lemma1-3 against independent recomputation") {
  Rng rng(606);
  int strict_seen = 0;
  for (int trial = 0; trial < 400; ++trial) {
    const int d = static_cast<int>(rng.uniform(2, 3));
    const int k = static_cast<int>(rng.uniform(1, 3));
    const auto P = random_polytope(rng, d, k);
    const auto fw = oracle::floyd_warshall(P.vertices.size(), P.edges);
    const auto u = static_cast<std::size_t>(rng.below(P.vertices.size()));
    const auto v = static_cast<std::size_t>(rng.below(P.vertices.size()));

    Point c(d, 0);
    while (std::all_of(c.begin(), c.end(), [](Int x) { return x == 0; }))
      for (auto& x : c) x = rng.uniform(-3, 3);
    Int gamma = INT64_MAX;
    for (const auto& x : P.vertices) gamma = std::min(gamma, dot(c, x));
    int dist = 1 << 20;
    for (std::size_t w = 0; w < P.vertices.size(); ++w)
      if (dot(c, P.vertices[w]) == gamma) dist = std::min(dist, fw[u][w]);
    const auto r1 = check_facet_distance(P, u, c);
    REQUIRE(r1.lhs == dist);
    REQUIRE(r1.rhs == dot(c, P.vertices[u]) - gamma);
    REQUIRE((r1.status == CheckStatus::Holds) == satisfied(dist, r1.rhs, false));
    REQUIRE(r1.status == CheckStatus::Holds);

    int diam = 0;
    for (const auto& row : fw) diam = std::max(diam, *std::max_element(row.begin(), row.end()));
    std::vector<int> I;
    for (int i = 0; i < d; ++i)
      if (rng.coin()) I.push_back(i);
    long long spread = 0;
    for (int i : I) {
      Int lo = k, hi = 0;
      for (const auto& x : P.vertices) {
        lo = std::min(lo, x[i]);
        hi = std::max(hi, x[i]);
      }
      spread += hi - lo;
    }
    const auto r2 = check_box_restriction(P, {I, {}});
    REQUIRE(r2.lhs == diam);
    REQUIRE(r2.rhs == small_delta(d - static_cast<int>(I.size()), k) + spread);
    REQUIRE(r2.status == CheckStatus::Holds);

    std::vector<int> J;
    for (int i = 0; i < d; ++i)
      if (P.vertices[u][i] + P.vertices[v][i] <= k && rng.coin()) J.push_back(i);
    long long sum = 0;
    for (int i : J) sum += P.vertices[u][i] + P.vertices[v][i];
    bool strict = !J.empty() && J.size() <= 2;
    for (const auto& x : P.vertices) {
      Int s = 0;
      for (int i : J) s += x[i];
      if (s <= 0) strict = false;
    }
    const auto r3 = check_pair_bound(P, u, v, {J, {}});
    REQUIRE(r3.lhs == fw[u][v]);
    REQUIRE(r3.rhs == small_delta(d - static_cast<int>(J.size()), k) + sum);
    REQUIRE(r3.strict == strict);
    REQUIRE(satisfied(fw[u][v], r3.rhs, strict));
    REQUIRE(r3.status == CheckStatus::Holds);
    strict_seen += strict;
  }
  CHECK(strict_seen > 0);
}

TEST_CASE("property: suites are deterministic and independent of worker count") {
  for (const auto& name : suite_names()) {
    const auto a = run_suite(name, 120, 7, 1);
    const auto b = run_suite(name, 120, 7, 3);
    REQUIRE(to_json(a).dump() == to_json(b).dump());
    REQUIRE(a.holds + a.violated + a.not_applicable == 120);
    REQUIRE(a.reports.size() == 120);
    const auto c = run_suite(name, 120, 8, 1);
    CHECK(to_json(a).dump() != to_json(c).dump());
  }
  CHECK_THROWS_AS(run_suite("lemma9", 1, 1), std::invalid_argument);
}

TEST_CASE("property: zero violations and strictness honored") {
  for (const auto& name : suite_names()) {
    const auto s = run_suite(name, 400, 2024, 2);
    CHECK(s.violated == 0);
    CHECK(s.holds > 0);
    for (const auto& r : s.reports)
      if (r.strict) REQUIRE(r.lhs < r.rhs);
  }
}
