// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <algorithm>
#include <bit>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <sstream>
#include <string>

#include "fixtures.hpp"
#include "latdiam/bounds.hpp"
#include "latdiam/graph.hpp"
#include "latdiam/lemmas.hpp"
#include "latdiam/search.hpp"
#include "latdiam/zonotope.hpp"
#include "oracles.hpp"

using namespace latdiam;

namespace {

constexpr double kPlaneSmallSeconds = 60.0;
constexpr double kPlaneFourSeconds = 600.0;
constexpr double kWitnessSeconds = 10.0;
constexpr double kDelta43Seconds = 300.0;
constexpr double kSuiteSeconds = 300.0;
constexpr double kRatioLo = 0.90, kRatioHi = 1.10;
constexpr std::size_t kSuiteN = 1000;
constexpr std::uint64_t kSuiteSeed = 7;

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

int failures = 0;

void report(int n, bool ok, const std::string& detail) {
  std::printf("%s %d %s\n", ok ? "PASS" : "FAIL", n, detail.c_str());
  std::fflush(stdout);
  if (!ok) ++failures;
}

void run(int n, const std::function<bool(std::ostringstream&)>& body) {
  std::ostringstream os;
  bool ok = false;
  try {
    ok = body(os);
  } catch (const std::exception& e) {
    os << " exception: " << e.what();
  }
  report(n, ok, os.str());
}

bool fits_exactly(const LatticePolytope& P, Int k) {
  for (int i = 0; i < P.d; ++i) {
    Int lo = k, hi = 0;
    for (const auto& v : P.vertices) {
      lo = std::min(lo, v[i]);
      hi = std::max(hi, v[i]);
    }
    if (lo != 0 || hi != k) return false;
  }
  return true;
}

}  // namespace

int main() {
  run(1, [](std::ostringstream& os) {
    const auto t0 = Clock::now();
    bool ok = true;
    os << "delta(2,k) for k=1..3 by subsets:";
    const int want[] = {2, 3, 4};
    for (int k = 1; k <= 3; ++k) {
      const auto r = enumerate_max_diameter_2d(k, PlaneStrategy::Subsets, kPlaneSmallSeconds);
      os << ' ' << r.value;
      ok = ok && r.value == want[k - 1];
    }
    const double small = since(t0);
    const auto t1 = Clock::now();
    const auto four = enumerate_max_diameter_2d(4, PlaneStrategy::EdgeVectors, kPlaneFourSeconds);
    const double big = since(t1);
    os << " (" << small << " s); k=4 by edge vectors: " << four.value << " (" << big << " s)";
    return ok && small < kPlaneSmallSeconds && four.value == 4 && big < kPlaneFourSeconds;
  });

  run(2, [](std::ostringstream& os) {
    const auto t0 = Clock::now();
    const std::int64_t want[3][2] = {{1, 2}, {3, 4}, {9, 8}};
    bool ok = true;
    os << "H1(2,p) (k,diameter):";
    for (int p = 1; p <= 3; ++p) {
      const auto s = h1_2d_stats(p);
      os << " (" << s.k << ',' << s.diameter << ')';
      ok = ok && s.k == want[p - 1][0] && s.diameter == want[p - 1][1];
      if (p >= 2) {
        const auto z = zonotope_vertices(primitive_generators(2, p));
        const int bfs = diameter(z).value;
        os << " bfs " << bfs;
        ok = ok && bfs == s.diameter && z.k == s.k && fits_exactly(z, s.k) && validate(z).empty();
      }
    }
    const double t = since(t0);
    os << " (" << t << " s)";
    return ok && t < kWitnessSeconds;
  });

  run(3, [](std::ostringstream& os) {
    const auto r = enumerate_max_diameter_2d(3, PlaneStrategy::Subsets);
    const auto octagon = canonical_form(zonotope_vertices(primitive_generators(2, 2)));
    os << "maximizers at k=3: " << r.maximizers.size();
    if (r.maximizers.size() != 1) return false;
    const bool same = canonical_form(r.maximizers.front().polytope) == octagon;
    os << (same ? ", the H1(2,2) octagon" : ", not the octagon");
    return same && r.value == 4;
  });

  run(4, [](std::ostringstream& os) {
    const auto t0 = Clock::now();
    const auto ub = upper_bound(4, 3);
    os << "upper_bound(4,3) = " << ub.value << ' ' << to_string(ub.provenance);
    bool ok = ub.value == 8 && ub.provenance == Provenance::Theorem2ii;
    const auto r = subset_search(4, 3, 8);
    if (!r) {
      os << "; subset_search found nothing";
      return false;
    }
    const auto h1 = primitive_generators(4, 2).vectors;
    bool subset = r->gens.vectors.size() == 8;
    for (const auto& g : r->gens.vectors) subset = subset && std::find(h1.begin(), h1.end(), g) != h1.end();
    const auto z = zonotope_vertices(r->gens);
    const int bfs = diameter(z).value;
    bool inside = z.k <= 3;
    for (const auto& v : z.vertices)
      for (Int x : v) inside = inside && x >= 0 && x <= 3;
    const double t = since(t0);
    os << "; subset of " << r->gens.vectors.size() << " generators, bfs diameter " << bfs << " in [0,3]^4 ("
       << t << " s)";
    return ok && subset && bfs == 8 && inside && t < kDelta43Seconds;
  });

  run(5, [](std::ostringstream& os) {
    const auto rs = bounds_report(5, 5);
    bool ok = true;
    const int want[3][4] = {{3, 4, 7, 8}, {3, 5, 9, 10}, {5, 3, 10, 11}};
    for (const auto& w : want) {
      for (const auto& r : rs)
        if (r.d == w[0] && r.k == w[1]) {
          os << r.lower.value << " <= delta(" << r.d << ',' << r.k << ") <= " << r.upper.value
             << (r.settled ? " settled; " : " open; ");
          ok = ok && r.lower.value == w[2] && r.upper.value == w[3] && !r.settled && !r.exact;
        }
    }
    return ok;
  });

  run(6, [](std::ostringstream& os) {
    bool ok = true;
    os << "diameter / 6(k/2pi)^(2/3):";
    for (int p = 3; p <= 5; ++p) {
      const auto s = h1_2d_stats(p);
      const int exact = diameter(zonotope_vertices(primitive_generators(2, p))).value;
      const double est = 6.0 * std::pow(static_cast<double>(s.k) / (2.0 * std::numbers::pi), 2.0 / 3.0);
      const double ratio = exact / est;
      char buf[64];
      std::snprintf(buf, sizeof buf, " k=%lld %.4f", static_cast<long long>(s.k), ratio);
      os << buf;
      ok = ok && exact == s.diameter && ratio >= kRatioLo && ratio <= kRatioHi;
    }
    return ok;
  });

  run(7, [](std::ostringstream& os) {
    const auto t0 = Clock::now();
    bool ok = true;
    for (const auto& name : suite_names()) {
      const auto s = run_suite(name, kSuiteN, kSuiteSeed);
      std::size_t strict_bad = 0;
      for (const auto& r : s.reports)
        if (r.strict && !(r.lhs < r.rhs)) ++strict_bad;
      os << name << " violated " << s.violated << " (holds " << s.holds << ", n/a " << s.not_applicable
         << ", strict " << s.strict_required << "); ";
      ok = ok && s.violated == 0 && strict_bad == 0 && s.holds > 0;
    }
    const double t = since(t0);
    os << t << " s";
    return ok && t < kSuiteSeconds;
  });

  run(8, [](std::ostringstream& os) {
    Rng rng(1);
    std::size_t idem = 0, idem_bad = 0;
    while (idem < 1000) {
      const int d = static_cast<int>(rng.uniform(1, 4));
      const auto pts = fixture::random_points(rng, static_cast<std::size_t>(rng.uniform(d + 1, 14)), d, 5);
      if (affine_dimension(pts) < d) continue;
      const auto P = convex_hull(pts, d, 5);
      const auto Q = convex_hull(P.vertices, d, 5);
      if (P.vertices != Q.vertices || P.edges != Q.edges || P.facets != Q.facets || !validate(P).empty()) ++idem_bad;
      ++idem;
    }
    std::size_t edges = 0, edges_bad = 0;
    while (edges < 100) {
      const int d = static_cast<int>(rng.uniform(2, 3));
      const Int k = d == 2 ? 5 : 3;
      const auto pts = fixture::random_points(rng, static_cast<std::size_t>(rng.uniform(d + 1, 12)), d, k);
      if (affine_dimension(pts) < d) continue;
      const auto P = convex_hull(pts, d, k);
      if (P.vertices.size() > 12) continue;
      const auto o = oracle::functional_edges(P.vertices, d == 2 ? 12 : 36);
      if (std::vector<Edge>(o.begin(), o.end()) != P.edges) ++edges_bad;
      ++edges;
    }
    std::size_t zono = 0, zono_bad = 0;
    for (int d = 1; d <= 4; ++d) {
      const auto all = primitive_generators(d, 2).vectors;
      for (unsigned mask = 1; mask < (1u << all.size()); ++mask) {
        if (std::popcount(mask) > 8) continue;
        GeneratorSet g{d, {}};
        for (std::size_t i = 0; i < all.size(); ++i)
          if (mask >> i & 1u) g.vectors.push_back(all[i]);
        if (diameter(zonotope_vertices(g)).value != static_cast<int>(zonotope_stats(g).direction_count)) ++zono_bad;
        ++zono;
      }
    }
    os << "hull idempotence " << idem_bad << "/" << idem << " failures; edges vs oracle " << edges_bad << "/"
       << edges << "; zonotope diameter law " << zono_bad << "/" << zono;
    return idem_bad == 0 && edges_bad == 0 && zono_bad == 0;
  });

  return failures == 0 ? 0 : 1;
}
