#include "latdiam/zonotope.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>
#include <stdexcept>
#include <string>
#include <unordered_set>

#include "latdiam/graph.hpp"

namespace latdiam {

std::int64_t euler_phi(std::int64_t n) {
  if (n <= 0) throw std::invalid_argument("euler_phi: n must be positive");
  std::int64_t result = n;
  for (std::int64_t q = 2; q * q <= n; ++q) {
    if (n % q != 0) continue;
    while (n % q == 0) n /= q;
    result -= result / q;
  }
  if (n > 1) result -= result / n;
  return result;
}

bool is_positive(const Point& v) {
  for (Int x : v)
    if (x != 0) return x > 0;
  return false;
}

GeneratorSet primitive_generators(int d, int p) {
  if (d < 1 || p < 1) throw std::invalid_argument("primitive_generators: d and p must be positive");
  GeneratorSet out{d, {}};
  Point v(d, -p);
  while (true) {
    Int norm = 0;
    for (Int x : v) norm += x < 0 ? -x : x;
    if (norm <= p && is_positive(v) && content(v) == 1) out.vectors.push_back(v);
    int i = d - 1;
    while (i >= 0 && v[i] == p) v[i--] = -p;
    if (i < 0) break;
    ++v[i];
  }
  return out;  // odometer order is already lexicographic
}

Point coordinate_extents(const GeneratorSet& gens) {
  Point ext(gens.d, 0);
  for (const auto& g : gens.vectors) {
    if (static_cast<int>(g.size()) != gens.d) throw DimensionMismatch("generator dimension");
    for (int i = 0; i < gens.d; ++i) ext[i] = checked_add(ext[i], checked_abs(g[i]));
  }
  return ext;
}

ZonotopeStats zonotope_stats(const GeneratorSet& gens) {
  std::set<Point> directions;
  for (auto g : gens.vectors) {
    make_primitive(g);
    if (!is_positive(g))
      for (Int& x : g) x = -x;
    if (content(g) != 0) directions.insert(std::move(g));
  }
  return {coordinate_extents(gens), directions.size()};
}

LatticePolytope zonotope_vertices(const GeneratorSet& gens) {
  const std::size_t m = gens.vectors.size();
  if (m > 20)
    throw BudgetExceeded("zonotope_vertices: " + std::to_string(m) +
                         " generators exceed the 2^20 sign-enumeration budget");
  if (gens.d < 1 || gens.d > 6) throw std::invalid_argument("zonotope_vertices: need 1 <= d <= 6");
  const auto ext = coordinate_extents(gens);
  const int d = gens.d;

  Point shift(d, 0);
  for (const auto& g : gens.vectors)
    for (int i = 0; i < d; ++i)
      if (g[i] < 0) shift[i] -= g[i];

  // Subset sums lie in the box [0, ext]; encode them in mixed radix to deduplicate.
  std::vector<std::uint64_t> radix(d);
  std::uint64_t span = 1;
  for (int i = 0; i < d; ++i) {
    radix[i] = span;
    const auto width = static_cast<std::uint64_t>(ext[i]) + 1;
    if (span > (UINT64_MAX / width)) throw OverflowError("zonotope_vertices: extents too large");
    span *= width;
  }
  std::unordered_set<std::uint64_t> seen;
  std::vector<Point> points;
  Point cur = shift;
  auto record = [&] {
    std::uint64_t key = 0;
    for (int i = 0; i < d; ++i) key += static_cast<std::uint64_t>(cur[i]) * radix[i];
    if (seen.insert(key).second) points.push_back(cur);
  };
  record();
  // Gray-code walk: step t flips the generator at the lowest set bit of t.
  std::vector<char> on(m, 0);
  for (std::uint64_t t = 1; t < (std::uint64_t{1} << m); ++t) {
    const auto j = static_cast<std::size_t>(__builtin_ctzll(t));
    const Int sign = on[j] ? -1 : 1;
    on[j] ^= 1;
    for (int i = 0; i < d; ++i) cur[i] += sign * gens.vectors[j][i];
    record();
  }
  const Int k = ext.empty() ? 0 : *std::max_element(ext.begin(), ext.end());
  return relative_convex_hull(points, d, k);
}

H1PlaneStats h1_2d_stats(int p) {
  if (p < 1) throw std::invalid_argument("h1_2d_stats: p must be positive");
  H1PlaneStats s;
  for (int i = 1; i <= p; ++i) {
    const auto phi = euler_phi(i);
    s.k += i * phi;
    s.diameter += 2 * phi;
  }
  s.estimate = 6.0 * std::pow(static_cast<double>(s.k) / (2.0 * std::numbers::pi), 2.0 / 3.0);
  return s;
}

namespace {

class SubsetSearch {
public:
  SubsetSearch(int d, int k, int target, std::uint64_t budget)
      : k_(k), target_(target), budget_(budget), extents_(d, 0) {
    order_ = primitive_generators(d, 2).vectors;
    std::sort(order_.begin(), order_.end(), [](const Point& a, const Point& b) {
      Int na = 0, nb = 0;
      for (Int x : a) na += x < 0 ? -x : x;
      for (Int x : b) nb += x < 0 ? -x : x;
      if (na != nb) return na < nb;
      return a > b;
    });
  }

  std::optional<SubsetSearchResult> run() {
    if (dfs(0)) return found_;
    return std::nullopt;
  }

private:
  bool dfs(std::size_t next) {
    if (++nodes_ > budget_) throw BudgetExceeded("subset_search: node budget exhausted");
    if (static_cast<int>(chosen_.size()) == target_) return accept();
    if (chosen_.size() + (order_.size() - next) < static_cast<std::size_t>(target_)) return false;
    for (std::size_t i = next; i < order_.size(); ++i) {
      if (chosen_.size() + (order_.size() - i) < static_cast<std::size_t>(target_)) return false;
      const auto& g = order_[i];
      bool fits = true;
      for (std::size_t c = 0; c < g.size(); ++c)
        if (extents_[c] + (g[c] < 0 ? -g[c] : g[c]) > k_) fits = false;
      if (!fits) continue;
      for (std::size_t c = 0; c < g.size(); ++c) extents_[c] += g[c] < 0 ? -g[c] : g[c];
      chosen_.push_back(g);
      if (dfs(i + 1)) return true;
      chosen_.pop_back();
      for (std::size_t c = 0; c < g.size(); ++c) extents_[c] -= g[c] < 0 ? -g[c] : g[c];
    }
    return false;
  }

  bool accept() {
    GeneratorSet gens{static_cast<int>(extents_.size()), chosen_};
    if (chosen_.size() > 20) {
      found_ = {gens, target_, false};
      return true;
    }
    const auto z = zonotope_vertices(gens);
    const int diam = diameter(z).value;
    if (diam < target_) return false;
    found_ = {gens, diam, true};
    return true;
  }

  Int k_;
  int target_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  Point extents_;
  std::vector<Point> order_;
  std::vector<Point> chosen_;
  SubsetSearchResult found_;
};

}  // namespace

std::optional<SubsetSearchResult> subset_search(int d, int k, int target, std::uint64_t node_budget) {
  if (d < 1 || d > 5) throw std::invalid_argument("subset_search: need 1 <= d <= 5");
  if (k < 1 || k > 2 * d - 1) throw std::invalid_argument("subset_search: need 1 <= k <= 2d-1");
  if (target < 0) throw std::invalid_argument("subset_search: negative target");
  return SubsetSearch(d, k, target, node_budget).run();
}

}  // namespace latdiam
