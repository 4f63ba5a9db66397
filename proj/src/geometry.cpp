#include "latdiam/geometry.hpp"

#include <algorithm>
#include <bit>
#include <iterator>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace latdiam {

int integer_rank(std::vector<std::vector<Int>> rows) {
  if (rows.empty()) return 0;
  const std::size_t cols = rows.front().size();
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][c] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    const auto& p = rows[rank];
    for (std::size_t i = rank + 1; i < rows.size(); ++i) {
      auto& r = rows[i];
      if (r[c] == 0) continue;
      const Int g = std::gcd(checked_abs(p[c]), checked_abs(r[c]));
      const Int fp = r[c] / g;
      const Int fr = p[c] / g;
      for (std::size_t j = c; j < cols; ++j)
        r[j] = checked_sub(checked_mul(r[j], fr), checked_mul(p[j], fp));
      make_primitive(r);
    }
    ++rank;
  }
  return static_cast<int>(rank);
}

Int determinant(std::vector<std::vector<Int>> m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  std::vector<std::vector<__int128>> a(n, std::vector<__int128>(n));
  for (std::size_t i = 0; i < n; ++i) {
    if (m[i].size() != n) throw DimensionMismatch("determinant: matrix is not square");
    for (std::size_t j = 0; j < n; ++j) a[i][j] = m[i][j];
  }
  // Bareiss: every intermediate entry is a minor of the input, so exact division holds.
  int sign = 1;
  __int128 prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t s = k + 1;
      while (s < n && a[s][k] == 0) ++s;
      if (s == n) return 0;
      std::swap(a[k], a[s]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        __int128 x, y, z;
        if (__builtin_mul_overflow(a[i][j], a[k][k], &x) ||
            __builtin_mul_overflow(a[i][k], a[k][j], &y) || __builtin_sub_overflow(x, y, &z))
          throw OverflowError("integer overflow in determinant");
        a[i][j] = z / prev;
      }
    }
    prev = a[k][k];
  }
  __int128 det = a[n - 1][n - 1] * sign;
  if (det > INT64_MAX || det < INT64_MIN) throw OverflowError("determinant exceeds 64 bits");
  return static_cast<Int>(det);
}

Point orthogonal_complement(const std::vector<Point>& rows) {
  const std::size_t n = rows.size() + 1;
  Point out(n, 0);
  for (std::size_t t = 0; t < n; ++t) {
    std::vector<std::vector<Int>> minor;
    minor.reserve(rows.size());
    for (const auto& r : rows) {
      if (r.size() != n) throw DimensionMismatch("orthogonal_complement: row length");
      std::vector<Int> row;
      row.reserve(n - 1);
      for (std::size_t j = 0; j < n; ++j)
        if (j != t) row.push_back(r[j]);
      minor.push_back(std::move(row));
    }
    const Int m = determinant(std::move(minor));
    out[t] = (t % 2 == 0) ? m : checked_sub(0, m);
  }
  return out;
}

namespace {

using Bits = std::vector<std::uint64_t>;

bool is_subset(const Bits& a, const Bits& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if ((a[i] & ~b[i]) != 0) return false;
  return true;
}

int popcount(const Bits& a) {
  int c = 0;
  for (auto w : a) c += std::popcount(w);
  return c;
}

void set_bit(Bits& b, std::size_t i) { b[i / 64] |= std::uint64_t{1} << (i % 64); }

// Echelon basis that reports whether a new row raises the rank. Each stored
// row vanishes on the pivots of the rows stored before it.
class Echelon {
public:
  bool add(Point row) {
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      const std::size_t c = pivots_[i];
      if (row[c] == 0) continue;
      const auto& b = rows_[i];
      const Int g = std::gcd(checked_abs(b[c]), checked_abs(row[c]));
      const Int fb = row[c] / g;
      const Int fr = b[c] / g;
      for (std::size_t j = 0; j < row.size(); ++j)
        row[j] = checked_sub(checked_mul(row[j], fr), checked_mul(b[j], fb));
      make_primitive(row);
    }
    auto it = std::find_if(row.begin(), row.end(), [](Int x) { return x != 0; });
    if (it == row.end()) return false;
    pivots_.push_back(static_cast<std::size_t>(it - row.begin()));
    rows_.push_back(std::move(row));
    return true;
  }
  [[nodiscard]] std::size_t rank() const { return rows_.size(); }

private:
  std::vector<Point> rows_;
  std::vector<std::size_t> pivots_;
};

Point homogenize(const Point& p) {
  Point h;
  h.reserve(p.size() + 1);
  h.push_back(1);
  h.insert(h.end(), p.begin(), p.end());
  return h;
}

struct Ray {
  Point y;
  Bits tight;
};

// Facets of the hull of distinct, full-dimensional points in dimension r by the
// double description method on the homogenized cone {(b,c) : b + c.p >= 0}.
std::vector<Facet> double_description(const std::vector<Point>& pts, int r) {
  const std::size_t n = pts.size();
  const std::size_t words = (n + 63) / 64;
  std::vector<Point> rows;
  rows.reserve(n);
  for (const auto& p : pts) rows.push_back(homogenize(p));

  std::vector<std::size_t> basis;
  {
    Echelon ech;
    for (std::size_t i = 0; i < n && basis.size() < static_cast<std::size_t>(r + 1); ++i)
      if (ech.add(rows[i])) basis.push_back(i);
  }
  if (basis.size() != static_cast<std::size_t>(r + 1))
    throw std::logic_error("double_description: input is not full-dimensional");

  std::vector<Ray> rays;
  for (std::size_t j = 0; j < basis.size(); ++j) {
    std::vector<Point> others;
    for (std::size_t i = 0; i < basis.size(); ++i)
      if (i != j) others.push_back(rows[basis[i]]);
    Ray ray{orthogonal_complement(others), Bits(words, 0)};
    if (dot(rows[basis[j]], ray.y) < 0)
      for (Int& x : ray.y) x = -x;
    make_primitive(ray.y);
    for (std::size_t i = 0; i < basis.size(); ++i)
      if (i != j) set_bit(ray.tight, basis[i]);
    rays.push_back(std::move(ray));
  }

  std::vector<char> in_basis(n, 0);
  for (auto b : basis) in_basis[b] = 1;

  std::vector<Int> s;
  for (std::size_t a = 0; a < n; ++a) {
    if (in_basis[a]) continue;
    s.resize(rays.size());
    bool any_negative = false;
    for (std::size_t i = 0; i < rays.size(); ++i) {
      s[i] = dot(rows[a], rays[i].y);
      any_negative |= s[i] < 0;
    }
    if (!any_negative) {
      for (std::size_t i = 0; i < rays.size(); ++i)
        if (s[i] == 0) set_bit(rays[i].tight, a);
      continue;
    }
    std::vector<std::size_t> pos, neg;
    for (std::size_t i = 0; i < rays.size(); ++i) {
      if (s[i] > 0) pos.push_back(i);
      else if (s[i] < 0) neg.push_back(i);
    }
    std::vector<Ray> next;
    next.reserve(rays.size() + pos.size());
    for (std::size_t p : pos)
      for (std::size_t q : neg) {
        Bits common(words);
        for (std::size_t w = 0; w < words; ++w) common[w] = rays[p].tight[w] & rays[q].tight[w];
        if (popcount(common) < r - 1) continue;
        bool adjacent = true;
        for (std::size_t t = 0; t < rays.size() && adjacent; ++t)
          if (t != p && t != q && is_subset(common, rays[t].tight)) adjacent = false;
        if (!adjacent) continue;
        Ray fresh{Point(r + 1), std::move(common)};
        for (int j = 0; j <= r; ++j)
          fresh.y[j] = checked_add(checked_mul(s[p], rays[q].y[j]),
                                   checked_mul(checked_sub(0, s[q]), rays[p].y[j]));
        make_primitive(fresh.y);
        set_bit(fresh.tight, a);
        next.push_back(std::move(fresh));
      }
    for (std::size_t i = 0; i < rays.size(); ++i) {
      if (s[i] < 0) continue;
      if (s[i] == 0) set_bit(rays[i].tight, a);
      next.push_back(std::move(rays[i]));
    }
    rays = std::move(next);
  }

  std::vector<Facet> facets;
  facets.reserve(rays.size());
  for (auto& ray : rays) {
    Facet f{Point(ray.y.begin() + 1, ray.y.end()), checked_sub(0, ray.y[0])};
    const Int g = content(f.normal);
    if (g == 0) throw std::logic_error("double_description: degenerate ray");
    for (Int& x : f.normal) x /= g;
    f.offset /= g;
    facets.push_back(std::move(f));
  }
  std::sort(facets.begin(), facets.end());
  return facets;
}

int normal_rank(const std::vector<Facet>& facets, const std::vector<std::size_t>& which) {
  std::vector<std::vector<Int>> rows;
  rows.reserve(which.size());
  for (auto f : which) rows.push_back(facets[f].normal);
  return integer_rank(std::move(rows));
}

void check_points(std::span<const Point> points, int d) {
  if (points.empty()) throw std::invalid_argument("convex hull of an empty point set");
  if (d < 1) throw std::invalid_argument("dimension must be positive");
  for (const auto& p : points)
    if (static_cast<int>(p.size()) != d)
      throw DimensionMismatch("point of dimension " + std::to_string(p.size()) +
                              " in a dimension-" + std::to_string(d) + " point set");
}

Int resolve_k(std::span<const Point> points, std::optional<Int> k) {
  Int lo = 0, hi = 0;
  for (const auto& p : points)
    for (Int x : p) {
      lo = std::min(lo, x);
      hi = std::max(hi, x);
    }
  const Int kk = k.value_or(hi);
  if (lo < 0 || hi > kk)
    throw std::invalid_argument("point outside the lattice box [0," + std::to_string(kk) + "]^d");
  return kk;
}

// Hull of distinct points that span R^r (r >= 1).
struct CoreHull {
  std::vector<Facet> facets;
  std::vector<std::size_t> vertex_ids;  // into the input, in input order
};

CoreHull full_dimensional_core(const std::vector<Point>& pts, int r) {
  CoreHull out;
  out.facets = double_description(pts, r);
  for (std::size_t i = 0; i < pts.size(); ++i) {
    std::vector<std::size_t> tight;
    for (std::size_t f = 0; f < out.facets.size(); ++f)
      if (dot(out.facets[f].normal, pts[i]) == out.facets[f].offset) tight.push_back(f);
    if (static_cast<int>(tight.size()) >= r && normal_rank(out.facets, tight) == r)
      out.vertex_ids.push_back(i);
  }
  return out;
}

std::vector<Point> sorted_unique(std::span<const Point> points) {
  std::vector<Point> pts(points.begin(), points.end());
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  return pts;
}

}  // namespace

std::optional<std::size_t> LatticePolytope::index_of(std::span<const Int> p) const {
  Point key(p.begin(), p.end());
  auto it = std::lower_bound(vertices.begin(), vertices.end(), key);
  if (it == vertices.end() || *it != key) return std::nullopt;
  return static_cast<std::size_t>(it - vertices.begin());
}

int affine_dimension(std::span<const Point> points) {
  if (points.empty()) return -1;
  std::vector<std::vector<Int>> diffs;
  diffs.reserve(points.size());
  for (const auto& p : points) {
    if (p.size() != points.front().size()) throw DimensionMismatch("affine_dimension: mixed dimensions");
    std::vector<Int> row(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) row[i] = checked_sub(p[i], points.front()[i]);
    diffs.push_back(std::move(row));
  }
  return integer_rank(std::move(diffs));
}

std::vector<std::vector<std::size_t>> vertex_facet_incidence(const LatticePolytope& polytope) {
  std::vector<std::vector<std::size_t>> inc(polytope.vertices.size());
  for (std::size_t v = 0; v < polytope.vertices.size(); ++v)
    for (std::size_t f = 0; f < polytope.facets.size(); ++f)
      if (dot(polytope.facets[f].normal, polytope.vertices[v]) == polytope.facets[f].offset)
        inc[v].push_back(f);
  return inc;
}

std::vector<Edge> vertex_adjacency(const LatticePolytope& polytope) {
  const auto& V = polytope.vertices;
  const int dim = polytope.affine_dim;
  if (dim <= 0) return {};
  if (polytope.facets.empty()) throw std::invalid_argument("vertex_adjacency: facet list missing");
  for (const auto& v : V)
    for (const auto& f : polytope.facets)
      if (dot(f.normal, v) < f.offset)
        throw std::invalid_argument("vertex_adjacency: a vertex violates a facet inequality");

  const auto inc = vertex_facet_incidence(polytope);
  std::vector<Edge> edges;
  std::vector<std::size_t> common;
  for (std::size_t u = 0; u < V.size(); ++u)
    for (std::size_t v = u + 1; v < V.size(); ++v) {
      common.clear();
      std::set_intersection(inc[u].begin(), inc[u].end(), inc[v].begin(), inc[v].end(),
                            std::back_inserter(common));
      if (static_cast<int>(common.size()) < dim - 1) continue;
      if (normal_rank(polytope.facets, common) == dim - 1) edges.emplace_back(u, v);
    }
  return edges;
}

LatticePolytope convex_hull(std::span<const Point> points, int d, std::optional<Int> k) {
  check_points(points, d);
  const int dim = affine_dimension(points);
  if (dim < d) throw DegenerateInput(dim, d);
  return relative_convex_hull(points, d, k);
}

LatticePolytope relative_convex_hull(std::span<const Point> points, int d, std::optional<Int> k) {
  check_points(points, d);
  LatticePolytope poly;
  poly.d = d;
  poly.k = resolve_k(points, k);
  const auto pts = sorted_unique(points);
  const int r = affine_dimension(pts);
  poly.affine_dim = r;
  if (r == 0) {
    poly.vertices = pts;
    return poly;
  }

  // Coordinates on which the projection of the affine span is injective.
  std::vector<std::size_t> coords;
  if (r == d) {
    for (int i = 0; i < d; ++i) coords.push_back(static_cast<std::size_t>(i));
  } else {
    std::vector<std::vector<Int>> diffs;
    for (const auto& p : pts) {
      std::vector<Int> row(d);
      for (int i = 0; i < d; ++i) row[i] = p[i] - pts.front()[i];
      diffs.push_back(std::move(row));
    }
    for (int i = 0; i < d && static_cast<int>(coords.size()) < r; ++i) {
      std::vector<std::vector<Int>> cols;
      for (auto c : coords) {
        std::vector<Int> col;
        for (const auto& row : diffs) col.push_back(row[c]);
        cols.push_back(std::move(col));
      }
      std::vector<Int> col;
      for (const auto& row : diffs) col.push_back(row[i]);
      cols.push_back(std::move(col));
      if (integer_rank(cols) == static_cast<int>(cols.size())) coords.push_back(static_cast<std::size_t>(i));
    }
  }

  std::vector<Point> projected;
  projected.reserve(pts.size());
  for (const auto& p : pts) {
    Point q;
    for (auto c : coords) q.push_back(p[c]);
    projected.push_back(std::move(q));
  }

  auto core = full_dimensional_core(projected, r);
  for (auto& f : core.facets) {
    Facet lifted{Point(d, 0), f.offset};
    for (std::size_t j = 0; j < coords.size(); ++j) lifted.normal[coords[j]] = f.normal[j];
    poly.facets.push_back(std::move(lifted));
  }
  std::sort(poly.facets.begin(), poly.facets.end());
  for (auto id : core.vertex_ids) poly.vertices.push_back(pts[id]);
  poly.edges = vertex_adjacency(poly);
  return poly;
}

MinFace min_face(const LatticePolytope& polytope, std::span<const Int> c) {
  if (static_cast<int>(c.size()) != polytope.d) throw DimensionMismatch("min_face: functional dimension");
  if (std::all_of(c.begin(), c.end(), [](Int x) { return x == 0; }))
    throw std::invalid_argument("min_face: zero functional");
  if (polytope.vertices.empty()) throw std::invalid_argument("min_face: empty polytope");
  MinFace out;
  out.gamma = dot(c, polytope.vertices.front());
  for (std::size_t v = 0; v < polytope.vertices.size(); ++v) {
    const Int val = dot(c, polytope.vertices[v]);
    if (val < out.gamma) {
      out.gamma = val;
      out.face.clear();
    }
    if (val == out.gamma) out.face.push_back(v);
  }
  return out;
}

std::string validate(const LatticePolytope& P) {
  if (P.vertices.empty()) return "no vertices";
  if (!std::is_sorted(P.vertices.begin(), P.vertices.end())) return "vertices not sorted";
  if (std::adjacent_find(P.vertices.begin(), P.vertices.end()) != P.vertices.end())
    return "duplicate vertices";
  for (const auto& v : P.vertices) {
    if (static_cast<int>(v.size()) != P.d) return "vertex dimension mismatch";
    for (Int x : v)
      if (x < 0 || x > P.k) return "vertex outside [0,k]^d";
  }
  if (affine_dimension(P.vertices) != P.affine_dim) return "affine dimension mismatch";
  if (P.affine_dim == 0) return P.vertices.size() == 1 ? "" : "point polytope with several vertices";
  for (const auto& f : P.facets) {
    if (content(f.normal) != 1) return "facet normal without content 1";
    std::vector<Point> tight;
    for (const auto& v : P.vertices) {
      const Int val = dot(f.normal, v);
      if (val < f.offset) return "vertex violates a facet";
      if (val == f.offset) tight.push_back(v);
    }
    if (affine_dimension(tight) != P.affine_dim - 1) return "facet does not span a ridge";
  }
  const auto inc = vertex_facet_incidence(P);
  for (std::size_t v = 0; v < P.vertices.size(); ++v)
    if (normal_rank(P.facets, inc[v]) != P.affine_dim) return "listed point is not a vertex";
  if (vertex_adjacency(P) != P.edges) return "edge list differs from the 1-skeleton";
  return "";
}

}  // namespace latdiam
