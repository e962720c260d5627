#pragma once

// Exact rational polytopes in dimension <= 4: convex hulls by brute-force facet
// enumeration, lattice point scans, tangent cones at vertices and pulling
// ("fan from one vertex") triangulations.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <iterator>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "ipt/error.hpp"
#include "ipt/exact.hpp"
#include "ipt/point_set.hpp"

namespace ipt {

inline constexpr std::size_t kMaxGeometryDim = 4;

/// Half-space <normal, x> <= offset.
struct Facet {
  IntVector normal;
  Rational offset;
  friend bool operator==(const Facet&, const Facet&) = default;
  friend bool operator<(const Facet& a, const Facet& b) {
    if (a.normal != b.normal) return a.normal < b.normal;
    return a.offset < b.offset;
  }
};

/// Hyperplane <normal, x> = offset containing the affine hull.
using Equation = Facet;

class RationalPolytope {
 public:
  std::size_t dim() const noexcept { return dim_; }
  std::size_t affine_dim() const noexcept { return affine_dim_; }
  bool full_dimensional() const noexcept { return affine_dim_ == dim_; }
  const std::vector<RatVector>& vertices() const noexcept { return vertices_; }
  /// Facets of the polytope inside its affine hull.
  const std::vector<Facet>& facets() const noexcept { return facets_; }
  /// Equations of the affine hull; empty when full-dimensional.
  const std::vector<Equation>& equations() const noexcept { return equations_; }

  bool contains(const RatVector& x) const {
    for (const auto& e : equations_)
      if (dot(to_rational(e.normal), x) != e.offset) return false;
    for (const auto& f : facets_)
      if (dot(to_rational(f.normal), x) > f.offset) return false;
    return true;
  }

  bool is_integral() const {
    for (const auto& v : vertices_)
      for (const auto& x : v)
        if (x.get_den() != 1) return false;
    return true;
  }

  /// lcm of all vertex coordinate denominators; dilating by it gives an integer polytope.
  Integer vertex_denominator() const {
    Integer l = 1;
    for (const auto& v : vertices_)
      for (const auto& x : v) l = lcm_of(l, x.get_den());
    return l;
  }

  friend RationalPolytope convex_hull(const std::vector<RatVector>& points);
  friend RationalPolytope dilate(const RationalPolytope& p, long k);

 private:
  std::size_t dim_ = 0;
  std::size_t affine_dim_ = 0;
  std::vector<RatVector> vertices_;
  std::vector<Facet> facets_;
  std::vector<Equation> equations_;
};

namespace detail {

struct HullInFullDim {
  std::vector<std::pair<RatVector, Rational>> facets;  // normal (primitive integral), offset
  std::vector<std::size_t> vertex_indices;
};

inline RatVector gather(const RatVector& v, const std::vector<std::size_t>& coords) {
  RatVector out;
  out.reserve(coords.size());
  for (auto c : coords) out.push_back(v[c]);
  return out;
}

// Facets and vertices of m points that affinely span R^k.
inline HullInFullDim hull_full_dim(const std::vector<RatVector>& pts, std::size_t k) {
  HullInFullDim out;
  const std::size_t m = pts.size();
  if (k == 0) {
    out.vertex_indices = {0};
    return out;
  }
  std::set<std::pair<RatVector, Rational>> found;
  std::vector<std::size_t> pick(k);
  std::iota(pick.begin(), pick.end(), std::size_t{0});
  while (true) {
    RatMatrix rows;
    for (std::size_t j = 1; j < k; ++j) rows.push_back(subtract(pts[pick[j]], pts[pick[0]]));
    RatMatrix ns = nullspace(rows, k);
    if (ns.size() == 1) {
      RatVector n = to_rational(primitive(ns[0]));
      Rational b = dot(n, pts[pick[0]]);
      bool all_le = true, all_ge = true;
      for (const auto& p : pts) {
        Rational s = dot(n, p);
        if (s > b) all_le = false;
        if (s < b) all_ge = false;
      }
      if (all_le) found.emplace(n, b);
      if (all_ge) {
        for (auto& x : n) x = -x;
        found.emplace(n, -b);
      }
    }
    // next k-combination of {0..m-1}
    std::size_t i = k;
    while (i > 0 && pick[i - 1] == m - k + (i - 1)) --i;
    if (i == 0) break;
    ++pick[i - 1];
    for (std::size_t j = i; j < k; ++j) pick[j] = pick[j - 1] + 1;
  }
  out.facets.assign(found.begin(), found.end());
  for (std::size_t i = 0; i < m; ++i) {
    RatMatrix tight;
    for (const auto& [n, b] : out.facets)
      if (dot(n, pts[i]) == b) tight.push_back(n);
    if (tight.size() >= k && rank(tight) == k) out.vertex_indices.push_back(i);
  }
  return out;
}

}  // namespace detail

/// Convex hull of a nonempty finite point set in dimension d <= 4. Handles
/// lower-dimensional inputs by working in coordinates of the affine hull.
inline RationalPolytope convex_hull(const std::vector<RatVector>& input) {
  if (input.empty()) throw Error(ErrorKind::InvalidArgument, "convex hull of an empty set");
  const std::size_t d = input.front().size();
  for (const auto& p : input)
    if (p.size() != d) throw Error(ErrorKind::DimensionMismatch, "points of mixed dimension");
  if (d > kMaxGeometryDim)
    throw Error(ErrorKind::DimensionTooLarge, "dimension " + std::to_string(d) + " exceeds 4");

  std::vector<RatVector> pts = input;
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

  RatMatrix directions;
  for (std::size_t i = 1; i < pts.size(); ++i) directions.push_back(subtract(pts[i], pts[0]));
  Echelon e = reduced_row_echelon(directions);
  const std::size_t k = e.rows.size();

  RationalPolytope poly;
  poly.dim_ = d;
  poly.affine_dim_ = k;
  for (const auto& n : nullspace(e.rows, d)) {
    IntVector normal = primitive(n);
    poly.equations_.push_back({normal, dot(to_rational(normal), pts[0])});
  }
  std::sort(poly.equations_.begin(), poly.equations_.end());

  // Coordinates at the pivot columns identify points of the affine hull.
  std::vector<RatVector> projected;
  projected.reserve(pts.size());
  for (const auto& p : pts) projected.push_back(detail::gather(p, e.pivots));
  detail::HullInFullDim hull = detail::hull_full_dim(projected, k);

  for (const auto& [n, b] : hull.facets) {
    RatVector lifted(d, Rational(0));
    for (std::size_t j = 0; j < k; ++j) lifted[e.pivots[j]] = n[j];
    IntVector normal = primitive(lifted);
    poly.facets_.push_back({normal, b});
  }
  std::sort(poly.facets_.begin(), poly.facets_.end());
  for (auto i : hull.vertex_indices) poly.vertices_.push_back(pts[i]);
  return poly;
}

inline RationalPolytope convex_hull(const IntPointSet& points) {
  std::vector<RatVector> pts;
  for (const auto& p : points) pts.push_back(to_rational(std::span<const std::int64_t>(p)));
  return convex_hull(pts);
}

/// Every integer point of the closed polytope, found by scanning the integer
/// bounding box of the vertices with exact tests.
inline IntPointSet lattice_points(const RationalPolytope& poly) {
  const std::size_t d = poly.dim();
  std::vector<std::int64_t> lo(d), hi(d);
  for (std::size_t j = 0; j < d; ++j) {
    Rational mn = poly.vertices()[0][j], mx = mn;
    for (const auto& v : poly.vertices()) {
      if (v[j] < mn) mn = v[j];
      if (v[j] > mx) mx = v[j];
    }
    lo[j] = to_int64(ceil_of(mn));
    hi[j] = to_int64(floor_of(mx));
    if (lo[j] > hi[j]) return IntPointSet(d);
  }

  // Constraints scaled to integers: <a, x> <= c (inequalities) or == c.
  struct Row {
    std::vector<Integer> a;
    Integer c;
    bool equality;
  };
  std::vector<Row> rows;
  auto add = [&](const Facet& f, bool eq) {
    Row r;
    Integer den = f.offset.get_den();
    for (const auto& x : f.normal) r.a.push_back(x * den);
    r.c = f.offset.get_num();
    r.equality = eq;
    rows.push_back(std::move(r));
  };
  for (const auto& e : poly.equations()) add(e, true);
  for (const auto& f : poly.facets()) add(f, false);

  std::vector<IntPoint> found;
  IntPoint x = lo;
  Integer s;
  while (true) {
    bool inside = true;
    for (const auto& r : rows) {
      s = 0;
      for (std::size_t j = 0; j < d; ++j) s += r.a[j] * static_cast<long>(x[j]);
      if (r.equality ? s != r.c : s > r.c) {
        inside = false;
        break;
      }
    }
    if (inside) found.push_back(x);
    std::size_t j = d;
    while (j > 0) {
      --j;
      if (x[j] < hi[j]) {
        ++x[j];
        break;
      }
      x[j] = lo[j];
      if (j == 0) return IntPointSet(d, std::move(found));
    }
    if (d == 0) return IntPointSet(d, std::move(found));
  }
}

inline RationalPolytope dilate(const RationalPolytope& p, long k) {
  if (k < 1) throw Error(ErrorKind::InvalidArgument, "dilation factor must be positive");
  RationalPolytope out = p;
  Rational factor(k);
  for (auto& v : out.vertices_)
    for (auto& x : v) x *= factor;
  for (auto& f : out.facets_) f.offset *= factor;
  for (auto& e : out.equations_) e.offset *= factor;
  return out;
}

/// Polytopes are equal iff their (minimal, sorted) vertex lists agree.
inline bool polytope_equal(const RationalPolytope& p, const RationalPolytope& q) {
  return p.dim() == q.dim() && p.vertices() == q.vertices();
}

inline std::vector<std::size_t> tight_facets(const RationalPolytope& p, const RatVector& x) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < p.facets().size(); ++i)
    if (dot(to_rational(p.facets()[i].normal), x) == p.facets()[i].offset) out.push_back(i);
  return out;
}

/// Primitive integer directions of the edges at vertex v. Two vertices span an
/// edge iff the normals of their common tight facets have rank d - 1.
inline std::vector<IntVector> vertex_tangent_cone(const RationalPolytope& p, const RatVector& v) {
  if (!p.full_dimensional())
    throw Error(ErrorKind::NotFullDimensional, "tangent cones need a full-dimensional polytope");
  if (!std::binary_search(p.vertices().begin(), p.vertices().end(), v))
    throw Error(ErrorKind::InvalidArgument, "point is not a vertex of the polytope");
  const std::size_t d = p.dim();
  auto at_v = tight_facets(p, v);
  std::vector<IntVector> rays;
  for (const auto& w : p.vertices()) {
    if (w == v) continue;
    auto at_w = tight_facets(p, w);
    std::vector<std::size_t> common;
    std::set_intersection(at_v.begin(), at_v.end(), at_w.begin(), at_w.end(),
                          std::back_inserter(common));
    RatMatrix normals;
    for (auto i : common) normals.push_back(to_rational(p.facets()[i].normal));
    if (rank(normals) + 1 == d) rays.push_back(primitive(subtract(w, v)));
  }
  std::sort(rays.begin(), rays.end());
  return rays;
}

/// Which vertex a pulling triangulation fans from.
enum class FanApex { LexMin, LexMax };

/// Pulling triangulation of conv(points): fan from the chosen extreme vertex
/// over a recursive triangulation of every facet not containing it. Returns
/// simplices as index lists into `points`, each with affine_dim + 1 entries.
inline std::vector<std::vector<std::size_t>> fan_triangulation(
    const std::vector<RatVector>& points, const std::vector<std::size_t>& subset,
    FanApex apex_choice = FanApex::LexMin) {
  std::vector<RatVector> sub;
  for (auto i : subset) sub.push_back(points[i]);
  RationalPolytope hull = convex_hull(sub);

  auto index_of = [&](const RatVector& v) {
    for (auto i : subset)
      if (points[i] == v) return i;
    throw Error(ErrorKind::InvalidArgument, "hull vertex not found among input points");
  };
  if (hull.affine_dim() == 0) return {{index_of(hull.vertices()[0])}};

  const RatVector& apex =
      apex_choice == FanApex::LexMin ? hull.vertices().front() : hull.vertices().back();
  const std::size_t apex_index = index_of(apex);
  std::vector<std::vector<std::size_t>> simplices;
  for (const auto& f : hull.facets()) {
    RatVector n = to_rational(f.normal);
    if (dot(n, apex) == f.offset) continue;
    std::vector<std::size_t> on_facet;
    for (const auto& v : hull.vertices())
      if (dot(n, v) == f.offset) on_facet.push_back(index_of(v));
    for (auto s : fan_triangulation(points, on_facet, apex_choice)) {
      s.push_back(apex_index);
      simplices.push_back(std::move(s));
    }
  }
  return simplices;
}

inline std::vector<std::vector<std::size_t>> fan_triangulation(const std::vector<RatVector>& points,
                                                               FanApex apex_choice = FanApex::LexMin) {
  std::vector<std::size_t> all(points.size());
  std::iota(all.begin(), all.end(), std::size_t{0});
  return fan_triangulation(points, all, apex_choice);
}

/// Simplices (as vertex lists) of a pulling triangulation of P.
inline std::vector<std::vector<RatVector>> triangulate_polytope(const RationalPolytope& p,
                                                                FanApex apex_choice = FanApex::LexMin) {
  std::vector<std::vector<RatVector>> out;
  for (const auto& s : fan_triangulation(p.vertices(), apex_choice)) {
    std::vector<RatVector> simplex;
    for (auto i : s) simplex.push_back(p.vertices()[i]);
    out.push_back(std::move(simplex));
  }
  return out;
}

struct SimplicialCone {
  RatVector apex;
  std::vector<IntVector> generators;
  Integer det;  // |det| of the generator matrix
};

/// Inward primitive facet normals of the cone generated by `rays`.
inline std::vector<IntVector> cone_facet_normals(const std::vector<IntVector>& rays, std::size_t d) {
  std::set<IntVector> normals;
  std::vector<RatVector> r;
  for (const auto& ray : rays) r.push_back(to_rational(ray));
  const std::size_t m = r.size(), k = d - 1;
  if (k > m) return {};
  std::vector<std::size_t> pick(k);
  std::iota(pick.begin(), pick.end(), std::size_t{0});
  while (true) {
    RatMatrix rows;
    for (auto i : pick) rows.push_back(r[i]);
    RatMatrix ns = nullspace(rows, d);
    if (ns.size() == 1) {
      IntVector n = primitive(ns[0]);
      RatVector nq = to_rational(n);
      bool all_ge = true, all_le = true;
      for (const auto& x : r) {
        Rational s = dot(nq, x);
        if (s < 0) all_ge = false;
        if (s > 0) all_le = false;
      }
      if (all_ge) normals.insert(n);
      if (all_le) {
        for (auto& x : n) x = -x;
        normals.insert(n);
      }
    }
    if (k == 0) break;
    std::size_t i = k;
    while (i > 0 && pick[i - 1] == m - k + (i - 1)) --i;
    if (i == 0) break;
    ++pick[i - 1];
    for (std::size_t j = i; j < k; ++j) pick[j] = pick[j - 1] + 1;
  }
  return {normals.begin(), normals.end()};
}

/// Splits a pointed full-dimensional cone into simplicial cones with disjoint
/// interiors. The cone is cut by the hyperplane <c, x> = 1 where c is the sum
/// of its inward facet normals; the resulting (d-1)-polytope is triangulated
/// by fanning and each simplex is lifted back to the rays through its vertices.
inline std::vector<SimplicialCone> triangulate_cone(const std::vector<IntVector>& input_rays,
                                                    FanApex apex_choice = FanApex::LexMin) {
  if (input_rays.empty()) throw Error(ErrorKind::NotPointed, "cone has no rays");
  const std::size_t d = input_rays.front().size();
  if (d > kMaxGeometryDim)
    throw Error(ErrorKind::DimensionTooLarge, "dimension " + std::to_string(d) + " exceeds 4");
  std::vector<IntVector> rays;
  for (const auto& r : input_rays) {
    if (r.size() != d) throw Error(ErrorKind::DimensionMismatch, "rays of mixed dimension");
    rays.push_back(primitive(to_rational(r)));
  }
  std::sort(rays.begin(), rays.end());
  rays.erase(std::unique(rays.begin(), rays.end()), rays.end());
  if (rank(to_rational(rays)) < d)
    throw Error(ErrorKind::NotFullDimensional, "rays do not span the ambient space");

  IntVector c(d, Integer(0));
  for (const auto& n : cone_facet_normals(rays, d))
    for (std::size_t j = 0; j < d; ++j) c[j] += n[j];
  RatVector cq = to_rational(c);
  std::vector<RatVector> section;
  for (const auto& r : rays) {
    Rational h = dot(cq, to_rational(r));
    if (h <= 0) throw Error(ErrorKind::NotPointed, "cone contains a line");
    RatVector q = to_rational(r);
    for (auto& x : q) x /= h;
    section.push_back(std::move(q));
  }

  std::vector<SimplicialCone> cones;
  for (const auto& s : fan_triangulation(section, apex_choice)) {
    SimplicialCone cone;
    cone.apex = RatVector(d, Rational(0));
    for (auto i : s) cone.generators.push_back(rays[i]);
    std::sort(cone.generators.begin(), cone.generators.end());
    cone.det = abs(determinant(cone.generators));
    cones.push_back(std::move(cone));
  }
  return cones;
}

}  // namespace ipt
