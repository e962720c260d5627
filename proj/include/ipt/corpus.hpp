#pragma once

// Exhaustive desk-scale corpora: subsets of small boxes and the distinct
// convex hulls of lattice subsets of small boxes.

#include <cstddef>
#include <cstdint>
#include <map>
#include <vector>

#include "ipt/error.hpp"
#include "ipt/point_set.hpp"
#include "ipt/polytope.hpp"

namespace ipt {

/// Integer points of {0, ..., side-1}^dim in lexicographic order.
inline std::vector<IntPoint> grid_points(std::size_t dim, long side) {
  std::vector<IntPoint> out;
  if (side < 1) return out;
  IntPoint x(dim, 0);
  while (true) {
    out.push_back(x);
    std::size_t j = dim;
    bool done = true;
    while (j > 0) {
      --j;
      if (x[j] + 1 < side) {
        ++x[j];
        done = false;
        break;
      }
      x[j] = 0;
    }
    if (done) return out;
  }
}

/// All 2^(side^dim) subsets of the grid, including the empty set, ordered by bitmask.
inline std::vector<IntPointSet> box_subsets(std::size_t dim, long side) {
  auto grid = grid_points(dim, side);
  if (grid.size() > 20) throw Error(ErrorKind::InvalidArgument, "grid too large for exhaustive subsets");
  std::vector<IntPointSet> out;
  const std::uint64_t count = std::uint64_t{1} << grid.size();
  out.reserve(count);
  for (std::uint64_t mask = 0; mask < count; ++mask) {
    std::vector<IntPoint> pts;
    for (std::size_t i = 0; i < grid.size(); ++i)
      if (mask >> i & 1) pts.push_back(grid[i]);
    out.emplace_back(dim, std::move(pts));
  }
  return out;
}

/// Distinct convex hulls of nonempty subsets of the grid, ordered by vertex list.
inline std::vector<RationalPolytope> grid_hulls(std::size_t dim, long side, bool full_dimensional_only) {
  auto grid = grid_points(dim, side);
  if (grid.size() > 20) throw Error(ErrorKind::InvalidArgument, "grid too large for exhaustive hulls");
  std::map<std::vector<RatVector>, RationalPolytope> distinct;
  const std::uint64_t count = std::uint64_t{1} << grid.size();
  for (std::uint64_t mask = 1; mask < count; ++mask) {
    std::vector<RatVector> pts;
    for (std::size_t i = 0; i < grid.size(); ++i)
      if (mask >> i & 1) pts.push_back(to_rational(std::span<const std::int64_t>(grid[i])));
    RationalPolytope hull = convex_hull(pts);
    if (full_dimensional_only && !hull.full_dimensional()) continue;
    // Only the vertex set matters; skip masks whose extra points are not vertices.
    if (hull.vertices().size() != pts.size()) continue;
    distinct.emplace(hull.vertices(), std::move(hull));
  }
  std::vector<RationalPolytope> out;
  out.reserve(distinct.size());
  for (auto& [key, poly] : distinct) out.push_back(std::move(poly));
  return out;
}

}  // namespace ipt
