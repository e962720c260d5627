#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "ipt/error.hpp"
#include "ipt/exact.hpp"

namespace ipt {

using IntPoint = std::vector<std::int64_t>;

/// A finite set of d-dimensional integer points, deduplicated and kept in
/// lexicographic order so that every traversal is deterministic.
class IntPointSet {
 public:
  explicit IntPointSet(std::size_t dim = 0) : dim_(dim) {}

  IntPointSet(std::size_t dim, std::vector<IntPoint> points) : dim_(dim), points_(std::move(points)) {
    for (const auto& p : points_)
      if (p.size() != dim_)
        throw Error(ErrorKind::DimensionMismatch,
                    "point of dimension " + std::to_string(p.size()) + " in a " +
                        std::to_string(dim_) + "-dimensional set");
    std::sort(points_.begin(), points_.end());
    points_.erase(std::unique(points_.begin(), points_.end()), points_.end());
  }

  /// Dimension is taken from the first point; an empty list needs the explicit constructor.
  static IntPointSet from_points(std::vector<IntPoint> points) {
    if (points.empty()) throw Error(ErrorKind::InvalidArgument, "cannot infer dimension of an empty set");
    std::size_t d = points.front().size();
    return IntPointSet(d, std::move(points));
  }

  std::size_t dim() const noexcept { return dim_; }
  std::size_t size() const noexcept { return points_.size(); }
  bool empty() const noexcept { return points_.empty(); }
  const std::vector<IntPoint>& points() const noexcept { return points_; }
  auto begin() const noexcept { return points_.begin(); }
  auto end() const noexcept { return points_.end(); }

  bool contains(const IntPoint& p) const { return std::binary_search(points_.begin(), points_.end(), p); }

  IntPointSet negated() const {
    std::vector<IntPoint> out = points_;
    for (auto& p : out)
      for (auto& x : p) x = -x;
    return IntPointSet(dim_, std::move(out));
  }

  IntMatrix as_integer_rows() const {
    IntMatrix rows;
    rows.reserve(points_.size());
    for (const auto& p : points_) {
      IntVector row;
      row.reserve(dim_);
      for (auto x : p) row.emplace_back(static_cast<long>(x));
      rows.push_back(std::move(row));
    }
    return rows;
  }

  friend bool operator==(const IntPointSet& a, const IntPointSet& b) {
    return a.dim_ == b.dim_ && a.points_ == b.points_;
  }

 private:
  std::size_t dim_;
  std::vector<IntPoint> points_;
};

}  // namespace ipt
