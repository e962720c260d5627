#pragma once

// Integer lattices in Hermite normal form, their duals and the finite group
// L*/Z^d of dual cosets. All arithmetic is exact.

#include <cstddef>
#include <deque>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "ipt/error.hpp"
#include "ipt/exact.hpp"
#include "ipt/point_set.hpp"

namespace ipt {

/// Sublattice of Z^d with a row-style HNF basis: upper echelon, positive
/// pivots, entries above each pivot reduced into [0, pivot).
class IntegerLattice {
 public:
  std::size_t dim() const noexcept { return dim_; }
  std::size_t rank() const noexcept { return basis_.size(); }
  bool full_rank() const noexcept { return rank() == dim_; }
  const IntMatrix& basis() const noexcept { return basis_; }
  const std::vector<std::size_t>& pivot_columns() const noexcept { return pivots_; }

  /// |det| of the basis; only defined for full rank.
  const std::optional<Integer>& index() const noexcept { return index_; }

  friend bool operator==(const IntegerLattice&, const IntegerLattice&) = default;

  friend IntegerLattice hnf(const IntMatrix& rows, std::size_t dim);

 private:
  std::size_t dim_ = 0;
  IntMatrix basis_;
  std::vector<std::size_t> pivots_;
  std::optional<Integer> index_;
};

/// Canonical HNF basis of the integer span of `rows`. Zero rows are ignored;
/// an all-zero (or empty) input yields the rank-0 lattice.
inline IntegerLattice hnf(const IntMatrix& rows, std::size_t dim) {
  IntMatrix a;
  for (const auto& row : rows) {
    if (row.size() != dim)
      throw Error(ErrorKind::DimensionMismatch, "row of dimension " + std::to_string(row.size()) +
                                                    ", expected " + std::to_string(dim));
    a.push_back(row);
  }
  const std::size_t m = a.size();
  std::size_t r = 0;
  std::vector<std::size_t> pivots;

  auto axpy = [dim](IntVector& target, const Integer& q, const IntVector& src) {
    if (q == 0) return;
    for (std::size_t j = 0; j < dim; ++j) target[j] -= q * src[j];
  };

  for (std::size_t c = 0; c < dim && r < m; ++c) {
    // Euclid on column c across rows r..m-1 until a single nonzero remains.
    bool found = false;
    while (true) {
      std::size_t best = m;
      for (std::size_t i = r; i < m; ++i) {
        if (a[i][c] == 0) continue;
        if (best == m || abs(a[i][c]) < abs(a[best][c])) best = i;
      }
      if (best == m) break;
      found = true;
      std::swap(a[r], a[best]);
      bool cleared = true;
      for (std::size_t i = r + 1; i < m; ++i) {
        if (a[i][c] == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), a[i][c].get_mpz_t(), a[r][c].get_mpz_t());
        axpy(a[i], q, a[r]);
        if (a[i][c] != 0) cleared = false;
      }
      if (cleared) break;
    }
    if (!found) continue;
    if (a[r][c] < 0)
      for (auto& x : a[r]) x = -x;
    for (std::size_t i = 0; i < r; ++i) {
      Integer q;
      mpz_fdiv_q(q.get_mpz_t(), a[i][c].get_mpz_t(), a[r][c].get_mpz_t());
      axpy(a[i], q, a[r]);
    }
    pivots.push_back(c);
    ++r;
  }

  IntegerLattice lattice;
  lattice.dim_ = dim;
  lattice.basis_.assign(a.begin(), a.begin() + static_cast<std::ptrdiff_t>(r));
  lattice.pivots_ = std::move(pivots);
  if (r == dim) {
    Integer index = 1;
    for (std::size_t i = 0; i < r; ++i) index *= lattice.basis_[i][i];
    lattice.index_ = index;
  }
  return lattice;
}

inline IntegerLattice hnf(const IntMatrix& rows) {
  if (rows.empty()) throw Error(ErrorKind::InvalidArgument, "hnf needs at least one row");
  return hnf(rows, rows.front().size());
}

/// L_S: the integer span of the points themselves (not of their differences).
inline IntegerLattice integer_span(const IntPointSet& points) {
  return hnf(points.as_integer_rows(), points.dim());
}

/// Integer span of the differences n - n_0 (n_0 the first point). Contained in
/// integer_span(points), with equality whenever the origin is one of the points.
inline IntegerLattice difference_span(const IntPointSet& points) {
  IntMatrix rows = points.as_integer_rows();
  if (rows.empty()) return hnf(rows, points.dim());
  const IntVector base = rows.front();
  for (auto& r : rows)
    for (std::size_t j = 0; j < r.size(); ++j) r[j] -= base[j];
  return hnf(rows, points.dim());
}

/// Membership by back-substitution along the HNF pivots.
inline bool contains(const IntegerLattice& lattice, const IntVector& v) {
  if (v.size() != lattice.dim())
    throw Error(ErrorKind::DimensionMismatch, "vector dimension differs from lattice dimension");
  IntVector rest = v;
  const auto& basis = lattice.basis();
  const auto& pivots = lattice.pivot_columns();
  std::size_t next_pivot = 0;
  for (std::size_t c = 0; c < rest.size(); ++c) {
    if (next_pivot < pivots.size() && pivots[next_pivot] == c) {
      const IntVector& row = basis[next_pivot];
      if (!mpz_divisible_p(rest[c].get_mpz_t(), row[c].get_mpz_t())) return false;
      Integer q = rest[c] / row[c];
      for (std::size_t j = c; j < rest.size(); ++j) rest[j] -= q * row[j];
      ++next_pivot;
    } else if (rest[c] != 0) {
      return false;
    }
  }
  return true;
}

inline bool contains(const IntegerLattice& lattice, const IntPoint& p) {
  IntVector v;
  for (auto x : p) v.emplace_back(static_cast<long>(x));
  return contains(lattice, v);
}

/// Dual lattice L* = { xi : <n, xi> in Z for all n in L } of a full-rank L.
struct DualLattice {
  std::size_t dim = 0;
  RatMatrix basis;       // rows generate L*
  Integer denominator;   // lcm of all entry denominators
};

inline DualLattice make_dual(RatMatrix basis) {
  DualLattice dual;
  dual.dim = basis.size();
  dual.denominator = 1;
  for (const auto& row : basis)
    for (const auto& x : row) dual.denominator = lcm_of(dual.denominator, x.get_den());
  dual.basis = std::move(basis);
  return dual;
}

/// Rows D with D * B^T = I for a square generator basis B (rows of B form a
/// basis of the primal lattice).
inline DualLattice dual_basis_of_generators(const IntMatrix& generators) {
  const std::size_t d = generators.size();
  for (const auto& row : generators)
    if (row.size() != d) throw Error(ErrorKind::RankDeficient, "generator matrix is not square");
  RatMatrix inv;
  try {
    inv = inverse(to_rational(generators));
  } catch (const Error&) {
    throw Error(ErrorKind::RankDeficient, "generators are linearly dependent");
  }
  return make_dual(transpose(inv));
}

inline DualLattice dual_basis(const IntegerLattice& lattice) {
  if (!lattice.full_rank())
    throw Error(ErrorKind::RankDeficient, "lattice of rank " + std::to_string(lattice.rank()) +
                                              " in dimension " + std::to_string(lattice.dim()) +
                                              " has no discrete dual");
  return dual_basis_of_generators(lattice.basis());
}

/// Integer lattice denominator * L*, in HNF; two duals are equal iff these agree
/// after scaling to a common denominator.
inline bool same_lattice(const DualLattice& a, const DualLattice& b) {
  if (a.dim != b.dim) return false;
  Integer den = lcm_of(a.denominator, b.denominator);
  auto scaled = [&](const DualLattice& x) {
    IntMatrix rows;
    for (const auto& row : x.basis) {
      IntVector r;
      for (const auto& q : row) r.push_back(Rational(q * Rational(den)).get_num());
      rows.push_back(std::move(r));
    }
    return hnf(rows, x.dim);
  };
  return scaled(a) == scaled(b);
}

/// xi is in L* iff <b, xi> is an integer for every basis row b of L.
inline bool in_dual(const IntegerLattice& lattice, const RatVector& xi) {
  for (const auto& row : lattice.basis()) {
    Rational s = 0;
    for (std::size_t j = 0; j < row.size(); ++j) s += Rational(row[j]) * xi[j];
    if (s.get_den() != 1) return false;
  }
  return true;
}

/// Representatives of L*/Z^d reduced into [0,1)^d, sorted lexicographically.
/// Generated by closing {0} under addition of the dual basis rows mod 1; the
/// result has exactly index(L) elements.
inline std::vector<RatVector> dual_coset_reps(const IntegerLattice& lattice) {
  DualLattice dual = dual_basis(lattice);
  const std::size_t d = lattice.dim();
  auto reduce = [](RatVector v) {
    for (auto& x : v) x = frac_of(x);
    return v;
  };
  std::set<RatVector> seen;
  std::deque<RatVector> frontier;
  RatVector zero(d, Rational(0));
  seen.insert(zero);
  frontier.push_back(zero);
  while (!frontier.empty()) {
    RatVector cur = std::move(frontier.front());
    frontier.pop_front();
    for (const auto& g : dual.basis) {
      RatVector next(d);
      for (std::size_t j = 0; j < d; ++j) next[j] = cur[j] + g[j];
      next = reduce(std::move(next));
      if (seen.insert(next).second) frontier.push_back(std::move(next));
    }
  }
  return {seen.begin(), seen.end()};
}

}  // namespace ipt
