#pragma once

// The integer point transform sigma_S(xi) = sum_{n in S} e^{2 pi i <n, xi>}
// and the analyses built on it.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ipt/error.hpp"
#include "ipt/exact.hpp"
#include "ipt/lattice.hpp"
#include "ipt/point_set.hpp"
#include "ipt/polytope.hpp"
#include "ipt/precision.hpp"

namespace ipt {

using RealVector = std::vector<Real>;

namespace detail {

inline void check_dims(const IntPointSet& s, std::size_t xi_dim) {
  if (s.dim() != xi_dim)
    throw Error(ErrorKind::DimensionMismatch, "point set has dimension " + std::to_string(s.dim()) +
                                                  " but xi has dimension " + std::to_string(xi_dim));
}

inline Rational turns(const IntPoint& n, std::span<const Rational> xi) {
  Rational t = 0;
  for (std::size_t j = 0; j < n.size(); ++j) t += Rational(static_cast<long>(n[j])) * xi[j];
  return t;
}

inline Real turns(const IntPoint& n, std::span<const Real> xi, long work) {
  Real t(work);
  for (std::size_t j = 0; j < n.size(); ++j) {
    if (n[j] == 0) continue;
    t += xi[j].with_prec(work) * static_cast<long>(n[j]);
  }
  return t;
}

}  // namespace detail

/// sigma_S at an exact rational point; phases are reduced mod 1 exactly.
inline PrecComplex sigma_eval(const IntPointSet& s, std::span<const Rational> xi,
                              long prec_bits = kDefaultPrecBits) {
  require_precision(prec_bits);
  detail::check_dims(s, xi.size());
  const long work = prec_bits + kGuardBits;
  PrecComplex sum(work);
  for (const auto& n : s) sum += exp_2pi_i(detail::turns(n, xi), work);
  return sum.with_prec(prec_bits);
}

/// sigma_S at a real point, summed in canonical point order.
inline PrecComplex sigma_eval(const IntPointSet& s, std::span<const Real> xi,
                              long prec_bits = kDefaultPrecBits) {
  require_precision(prec_bits);
  detail::check_dims(s, xi.size());
  const long work = prec_bits + kGuardBits;
  PrecComplex sum(work);
  for (const auto& n : s) sum += exp_2pi_i(detail::turns(n, xi, work), work);
  return sum.with_prec(prec_bits);
}

inline PrecComplex sigma_eval(const IntPointSet& s, const RatVector& xi, long prec_bits = kDefaultPrecBits) {
  return sigma_eval(s, std::span<const Rational>(xi), prec_bits);
}
inline PrecComplex sigma_eval(const IntPointSet& s, const RealVector& xi, long prec_bits = kDefaultPrecBits) {
  return sigma_eval(s, std::span<const Real>(xi), prec_bits);
}

/// The first n primes by trial division.
inline std::vector<long> first_primes(std::size_t n) {
  std::vector<long> primes;
  for (long c = 2; primes.size() < n; ++c) {
    bool prime = true;
    for (long p : primes) {
      if (p * p > c) break;
      if (c % p == 0) {
        prime = false;
        break;
      }
    }
    if (prime) primes.push_back(c);
  }
  return primes;
}

/// The evaluation point (sqrt(2), sqrt(3), sqrt(5), ..., sqrt(p_d)) / pi.
/// Coordinates are stored with kGuardBits extra bits of precision.
struct SignaturePoint {
  std::size_t dim = 0;
  RealVector coords;
  long prec_bits = kDefaultPrecBits;
};

inline SignaturePoint xi_star(std::size_t d, long prec_bits = kDefaultPrecBits) {
  require_precision(prec_bits);
  if (d == 0) throw Error(ErrorKind::InvalidArgument, "signature point needs d >= 1");
  const long work = prec_bits + kGuardBits;
  SignaturePoint point{d, {}, prec_bits};
  Real pi = Real::pi(work);
  for (long p : first_primes(d)) point.coords.push_back(sqrt(Real(p, work)) / pi);
  return point;
}

/// sigma_S(xi*): a single complex number that distinguishes finite point sets.
inline PrecComplex signature(const IntPointSet& s, long prec_bits = kDefaultPrecBits) {
  if (s.dim() == 0) return PrecComplex(static_cast<long>(s.size()), 0, prec_bits);
  return sigma_eval(s, xi_star(s.dim(), prec_bits).coords, prec_bits);
}

/// Rounding error bound for a signature sum over `count` points.
inline Real signature_error_bound(std::size_t count, long prec_bits) {
  return Real::pow2(-prec_bits + 6, prec_bits) * static_cast<long>(std::max<std::size_t>(count, 1));
}

/// |sigma_S(xi)| = |S| exactly when all phases agree, i.e. when xi lies in the
/// dual of the difference lattice. Every point of L_S* is such a maximum; the
/// converse holds iff the difference lattice equals L_S (for instance when
/// 0 is in S), which `complete` reports.
struct MaximaAnalysis {
  IntegerLattice lattice;        // L_S
  DualLattice dual;              // L_S*
  std::vector<RatVector> reps;   // L_S*/Z^d in [0,1)^d
  bool complete = false;         // reps are all the maxima mod Z^d
};

inline MaximaAnalysis maxima_analysis(const IntPointSet& s) {
  IntegerLattice lattice = integer_span(s);
  DualLattice dual = dual_basis(lattice);
  std::vector<RatVector> reps = dual_coset_reps(lattice);
  bool complete = difference_span(s) == lattice;
  return {std::move(lattice), std::move(dual), std::move(reps), complete};
}

inline bool is_absolute_max(const IntPointSet& s, const RatVector& xi, long prec_bits = kDefaultPrecBits) {
  Real gap = abs(abs(sigma_eval(s, xi, prec_bits)) - Real(static_cast<long>(s.size()), prec_bits));
  return gap < tolerance(prec_bits);
}

inline bool is_absolute_max(const IntPointSet& s, const RealVector& xi, long prec_bits = kDefaultPrecBits) {
  Real gap = abs(abs(sigma_eval(s, xi, prec_bits)) - Real(static_cast<long>(s.size()), prec_bits));
  return gap < tolerance(prec_bits);
}

/// True iff the lattice points of P integrally span all of Z^d.
inline bool is_spanning(const RationalPolytope& p) {
  IntPointSet pts = lattice_points(p);
  if (pts.empty()) return false;
  IntegerLattice l = integer_span(pts);
  return l.full_rank() && *l.index() == 1;
}

struct SymmetryReport {
  bool symmetric = false;        // Im sigma_A(xi/k) vanishes on the whole group box
  bool oracle = false;           // A == -A as sets
  bool on_set_criterion = false; // Im sigma_A(xi/k) vanishes for xi in A only
  bool mismatch = false;         // symmetric != oracle
  long k = 0;
  long prec_bits = kDefaultPrecBits;
  Real max_imag;                 // largest |Im sigma_A(xi/k)| over the box
};

/// Smallest even k with both A and -A inside the half-open box [-k/2, k/2)^d.
/// A alone is not enough: with k = 2, A = {-1} and -A = {1} are the same
/// group element, and Im sigma_A vanishes on the whole group.
inline long symmetric_box_size(const IntPointSet& a) {
  std::int64_t radius = 0;
  for (const auto& p : a)
    for (auto x : p) radius = std::max(radius, x < 0 ? -x : x);
  return static_cast<long>(2 * (radius + 1));
}

inline SymmetryReport central_symmetry_report(const IntPointSet& a, long prec_bits = kDefaultPrecBits) {
  require_precision(prec_bits);
  SymmetryReport report;
  report.prec_bits = prec_bits;
  report.k = symmetric_box_size(a);
  report.oracle = a.negated() == a;
  report.max_imag = Real(prec_bits);
  const Real tol = tolerance(prec_bits);
  const std::size_t d = a.dim();
  const Rational inv_k(1, report.k);

  auto imag_at = [&](const IntPoint& xi) {
    RatVector scaled(d);
    for (std::size_t j = 0; j < d; ++j) scaled[j] = Rational(static_cast<long>(xi[j])) * inv_k;
    return abs(sigma_eval(a, scaled, prec_bits).im());
  };

  report.symmetric = true;
  const std::int64_t lo = -report.k / 2, hi = report.k / 2 - 1;
  IntPoint xi(d, lo);
  while (true) {
    Real im = imag_at(xi);
    if (im > report.max_imag) report.max_imag = im;
    if (!(im < tol)) report.symmetric = false;
    std::size_t j = d;
    bool done = true;
    while (j > 0) {
      --j;
      if (xi[j] < hi) {
        ++xi[j];
        done = false;
        break;
      }
      xi[j] = lo;
    }
    if (done) break;
  }

  report.on_set_criterion = true;
  for (const auto& p : a)
    if (!(imag_at(p) < tol)) report.on_set_criterion = false;
  report.mismatch = report.symmetric != report.oracle;
  return report;
}

inline bool central_symmetry_test(const IntPointSet& a, long prec_bits = kDefaultPrecBits) {
  return central_symmetry_report(a, prec_bits).symmetric;
}

namespace detail {

inline RatMatrix checked_inverse(const IntMatrix& m) {
  const std::size_t d = m.size();
  for (const auto& row : m)
    if (row.size() != d) throw Error(ErrorKind::SingularMatrix, "lattice matrix is not square");
  return inverse(to_rational(m));
}

// Points k in Z^d with M k in P.
inline IntPointSet preimage_points(const RationalPolytope& p, const IntMatrix& m) {
  if (m.size() != p.dim()) throw Error(ErrorKind::DimensionMismatch, "matrix and polytope dimensions differ");
  RatMatrix inv = checked_inverse(m);
  std::vector<RatVector> pre;
  for (const auto& v : p.vertices()) pre.push_back(mat_vec(inv, v));
  return lattice_points(convex_hull(pre));
}

// M^T xi for exact or real xi.
inline RatVector transpose_apply(const IntMatrix& m, const RatVector& xi) {
  return mat_vec(transpose(to_rational(m)), xi);
}

inline RealVector transpose_apply(const IntMatrix& m, const RealVector& xi) {
  const std::size_t d = m.size();
  long prec = xi.empty() ? kMinPrecBits : xi[0].prec();
  RealVector out;
  for (std::size_t j = 0; j < d; ++j) {
    Real s(prec);
    for (std::size_t i = 0; i < d; ++i) s += Real(m[i][j], prec) * xi[i];
    out.push_back(std::move(s));
  }
  return out;
}

}  // namespace detail

/// Transform of P relative to the lattice M(Z^d): the sum of e^{2 pi i <n, xi>}
/// over n in M(Z^d) ∩ P, computed as sigma over M^{-1}(P) ∩ Z^d at M^T xi.
template <class Vec>
PrecComplex sigma_relative(const RationalPolytope& p, const IntMatrix& m, const Vec& xi,
                           long prec_bits = kDefaultPrecBits) {
  IntPointSet pre = detail::preimage_points(p, m);
  return sigma_eval(pre, detail::transpose_apply(m, xi), prec_bits);
}

struct CollisionResult {
  Real min_gap;
  std::size_t first = 0, second = 0;
  std::vector<PrecComplex> signatures;
};

/// Minimum pairwise |signature(S_i) - signature(S_j)| over a corpus. Ties keep
/// the lexicographically first pair (i < j).
inline CollisionResult collision_scan(const std::vector<IntPointSet>& corpus,
                                      long prec_bits = kDefaultPrecBits) {
  if (corpus.size() < 2) throw Error(ErrorKind::InvalidArgument, "collision scan needs two sets");
  CollisionResult result;
  result.signatures.reserve(corpus.size());
  for (const auto& s : corpus) result.signatures.push_back(signature(s, prec_bits));
  bool first = true;
  for (std::size_t i = 0; i < corpus.size(); ++i)
    for (std::size_t j = i + 1; j < corpus.size(); ++j) {
      Real gap = abs(result.signatures[i] - result.signatures[j]);
      if (first || gap < result.min_gap) {
        result.min_gap = gap;
        result.first = i;
        result.second = j;
        first = false;
      }
    }
  return result;
}

}  // namespace ipt
