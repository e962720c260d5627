#pragma once

// Fourier analysis on G = Z/k_1 x ... x Z/k_d. Group elements are indexed
// row-major over residues (xi_1, ..., xi_d), xi_j in [0, k_j). Integer points
// of the half-open box [-k_j/2, k_j/2) map bijectively onto G by reduction.

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "ipt/error.hpp"
#include "ipt/exact.hpp"
#include "ipt/point_set.hpp"
#include "ipt/precision.hpp"
#include "ipt/transform.hpp"

namespace ipt {

inline constexpr std::size_t kMaxGroupOrder = 1u << 16;

class GroupSpec {
 public:
  explicit GroupSpec(std::vector<long> moduli) : moduli_(std::move(moduli)) {
    if (moduli_.empty()) throw Error(ErrorKind::InvalidArgument, "group needs at least one modulus");
    order_ = 1;
    for (long k : moduli_) {
      if (k < 1) throw Error(ErrorKind::InvalidArgument, "moduli must be positive");
      order_ *= static_cast<std::size_t>(k);
      if (order_ > kMaxGroupOrder)
        throw Error(ErrorKind::InvalidArgument, "group order exceeds " + std::to_string(kMaxGroupOrder));
    }
  }

  std::size_t dim() const noexcept { return moduli_.size(); }
  const std::vector<long>& moduli() const noexcept { return moduli_; }
  std::size_t order() const noexcept { return order_; }

  /// Smallest integer coordinate of the box along axis j.
  long box_low(std::size_t j) const { return -(moduli_[j] / 2); }

  bool in_box(const IntPoint& p) const {
    if (p.size() != dim()) return false;
    for (std::size_t j = 0; j < dim(); ++j)
      if (p[j] < box_low(j) || p[j] >= box_low(j) + moduli_[j]) return false;
    return true;
  }

  std::vector<long> residues(std::size_t index) const {
    std::vector<long> r(dim());
    for (std::size_t j = dim(); j-- > 0;) {
      r[j] = static_cast<long>(index % static_cast<std::size_t>(moduli_[j]));
      index /= static_cast<std::size_t>(moduli_[j]);
    }
    return r;
  }

  /// Row-major index of the group element that the integer point reduces to.
  std::size_t index_of(const IntPoint& p) const {
    std::size_t idx = 0;
    for (std::size_t j = 0; j < dim(); ++j) {
      long k = moduli_[j];
      long r = static_cast<long>(((p[j] % k) + k) % k);
      idx = idx * static_cast<std::size_t>(k) + static_cast<std::size_t>(r);
    }
    return idx;
  }

  /// The box point representing a group element.
  IntPoint box_point(std::size_t index) const {
    auto r = residues(index);
    IntPoint p(dim());
    for (std::size_t j = 0; j < dim(); ++j) {
      long k = moduli_[j];
      long low = box_low(j);
      p[j] = ((r[j] - low) % k + k) % k + low;
    }
    return p;
  }

  friend bool operator==(const GroupSpec&, const GroupSpec&) = default;

 private:
  std::vector<long> moduli_;
  std::size_t order_ = 1;
};

struct CoefficientTable {
  GroupSpec group;
  std::vector<PrecComplex> values;  // one per group element, row-major
  long prec_bits = kDefaultPrecBits;
};

inline bool fits_box(const IntPointSet& s, const GroupSpec& g) {
  if (s.dim() != g.dim()) return false;
  for (const auto& p : s)
    if (!g.in_box(p)) return false;
  return true;
}

namespace detail {

// e^{2 pi i r / L} for r in [0, L), L = lcm of the moduli. Every character
// value on G is one of these.
class RootTable {
 public:
  RootTable(const GroupSpec& g, long prec_bits) {
    Integer l = 1;
    for (long k : g.moduli()) l = lcm_of(l, Integer(k));
    lcm_ = l.get_si();
    for (long k : g.moduli()) step_.push_back(lcm_ / k);
    roots_.reserve(static_cast<std::size_t>(lcm_));
    for (long r = 0; r < lcm_; ++r) roots_.push_back(exp_2pi_i(make_rational(r, lcm_), prec_bits));
  }

  /// e^{2 pi i sign * sum_j a_j b_j / k_j}
  const PrecComplex& character(const std::vector<long>& a, const IntPoint& b, int sign) const {
    long acc = 0;
    for (std::size_t j = 0; j < a.size(); ++j) {
      long term = ((a[j] % lcm_) * (static_cast<long>(b[j]) % lcm_)) % lcm_;
      acc = (acc + term * step_[j]) % lcm_;
    }
    if (sign < 0) acc = -acc;
    acc = ((acc % lcm_) + lcm_) % lcm_;
    return roots_[static_cast<std::size_t>(acc)];
  }

 private:
  long lcm_ = 1;
  std::vector<long> step_;
  std::vector<PrecComplex> roots_;
};

}  // namespace detail

/// c_xi = sum_{m in S} e^{-2 pi i sum_j m_j xi_j / k_j}; equals sigma_S(-xi/k).
inline CoefficientTable forward_dft(const IntPointSet& s, const GroupSpec& g,
                                    long prec_bits = kDefaultPrecBits) {
  require_precision(prec_bits);
  if (s.dim() != g.dim()) throw Error(ErrorKind::DimensionMismatch, "set and group dimensions differ");
  if (!fits_box(s, g)) throw Error(ErrorKind::BoxOverflow, "point set leaves the half-open group box");
  const long work = prec_bits + kGuardBits;
  detail::RootTable roots(g, work);
  CoefficientTable table{g, {}, prec_bits};
  table.values.reserve(g.order());
  for (std::size_t i = 0; i < g.order(); ++i) {
    auto xi = g.residues(i);
    PrecComplex c(work);
    for (const auto& m : s) c += roots.character(xi, m, -1);
    table.values.push_back(c.with_prec(prec_bits));
  }
  return table;
}

/// f(n) = (1/|G|) sum_xi c_xi chi_xi(n), indexed like the table (row-major
/// over group elements; use GroupSpec::box_point for the box representative).
inline std::vector<PrecComplex> inverse_dft(const CoefficientTable& t, long prec_bits = kDefaultPrecBits) {
  require_precision(prec_bits);
  const GroupSpec& g = t.group;
  if (t.values.size() != g.order())
    throw Error(ErrorKind::InvalidArgument, "table has " + std::to_string(t.values.size()) +
                                                " values for a group of order " + std::to_string(g.order()));
  const long work = prec_bits + kGuardBits;
  detail::RootTable roots(g, work);
  std::vector<std::vector<long>> xis;
  xis.reserve(g.order());
  for (std::size_t i = 0; i < g.order(); ++i) xis.push_back(g.residues(i));
  Real order(static_cast<long>(g.order()), work);

  std::vector<PrecComplex> f;
  f.reserve(g.order());
  for (std::size_t n_idx = 0; n_idx < g.order(); ++n_idx) {
    IntPoint n = g.box_point(n_idx);
    PrecComplex acc(work);
    for (std::size_t i = 0; i < g.order(); ++i) acc += t.values[i] * roots.character(xis[i], n, +1);
    f.push_back((acc / order).with_prec(prec_bits));
  }
  return f;
}

/// Recovers S from its coefficient table: inverse transform, then round each
/// value to 0 or 1. Values farther than 1/4 from both are rejected.
inline IntPointSet reconstruct_set(const CoefficientTable& t) {
  const long prec = t.prec_bits;
  auto f = inverse_dft(t, prec);
  const Real quarter = Real::pow2(-2, prec);
  const PrecComplex one(1, 0, prec);
  std::vector<IntPoint> points;
  for (std::size_t i = 0; i < f.size(); ++i) {
    Real to_zero = abs(f[i]);
    Real to_one = abs(f[i] - one);
    if (to_one <= quarter) {
      points.push_back(t.group.box_point(i));
    } else if (!(to_zero <= quarter)) {
      throw Error(ErrorKind::NotAnIndicator,
                  "value at group element " + std::to_string(i) + " is not near 0 or 1");
    }
  }
  return IntPointSet(t.group.dim(), std::move(points));
}

/// Largest |c_xi - sigma_S(-xi_1/k_1, ..., -xi_d/k_d)| over the group.
inline Real identification_error(const IntPointSet& s, const CoefficientTable& t) {
  const GroupSpec& g = t.group;
  Real worst(t.prec_bits);
  for (std::size_t i = 0; i < g.order(); ++i) {
    auto xi = g.residues(i);
    RatVector point(g.dim());
    for (std::size_t j = 0; j < g.dim(); ++j) point[j] = make_rational(Integer(-xi[j]), Integer(g.moduli()[j]));
    Real err = abs(t.values[i] - sigma_eval(s, point, t.prec_bits));
    if (err > worst) worst = err;
  }
  return worst;
}

}  // namespace ipt
