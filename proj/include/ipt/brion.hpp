#pragma once

// Continuous Fourier transform F(1_P)(xi) = \int_P e^{-2 pi i <u, xi>} du of a
// full-dimensional rational polytope, evaluated by Brion's vertex-cone sum, and
// an independent oracle that sums closed-form simplex transforms.

#include <cstddef>
#include <string>
#include <vector>

#include "ipt/error.hpp"
#include "ipt/exact.hpp"
#include "ipt/polytope.hpp"
#include "ipt/precision.hpp"
#include "ipt/transform.hpp"

namespace ipt {

inline constexpr long kBrionGuardBits = 64;

struct BrionTerm {
  RatVector vertex;
  std::vector<SimplicialCone> cones;
};

inline std::vector<BrionTerm> brion_terms(const RationalPolytope& p, FanApex apex = FanApex::LexMin) {
  if (!p.full_dimensional())
    throw Error(ErrorKind::NotFullDimensional, "Brion evaluation needs a full-dimensional polytope");
  if (p.dim() > kMaxGeometryDim)
    throw Error(ErrorKind::DimensionTooLarge, "dimension exceeds 4");
  std::vector<BrionTerm> terms;
  for (const auto& v : p.vertices()) {
    BrionTerm term{v, triangulate_cone(vertex_tangent_cone(p, v), apex)};
    for (auto& cone : term.cones) cone.apex = v;
    terms.push_back(std::move(term));
  }
  return terms;
}

namespace detail {

inline void check_xi(const RationalPolytope& p, std::size_t xi_dim) {
  if (p.dim() != xi_dim)
    throw Error(ErrorKind::DimensionMismatch, "xi has dimension " + std::to_string(xi_dim) +
                                                  ", polytope has dimension " + std::to_string(p.dim()));
}

// <w, xi> at `work` bits; computed exactly before rounding when xi is rational.
inline Real inner(const IntVector& w, const RatVector& xi, long work) {
  Rational s = 0;
  for (std::size_t j = 0; j < w.size(); ++j) s += Rational(w[j]) * xi[j];
  return Real(s, work);
}

inline Real inner(const IntVector& w, const RealVector& xi, long work) {
  Real s(work);
  for (std::size_t j = 0; j < w.size(); ++j) s += xi[j].with_prec(work) * Real(w[j], work);
  return s;
}

inline PrecComplex phase_minus(const RatVector& v, const RatVector& xi, long work) {
  return exp_2pi_i(Rational(-dot(v, xi)), work);
}

inline PrecComplex phase_minus(const RatVector& v, const RealVector& xi, long work) {
  Real t(work);
  for (std::size_t j = 0; j < v.size(); ++j) t += xi[j].with_prec(work) * Real(v[j], work);
  return exp_2pi_i(-t, work);
}

// z * i^power for an integer power.
inline PrecComplex times_i_power(const PrecComplex& z, long power) {
  switch (((power % 4) + 4) % 4) {
    case 0: return z;
    case 1: return {-z.im(), z.re(), z.prec_bits()};
    case 2: return -z;
    default: return {z.im(), -z.re(), z.prec_bits()};
  }
}

inline bool is_zero_direction(const Real& value, long prec_bits) { return abs(value) < tolerance(prec_bits); }

}  // namespace detail

/// True iff no edge direction w at any vertex has <w, xi> = 0 (to within
/// 2^{-prec/2}). Edge directions are exactly the cone generators Brion uses.
template <class Vec>
bool is_generic(const RationalPolytope& p, const Vec& xi, long prec_bits = kDefaultPrecBits) {
  if (!p.full_dimensional())
    throw Error(ErrorKind::NotFullDimensional, "genericity is defined for full-dimensional polytopes");
  detail::check_xi(p, xi.size());
  const long work = prec_bits + kBrionGuardBits;
  for (const auto& v : p.vertices())
    for (const auto& w : vertex_tangent_cone(p, v))
      if (detail::is_zero_direction(detail::inner(w, xi, work), prec_bits)) return false;
  return true;
}

struct BrionEvaluation {
  PrecComplex value;
  Real error_bound;  // bound on accumulated rounding error in `value`
};

template <class Vec>
BrionEvaluation brion_evaluate(const RationalPolytope& p, const Vec& xi, long prec_bits = kDefaultPrecBits,
                               FanApex apex = FanApex::LexMin) {
  require_precision(prec_bits);
  detail::check_xi(p, xi.size());
  const long work = prec_bits + kBrionGuardBits;
  const long d = static_cast<long>(p.dim());

  PrecComplex total(work);
  Real magnitude(work);
  for (const auto& term : brion_terms(p, apex)) {
    Real cone_sum(work);
    for (const auto& cone : term.cones) {
      Real denom(1, work);
      for (const auto& w : cone.generators) {
        Real ip = detail::inner(w, xi, work);
        if (detail::is_zero_direction(ip, prec_bits))
          throw Error(ErrorKind::NonGenericDirection, "a Brion denominator vanishes at xi");
        denom = denom * ip;
      }
      cone_sum += Real(cone.det, work) / denom;
    }
    PrecComplex contribution = detail::phase_minus(term.vertex, xi, work) * cone_sum;
    magnitude += abs(contribution);
    total += contribution;
  }
  // divide by (2 pi i)^d
  Real two_pi_d(1, work);
  Real two_pi = Real::pi(work) * 2;
  for (long k = 0; k < d; ++k) two_pi_d = two_pi_d * two_pi;
  PrecComplex value = detail::times_i_power(total / two_pi_d, -d);
  Real bound = (magnitude / two_pi_d).with_prec(prec_bits) * Real::pow2(-prec_bits + 8, prec_bits);
  return {value.with_prec(prec_bits), bound};
}

template <class Vec>
PrecComplex brion_ft(const RationalPolytope& p, const Vec& xi, long prec_bits = kDefaultPrecBits,
                     FanApex apex = FanApex::LexMin) {
  return brion_evaluate(p, xi, prec_bits, apex).value;
}

namespace detail {

// t_i = <v_i, xi> and the pairwise differences, exact for rational xi.
struct Phases {
  std::vector<Real> t;
  std::vector<std::vector<Real>> diff;  // diff[i][j] = t_i - t_j
  std::vector<PrecComplex> f;           // e^{-2 pi i t_i}
};

inline Phases phases(const std::vector<RatVector>& vs, const RatVector& xi, long work, long /*prec_bits*/) {
  Phases ph;
  std::vector<Rational> t;
  for (const auto& v : vs) t.push_back(dot(v, xi));
  const std::size_t n = vs.size();
  ph.diff.assign(n, std::vector<Real>(n, Real(work)));
  for (std::size_t i = 0; i < n; ++i) {
    ph.t.emplace_back(t[i], work);
    ph.f.push_back(exp_2pi_i(Rational(-t[i]), work));
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j && t[i] == t[j])
        throw Error(ErrorKind::CoincidentPhases, "two simplex vertices have equal <v, xi>");
      ph.diff[i][j] = Real(Rational(t[i] - t[j]), work);
    }
  }
  return ph;
}

inline Phases phases(const std::vector<RatVector>& vs, const RealVector& xi, long work, long prec_bits) {
  Phases ph;
  const std::size_t n = vs.size();
  for (const auto& v : vs) {
    Real t(work);
    for (std::size_t j = 0; j < v.size(); ++j) t += xi[j].with_prec(work) * Real(v[j], work);
    ph.f.push_back(exp_2pi_i(-t, work));
    ph.t.push_back(std::move(t));
  }
  ph.diff.assign(n, std::vector<Real>(n, Real(work)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      ph.diff[i][j] = ph.t[i] - ph.t[j];
      if (i != j && abs(ph.diff[i][j]) < tolerance(prec_bits))
        throw Error(ErrorKind::CoincidentPhases, "two simplex vertices have equal <v, xi>");
    }
  return ph;
}

}  // namespace detail

/// Fourier transform of a d-simplex in closed form:
///   d! vol(simplex) * DD[t_0..t_d](e^{-2 pi i t}) / (-2 pi i)^d,
/// with t_i = <v_i, xi> and DD the divided difference (Hermite-Genocchi).
template <class Vec>
PrecComplex simplex_ft_oracle(const std::vector<RatVector>& vertices, const Vec& xi,
                              long prec_bits = kDefaultPrecBits) {
  require_precision(prec_bits);
  if (vertices.empty()) throw Error(ErrorKind::DegenerateSimplex, "simplex has no vertices");
  const std::size_t d = vertices.size() - 1;
  if (xi.size() != d) throw Error(ErrorKind::DimensionMismatch, "xi dimension differs from simplex dimension");
  RatMatrix edges;
  for (std::size_t i = 1; i <= d; ++i) {
    if (vertices[i].size() != d) throw Error(ErrorKind::DimensionMismatch, "vertex of wrong dimension");
    edges.push_back(subtract(vertices[i], vertices[0]));
  }
  Rational det = d == 0 ? Rational(1) : determinant(edges);
  if (det == 0) throw Error(ErrorKind::DegenerateSimplex, "simplex vertices are affinely dependent");
  Rational scaled_volume = abs(det);  // d! * vol

  const long work = prec_bits + 2 * kBrionGuardBits;
  detail::Phases ph = detail::phases(vertices, xi, work, prec_bits);
  std::vector<PrecComplex> table = ph.f;
  for (std::size_t level = 1; level <= d; ++level)
    for (std::size_t i = d; i >= level; --i)
      table[i] = (table[i] - table[i - 1]) / ph.diff[i][i - level];
  PrecComplex dd = table[d];

  Real two_pi_d(1, work);
  Real two_pi = Real::pi(work) * 2;
  for (std::size_t k = 0; k < d; ++k) two_pi_d = two_pi_d * two_pi;
  // 1 / (-2 pi i)^d = (-1)^d i^{-d} / (2 pi)^d
  PrecComplex value = detail::times_i_power(dd / two_pi_d, -static_cast<long>(d));
  if (d % 2 == 1) value = -value;
  value = value * Real(scaled_volume, work);
  return value.with_prec(prec_bits);
}

/// Sum of simplex transforms over a pulling triangulation of P.
template <class Vec>
PrecComplex polytope_ft_oracle(const RationalPolytope& p, const Vec& xi, long prec_bits = kDefaultPrecBits,
                               FanApex apex = FanApex::LexMin) {
  if (!p.full_dimensional())
    throw Error(ErrorKind::NotFullDimensional, "oracle needs a full-dimensional polytope");
  detail::check_xi(p, xi.size());
  const long work = prec_bits + kBrionGuardBits;
  PrecComplex total(work);
  for (const auto& simplex : triangulate_polytope(p, apex)) total += simplex_ft_oracle(simplex, xi, work);
  return total.with_prec(prec_bits);
}

/// F(1_P)(xi*) via Brion's formula.
inline BrionEvaluation ft_signature_evaluate(const RationalPolytope& p, long prec_bits = kDefaultPrecBits) {
  SignaturePoint star = xi_star(p.dim(), prec_bits);
  try {
    return brion_evaluate(p, star.coords, prec_bits);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::NonGenericDirection)
      throw Error(ErrorKind::NonGenericDirection, "xi* is not generic for this polytope; this should be impossible");
    throw;
  }
}

inline PrecComplex ft_signature(const RationalPolytope& p, long prec_bits = kDefaultPrecBits) {
  return ft_signature_evaluate(p, prec_bits).value;
}

}  // namespace ipt
