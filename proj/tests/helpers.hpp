#pragma once

#include <cstdint>
#include <initializer_list>
#include <random>
#include <string>
#include <vector>

#include "ipt/ipt.hpp"

namespace ipt::testing {

inline IntPointSet pts(std::size_t dim, std::vector<IntPoint> points) { return IntPointSet(dim, std::move(points)); }

inline RatVector rv(std::initializer_list<const char*> items) {
  RatVector v;
  for (const char* s : items) v.push_back(parse_rational(s));
  return v;
}

inline IntVector iv(std::initializer_list<long> items) {
  IntVector v;
  for (long x : items) v.emplace_back(x);
  return v;
}

inline IntMatrix im(std::initializer_list<std::initializer_list<long>> rows) {
  IntMatrix m;
  for (auto r : rows) m.push_back(iv(r));
  return m;
}

inline std::vector<RatVector> rpoints(std::initializer_list<std::initializer_list<long>> rows) {
  std::vector<RatVector> out;
  for (auto r : rows) {
    RatVector v;
    for (long x : r) v.emplace_back(x);
    out.push_back(v);
  }
  return out;
}

inline const IntPointSet& tetrahedron_points() {
  static const IntPointSet s(3, {{0, 0, 0}, {1, 1, 0}, {0, 1, 1}, {1, 0, 1}});
  return s;
}

inline RationalPolytope tetrahedron() {
  return convex_hull(rpoints({{0, 0, 0}, {1, 1, 0}, {0, 1, 1}, {1, 0, 1}}));
}

inline RationalPolytope reeve(long h) { return convex_hull(rpoints({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {1, 1, h}})); }

inline IntPointSet random_set(std::mt19937_64& rng, std::size_t dim, long lo, long hi, std::size_t max_size) {
  std::uniform_int_distribution<long> coord(lo, hi);
  std::uniform_int_distribution<std::size_t> count(0, max_size);
  std::vector<IntPoint> out(count(rng), IntPoint(dim));
  for (auto& p : out)
    for (auto& x : p) x = coord(rng);
  return IntPointSet(dim, std::move(out));
}

inline Rational random_rational(std::mt19937_64& rng, long max_num, long max_den) {
  std::uniform_int_distribution<long> num(-max_num, max_num), den(1, max_den);
  return make_rational(Integer(num(rng)), Integer(den(rng)));
}

inline double to_d(const Real& x) { return x.to_double(); }

inline bool near(const PrecComplex& a, const PrecComplex& b, long bits) {
  return abs(a - b) < Real::pow2(-bits, std::max(a.prec_bits(), b.prec_bits()));
}

}  // namespace ipt::testing

#include <cmath>
#include <complex>

namespace ipt::testing {

// Plain double-precision sum, used as an independent low-precision oracle.
inline std::complex<double> sigma_double(const IntPointSet& s, const std::vector<double>& xi) {
  std::complex<double> sum = 0;
  for (const auto& n : s) {
    double t = 0;
    for (std::size_t j = 0; j < xi.size(); ++j) t += static_cast<double>(n[j]) * xi[j];
    sum += std::polar(1.0, 2 * M_PI * t);
  }
  return sum;
}

inline double dist(const PrecComplex& a, std::complex<double> b) {
  return std::abs(std::complex<double>(a.re().to_double(), a.im().to_double()) - b);
}

}  // namespace ipt::testing
