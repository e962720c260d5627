#pragma once

// Exact integer and rational linear algebra over GMP. Everything here is
// small-dimensional (d <= a handful), so plain Gaussian elimination is used.

#include <gmpxx.h>

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ipt/error.hpp"

namespace ipt {

using Integer = mpz_class;
using Rational = mpq_class;
using IntVector = std::vector<Integer>;
using RatVector = std::vector<Rational>;
using IntMatrix = std::vector<IntVector>;
using RatMatrix = std::vector<RatVector>;

inline Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw Error(ErrorKind::InvalidArgument, "zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

/// Parses "p/q", "n" or a finite decimal such as "-0.125" into an exact
/// rational. Throws InvalidArgument on anything else.
inline Rational parse_rational(std::string_view text) {
  auto fail = [&]() -> Error {
    return Error(ErrorKind::InvalidArgument,
                 "not a rational number: '" + std::string(text) + "'");
  };
  std::string s(text);
  s.erase(std::remove_if(s.begin(), s.end(), [](char c) { return c == ' ' || c == '\t'; }),
          s.end());
  if (s.empty()) throw fail();
  auto is_int = [](std::string_view t) {
    std::size_t i = (!t.empty() && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
    if (i >= t.size()) return false;
    return std::all_of(t.begin() + static_cast<std::ptrdiff_t>(i), t.end(),
                       [](char c) { return c >= '0' && c <= '9'; });
  };
  auto to_int = [](std::string t) {
    if (!t.empty() && t[0] == '+') t.erase(0, 1);
    return Integer(t, 10);
  };
  if (auto slash = s.find('/'); slash != std::string::npos) {
    std::string num = s.substr(0, slash), den = s.substr(slash + 1);
    if (!is_int(num) || !is_int(den)) throw fail();
    Integer d = to_int(den);
    if (d == 0) throw fail();
    return make_rational(to_int(num), d);
  }
  if (auto dot = s.find('.'); dot != std::string::npos) {
    std::string whole = s.substr(0, dot), frac = s.substr(dot + 1);
    bool negative = !whole.empty() && whole[0] == '-';
    if (frac.empty() && (whole.empty() || whole == "-" || whole == "+")) throw fail();
    if (whole == "-" || whole == "+" || whole.empty()) whole += "0";
    if (!is_int(whole) || (!frac.empty() && !is_int(frac)) ||
        (!frac.empty() && (frac[0] == '-' || frac[0] == '+')))
      throw fail();
    Integer scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
    Integer w = to_int(whole);
    if (w < 0) w = -w;
    Integer f = frac.empty() ? Integer(0) : Integer(frac, 10);
    Integer num = w * scale + f;
    return make_rational(negative ? Integer(-num) : num, scale);
  }
  if (!is_int(s)) throw fail();
  return Rational(to_int(s));
}

inline std::string to_string(const Rational& q) { return q.get_str(10); }

inline std::int64_t to_int64(const Integer& z) {
  if (!z.fits_slong_p()) throw Error(ErrorKind::InvalidArgument, "integer out of int64 range");
  return z.get_si();
}

inline Integer floor_of(const Rational& q) {
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

inline Integer ceil_of(const Rational& q) {
  Integer r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

/// Fractional part in [0, 1).
inline Rational frac_of(const Rational& q) { return q - Rational(floor_of(q)); }

inline Integer gcd_of(const Integer& a, const Integer& b) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

inline Integer lcm_of(const Integer& a, const Integer& b) {
  Integer l;
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return l;
}

template <class T>
inline T dot(std::span<const T> a, std::span<const T> b) {
  T s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline Rational dot(const RatVector& a, const RatVector& b) {
  return dot<Rational>(std::span<const Rational>(a), std::span<const Rational>(b));
}

inline RatVector to_rational(const IntVector& v) { return RatVector(v.begin(), v.end()); }

inline RatVector to_rational(std::span<const std::int64_t> v) {
  RatVector out;
  out.reserve(v.size());
  for (auto x : v) out.emplace_back(static_cast<long>(x));
  return out;
}

inline RatVector subtract(const RatVector& a, const RatVector& b) {
  RatVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

/// Scales a nonzero rational vector to the primitive integer vector pointing
/// the same way (denominators cleared, gcd divided out).
inline IntVector primitive(const RatVector& v) {
  Integer den = 1;
  for (const auto& x : v) den = lcm_of(den, x.get_den());
  IntVector out(v.size());
  Integer g = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    Rational scaled = v[i] * Rational(den);
    out[i] = scaled.get_num();
    g = gcd_of(g, out[i]);
  }
  if (g == 0) throw Error(ErrorKind::InvalidArgument, "zero vector has no primitive form");
  for (auto& x : out) x /= g;
  return out;
}

/// Row echelon data from exact Gaussian elimination.
struct Echelon {
  RatMatrix rows;                    // reduced row echelon form, zero rows dropped
  std::vector<std::size_t> pivots;   // pivot column of each row
  int swaps = 0;
};

inline Echelon reduced_row_echelon(RatMatrix a) {
  Echelon e;
  if (a.empty()) return e;
  const std::size_t m = a.size(), n = a[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < m; ++c) {
    std::size_t p = r;
    while (p < m && a[p][c] == 0) ++p;
    if (p == m) continue;
    if (p != r) {
      std::swap(a[p], a[r]);
      ++e.swaps;
    }
    Rational inv = 1 / a[r][c];
    for (std::size_t j = c; j < n; ++j) a[r][j] *= inv;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == r || a[i][c] == 0) continue;
      Rational f = a[i][c];
      for (std::size_t j = c; j < n; ++j) a[i][j] -= f * a[r][j];
    }
    e.pivots.push_back(c);
    ++r;
  }
  a.resize(r);
  e.rows = std::move(a);
  return e;
}

inline std::size_t rank(const RatMatrix& a) { return reduced_row_echelon(a).rows.size(); }

/// Basis of { x : a x = 0 }, one vector per free column.
inline RatMatrix nullspace(const RatMatrix& a, std::size_t columns) {
  Echelon e = reduced_row_echelon(a);
  std::vector<bool> is_pivot(columns, false);
  for (auto p : e.pivots) is_pivot[p] = true;
  RatMatrix basis;
  for (std::size_t free = 0; free < columns; ++free) {
    if (is_pivot[free]) continue;
    RatVector x(columns, Rational(0));
    x[free] = 1;
    for (std::size_t i = 0; i < e.rows.size(); ++i) x[e.pivots[i]] = -e.rows[i][free];
    basis.push_back(std::move(x));
  }
  return basis;
}

inline Rational determinant(RatMatrix a) {
  const std::size_t n = a.size();
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c] == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      std::swap(a[p], a[c]);
      det = -det;
    }
    det *= a[c][c];
    for (std::size_t i = c + 1; i < n; ++i) {
      if (a[i][c] == 0) continue;
      Rational f = a[i][c] / a[c][c];
      for (std::size_t j = c; j < n; ++j) a[i][j] -= f * a[c][j];
    }
  }
  return det;
}

inline RatMatrix to_rational(const IntMatrix& m) {
  RatMatrix out;
  out.reserve(m.size());
  for (const auto& row : m) out.push_back(to_rational(row));
  return out;
}

inline Integer determinant(const IntMatrix& m) {
  Rational d = determinant(to_rational(m));
  return d.get_num();
}

inline RatMatrix transpose(const RatMatrix& a) {
  if (a.empty()) return {};
  RatMatrix t(a[0].size(), RatVector(a.size()));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a[i].size(); ++j) t[j][i] = a[i][j];
  return t;
}

inline RatMatrix multiply(const RatMatrix& a, const RatMatrix& b) {
  const std::size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
  RatMatrix out(n, RatVector(m, Rational(0)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t l = 0; l < k; ++l) {
      if (a[i][l] == 0) continue;
      for (std::size_t j = 0; j < m; ++j) out[i][j] += a[i][l] * b[l][j];
    }
  return out;
}

/// Matrix-vector product a·x with x as a column.
inline RatVector mat_vec(const RatMatrix& a, const RatVector& x) {
  RatVector out(a.size(), Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = dot(a[i], x);
  return out;
}

inline RatMatrix inverse(const RatMatrix& a) {
  const std::size_t n = a.size();
  RatMatrix aug(n, RatVector(2 * n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i].size() != n) throw Error(ErrorKind::DimensionMismatch, "inverse of non-square matrix");
    for (std::size_t j = 0; j < n; ++j) aug[i][j] = a[i][j];
    aug[i][n + i] = 1;
  }
  Echelon e = reduced_row_echelon(std::move(aug));
  if (e.rows.size() < n || e.pivots[n - 1] != n - 1)
    throw Error(ErrorKind::SingularMatrix, "matrix is not invertible");
  RatMatrix inv(n, RatVector(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv[i][j] = e.rows[i][n + j];
  return inv;
}

inline bool is_identity(const RatMatrix& a) {
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a[i].size(); ++j)
      if (a[i][j] != (i == j ? 1 : 0)) return false;
  return true;
}

}  // namespace ipt
