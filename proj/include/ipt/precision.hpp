#pragma once

// Arbitrary-precision real and complex numbers over MPFR. Every value carries
// its own precision in bits; binary operations produce a result at the larger
// of the two operand precisions.

#include <mpfr.h>

#include <algorithm>
#include <cstdint>
#include <string>
#include <utility>

#include "ipt/error.hpp"
#include "ipt/exact.hpp"

namespace ipt {

inline constexpr long kDefaultPrecBits = 256;
inline constexpr long kMinPrecBits = 64;
inline constexpr long kGuardBits = 32;

inline void require_precision(long prec_bits) {
  if (prec_bits < kMinPrecBits)
    throw Error(ErrorKind::InvalidPrecision,
                "precision " + std::to_string(prec_bits) + " is below the minimum of 64 bits");
}

class Real {
 public:
  explicit Real(long prec_bits = kMinPrecBits) {
    mpfr_init2(v_, prec_bits);
    mpfr_set_zero(v_, 1);
  }
  Real(long value, long prec_bits) {
    mpfr_init2(v_, prec_bits);
    mpfr_set_si(v_, value, MPFR_RNDN);
  }
  Real(const Rational& value, long prec_bits) {
    mpfr_init2(v_, prec_bits);
    mpfr_set_q(v_, value.get_mpq_t(), MPFR_RNDN);
  }
  Real(const Integer& value, long prec_bits) {
    mpfr_init2(v_, prec_bits);
    mpfr_set_z(v_, value.get_mpz_t(), MPFR_RNDN);
  }
  /// Parses a decimal string such as "-1.25e-3". Throws InvalidArgument.
  Real(const std::string& text, long prec_bits) {
    mpfr_init2(v_, prec_bits);
    char* end = nullptr;
    mpfr_strtofr(v_, text.c_str(), &end, 10, MPFR_RNDN);
    if (text.empty() || end == text.c_str() || *end != '\0') {
      mpfr_clear(v_);
      throw Error(ErrorKind::InvalidArgument, "not a decimal number: '" + text + "'");
    }
  }
  Real(const Real& other) {
    mpfr_init2(v_, mpfr_get_prec(other.v_));
    mpfr_set(v_, other.v_, MPFR_RNDN);
  }
  Real(Real&& other) noexcept {
    mpfr_init2(v_, MPFR_PREC_MIN);
    mpfr_swap(v_, other.v_);
  }
  Real& operator=(const Real& other) {
    if (this != &other) {
      mpfr_set_prec(v_, mpfr_get_prec(other.v_));
      mpfr_set(v_, other.v_, MPFR_RNDN);
    }
    return *this;
  }
  Real& operator=(Real&& other) noexcept {
    mpfr_swap(v_, other.v_);
    return *this;
  }
  ~Real() { mpfr_clear(v_); }

  long prec() const noexcept { return static_cast<long>(mpfr_get_prec(v_)); }

  /// Copy of this value rounded to a different precision.
  Real with_prec(long prec_bits) const {
    Real r(prec_bits);
    mpfr_set(r.v_, v_, MPFR_RNDN);
    return r;
  }

  mpfr_srcptr get() const noexcept { return v_; }
  mpfr_ptr get() noexcept { return v_; }

  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  int sign() const { return mpfr_sgn(v_); }

  /// Shortest-style "%g" rendering with the given number of significant digits.
  std::string to_string(int digits) const {
    char* buf = nullptr;
    mpfr_asprintf(&buf, "%.*Rg", digits, v_);
    std::string s(buf);
    mpfr_free_str(buf);
    if (s == "-0") s = "0";
    return s;
  }

  friend Real operator-(const Real& a) {
    Real r(a.prec());
    mpfr_neg(r.v_, a.v_, MPFR_RNDN);
    return r;
  }

#define IPT_REAL_BINOP(op, fn)                                   \
  friend Real operator op(const Real& a, const Real& b) {        \
    Real r(std::max(a.prec(), b.prec()));                        \
    fn(r.v_, a.v_, b.v_, MPFR_RNDN);                             \
    return r;                                                    \
  }                                                              \
  friend Real operator op(const Real& a, long b) {               \
    Real r(a.prec());                                            \
    fn##_si(r.v_, a.v_, b, MPFR_RNDN);                           \
    return r;                                                    \
  }                                                              \
  Real& operator op##=(const Real& b) {                          \
    if (b.prec() > prec()) mpfr_prec_round(v_, b.prec(), MPFR_RNDN); \
    fn(v_, v_, b.v_, MPFR_RNDN);                                 \
    return *this;                                                \
  }
  IPT_REAL_BINOP(+, mpfr_add)
  IPT_REAL_BINOP(-, mpfr_sub)
  IPT_REAL_BINOP(*, mpfr_mul)
  IPT_REAL_BINOP(/, mpfr_div)
#undef IPT_REAL_BINOP

  friend int compare(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_); }
  friend bool operator<(const Real& a, const Real& b) { return compare(a, b) < 0; }
  friend bool operator>(const Real& a, const Real& b) { return compare(a, b) > 0; }
  friend bool operator<=(const Real& a, const Real& b) { return compare(a, b) <= 0; }
  friend bool operator>=(const Real& a, const Real& b) { return compare(a, b) >= 0; }
  friend bool operator==(const Real& a, const Real& b) { return compare(a, b) == 0; }

  friend Real abs(const Real& a) {
    Real r(a.prec());
    mpfr_abs(r.v_, a.v_, MPFR_RNDN);
    return r;
  }
  friend Real sqrt(const Real& a) {
    Real r(a.prec());
    mpfr_sqrt(r.v_, a.v_, MPFR_RNDN);
    return r;
  }
  friend Real floor(const Real& a) {
    Real r(a.prec());
    mpfr_floor(r.v_, a.v_);
    return r;
  }
  friend Real exp(const Real& a) {
    Real r(a.prec());
    mpfr_exp(r.v_, a.v_, MPFR_RNDN);
    return r;
  }
  friend Real hypot(const Real& a, const Real& b) {
    Real r(std::max(a.prec(), b.prec()));
    mpfr_hypot(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
  }
  /// (sin a, cos a) from a single MPFR call.
  friend std::pair<Real, Real> sin_cos(const Real& a) {
    Real s(a.prec()), c(a.prec());
    mpfr_sin_cos(s.v_, c.v_, a.v_, MPFR_RNDN);
    return {std::move(s), std::move(c)};
  }

  static Real pi(long prec_bits) {
    Real r(prec_bits);
    mpfr_const_pi(r.v_, MPFR_RNDN);
    return r;
  }
  /// Exactly 2^exponent.
  static Real pow2(long exponent, long prec_bits) {
    Real r(prec_bits);
    mpfr_set_ui_2exp(r.v_, 1, exponent, MPFR_RNDN);
    return r;
  }

 private:
  mpfr_t v_;
};

/// Threshold used for equality decisions on values computed at `prec_bits`.
inline Real tolerance(long prec_bits) { return Real::pow2(-prec_bits / 2, prec_bits); }

class PrecComplex {
 public:
  explicit PrecComplex(long prec_bits = kDefaultPrecBits)
      : re_(prec_bits), im_(prec_bits), prec_bits_(prec_bits) {}
  PrecComplex(Real re, Real im, long prec_bits)
      : re_(std::move(re)), im_(std::move(im)), prec_bits_(prec_bits) {}
  PrecComplex(long re, long im, long prec_bits)
      : re_(re, prec_bits), im_(im, prec_bits), prec_bits_(prec_bits) {}

  const Real& re() const noexcept { return re_; }
  const Real& im() const noexcept { return im_; }
  long prec_bits() const noexcept { return prec_bits_; }

  PrecComplex with_prec(long prec_bits) const {
    return {re_.with_prec(prec_bits), im_.with_prec(prec_bits), prec_bits};
  }

  friend PrecComplex operator+(const PrecComplex& a, const PrecComplex& b) {
    return {a.re_ + b.re_, a.im_ + b.im_, std::max(a.prec_bits_, b.prec_bits_)};
  }
  friend PrecComplex operator-(const PrecComplex& a, const PrecComplex& b) {
    return {a.re_ - b.re_, a.im_ - b.im_, std::max(a.prec_bits_, b.prec_bits_)};
  }
  friend PrecComplex operator-(const PrecComplex& a) { return {-a.re_, -a.im_, a.prec_bits_}; }
  friend PrecComplex operator*(const PrecComplex& a, const PrecComplex& b) {
    return {a.re_ * b.re_ - a.im_ * b.im_, a.re_ * b.im_ + a.im_ * b.re_,
            std::max(a.prec_bits_, b.prec_bits_)};
  }
  friend PrecComplex operator*(const PrecComplex& a, const Real& s) {
    return {a.re_ * s, a.im_ * s, a.prec_bits_};
  }
  friend PrecComplex operator/(const PrecComplex& a, const PrecComplex& b) {
    Real den = b.re_ * b.re_ + b.im_ * b.im_;
    return {(a.re_ * b.re_ + a.im_ * b.im_) / den, (a.im_ * b.re_ - a.re_ * b.im_) / den,
            std::max(a.prec_bits_, b.prec_bits_)};
  }
  friend PrecComplex operator/(const PrecComplex& a, const Real& s) {
    return {a.re_ / s, a.im_ / s, a.prec_bits_};
  }
  PrecComplex& operator+=(const PrecComplex& b) {
    re_ += b.re_;
    im_ += b.im_;
    prec_bits_ = std::max(prec_bits_, b.prec_bits_);
    return *this;
  }
  PrecComplex& operator-=(const PrecComplex& b) {
    re_ -= b.re_;
    im_ -= b.im_;
    prec_bits_ = std::max(prec_bits_, b.prec_bits_);
    return *this;
  }

  friend PrecComplex conj(const PrecComplex& a) { return {a.re_, -a.im_, a.prec_bits_}; }
  friend Real abs(const PrecComplex& a) { return hypot(a.re_, a.im_); }

 private:
  Real re_, im_;
  long prec_bits_;
};

/// |a - b| < 2^{-prec/2} at the coarser of the two precisions.
inline bool approx_equal(const PrecComplex& a, const PrecComplex& b) {
  long prec = std::min(a.prec_bits(), b.prec_bits());
  return abs(a - b) < tolerance(prec);
}

/// e^{2 pi i t} for a real number of turns t. The turn count is reduced into
/// [0, 1) first so large arguments do not cost precision in the angle.
inline PrecComplex exp_2pi_i(const Real& turns, long prec_bits) {
  long work = std::max(turns.prec(), prec_bits + kGuardBits);
  Real t = turns.with_prec(work);
  t -= floor(t);
  Real angle = t * (Real::pi(work) * 2);
  auto [s, c] = sin_cos(angle);
  return {c.with_prec(prec_bits), s.with_prec(prec_bits), prec_bits};
}

/// e^{2 pi i q} for an exact rational q, reduced mod 1 exactly. The quarter
/// turns are produced exactly.
inline PrecComplex exp_2pi_i(const Rational& turns, long prec_bits) {
  Rational t = frac_of(turns);
  if (t == 0) return {1, 0, prec_bits};
  if (t == Rational(1, 2)) return {-1, 0, prec_bits};
  if (t == Rational(1, 4)) return {0, 1, prec_bits};
  if (t == Rational(3, 4)) return {0, -1, prec_bits};
  long work = prec_bits + kGuardBits;
  Real angle = Real(t, work) * (Real::pi(work) * 2);
  auto [s, c] = sin_cos(angle);
  return {c.with_prec(prec_bits), s.with_prec(prec_bits), prec_bits};
}

}  // namespace ipt
