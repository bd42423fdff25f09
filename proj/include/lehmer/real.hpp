#pragma once

#include <mpfr.h>

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "lehmer/bigint.hpp"

namespace lehmer {

/// Owning wrapper around an mpfr_t. Arithmetic rounds to nearest at the
/// larger precision of the operands.
class Real {
 public:
  explicit Real(mpfr_prec_t prec = 53) { mpfr_init2(v_, prec), mpfr_set_zero(v_, 1); }
  Real(double x, mpfr_prec_t prec) {
    mpfr_init2(v_, prec);
    mpfr_set_d(v_, x, MPFR_RNDN);
  }
  Real(const Int& x, mpfr_prec_t prec) {
    mpfr_init2(v_, prec);
    mpfr_set_z(v_, x.get_mpz_t(), MPFR_RNDN);
  }
  Real(const Real& o) {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  Real(Real&& o) noexcept {
    mpfr_init2(v_, MPFR_PREC_MIN);
    mpfr_swap(v_, o.v_);
  }
  Real& operator=(const Real& o) {
    if (this != &o) {
      mpfr_set_prec(v_, mpfr_get_prec(o.v_));
      mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
  }
  Real& operator=(Real&& o) noexcept {
    mpfr_swap(v_, o.v_);
    return *this;
  }
  ~Real() { mpfr_clear(v_); }

  mpfr_prec_t prec() const { return mpfr_get_prec(v_); }
  mpfr_ptr get() { return v_; }
  mpfr_srcptr get() const { return v_; }
  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  int sign() const { return mpfr_sgn(v_); }

  /// Same value at a different precision.
  Real with_prec(mpfr_prec_t p) const {
    Real r(p);
    mpfr_set(r.v_, v_, MPFR_RNDN);
    return r;
  }

  std::string to_string(int digits = 20) const {
    char* buf = nullptr;
    std::string fmt = "%." + std::to_string(digits) + "Rg";
    mpfr_asprintf(&buf, fmt.c_str(), v_);
    std::string s(buf);
    mpfr_free_str(buf);
    return s;
  }

#define LEHMER_REAL_BINOP(op, fn)                                         \
  friend Real operator op(const Real& a, const Real& b) {                 \
    Real r(std::max(a.prec(), b.prec()));                                 \
    fn(r.v_, a.v_, b.v_, MPFR_RNDN);                                      \
    return r;                                                             \
  }                                                                       \
  friend Real operator op(const Real& a, double b) { return a op Real(b, a.prec()); } \
  friend Real operator op(double a, const Real& b) { return Real(a, b.prec()) op b; } \
  Real& operator op##=(const Real& b) {                                   \
    if (b.prec() > prec()) mpfr_prec_round(v_, b.prec(), MPFR_RNDN);      \
    fn(v_, v_, b.v_, MPFR_RNDN);                                          \
    return *this;                                                         \
  }
  LEHMER_REAL_BINOP(+, mpfr_add)
  LEHMER_REAL_BINOP(-, mpfr_sub)
  LEHMER_REAL_BINOP(*, mpfr_mul)
  LEHMER_REAL_BINOP(/, mpfr_div)
#undef LEHMER_REAL_BINOP

  Real operator-() const {
    Real r(prec());
    mpfr_neg(r.v_, v_, MPFR_RNDN);
    return r;
  }

  friend bool operator<(const Real& a, const Real& b) { return mpfr_less_p(a.v_, b.v_); }
  friend bool operator>(const Real& a, const Real& b) { return mpfr_greater_p(a.v_, b.v_); }
  friend bool operator<=(const Real& a, const Real& b) { return mpfr_lessequal_p(a.v_, b.v_); }
  friend bool operator>=(const Real& a, const Real& b) { return mpfr_greaterequal_p(a.v_, b.v_); }
  friend bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.v_, b.v_); }
  friend bool operator<(const Real& a, double b) { return mpfr_cmp_d(a.v_, b) < 0; }
  friend bool operator>(const Real& a, double b) { return mpfr_cmp_d(a.v_, b) > 0; }

 private:
  mpfr_t v_;
};

#define LEHMER_REAL_UNARY(name, fn)          \
  inline Real name(const Real& a) {          \
    Real r(a.prec());                        \
    fn(r.get(), a.get(), MPFR_RNDN);         \
    return r;                                \
  }
LEHMER_REAL_UNARY(sqrt, mpfr_sqrt)
LEHMER_REAL_UNARY(abs, mpfr_abs)
LEHMER_REAL_UNARY(log, mpfr_log)
LEHMER_REAL_UNARY(exp, mpfr_exp)
LEHMER_REAL_UNARY(cos, mpfr_cos)
LEHMER_REAL_UNARY(sin, mpfr_sin)
#undef LEHMER_REAL_UNARY

inline Real hypot(const Real& a, const Real& b) {
  Real r(std::max(a.prec(), b.prec()));
  mpfr_hypot(r.get(), a.get(), b.get(), MPFR_RNDN);
  return r;
}
inline Real atan2(const Real& y, const Real& x) {
  Real r(std::max(y.prec(), x.prec()));
  mpfr_atan2(r.get(), y.get(), x.get(), MPFR_RNDN);
  return r;
}
inline Real max(const Real& a, const Real& b) { return a < b ? b : a; }
inline Real min(const Real& a, const Real& b) { return a < b ? a : b; }

/// Uniform construction for the numeric types the root finder runs on.
template <class R>
struct RealOps;

template <>
struct RealOps<long double> {
  static long double from(double v, unsigned) { return v; }
  static long double from(const Int& v, unsigned) {
    long e = 0;
    double m = mpz_get_d_2exp(&e, v.get_mpz_t());
    return std::ldexp(static_cast<long double>(m), static_cast<int>(e));
  }
  static long double like(double v, const long double&) { return v; }
  static unsigned bits(const long double&) { return 64; }
  static double to_double(long double v) { return static_cast<double>(v); }
  static Real to_real(long double v, unsigned prec) {
    Real r(prec);
    mpfr_set_ld(r.get(), v, MPFR_RNDN);
    return r;
  }
};

template <>
struct RealOps<Real> {
  static Real from(double v, unsigned prec) { return Real(v, prec); }
  static Real from(const Int& v, unsigned prec) { return Real(v, prec); }
  static Real like(double v, const Real& ref) { return Real(v, ref.prec()); }
  static unsigned bits(const Real& v) { return static_cast<unsigned>(v.prec()); }
  static double to_double(const Real& v) { return v.to_double(); }
  static Real to_real(const Real& v, unsigned prec) { return v.with_prec(prec); }
};

/// Minimal complex number over double or Real.
template <class R>
struct Complex {
  R re, im;

  Complex() : re(), im() {}
  Complex(R r, R i) : re(std::move(r)), im(std::move(i)) {}

  friend Complex operator+(const Complex& a, const Complex& b) { return {a.re + b.re, a.im + b.im}; }
  friend Complex operator-(const Complex& a, const Complex& b) { return {a.re - b.re, a.im - b.im}; }
  friend Complex operator*(const Complex& a, const Complex& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend Complex operator*(const Complex& a, const R& s) { return {a.re * s, a.im * s}; }
  friend Complex operator/(const Complex& a, const Complex& b) {
    // scaled to avoid overflow in the double case
    using std::abs;
    if (abs(b.re) >= abs(b.im)) {
      R t = b.im / b.re;
      R den = b.re + b.im * t;
      return {(a.re + a.im * t) / den, (a.im - a.re * t) / den};
    }
    R t = b.re / b.im;
    R den = b.re * t + b.im;
    return {(a.re * t + a.im) / den, (a.im * t - a.re) / den};
  }
  Complex operator-() const { return {-re, -im}; }
};

template <class R>
R cabs(const Complex<R>& z) {
  using std::hypot;
  return hypot(z.re, z.im);
}

}  // namespace lehmer
