#pragma once

// Complex balls over MPFR: a center and a radius bounding the distance to
// the true value, including rounding in every operation.

#include <cmath>
#include <cstdint>
#include <stdexcept>

#include "lehmer/bigint.hpp"
#include "lehmer/real.hpp"

namespace lehmer {

namespace detail {

struct Ball {
  Complex<Real> c;
  Real r;
};

/// Relative rounding bound for one complex operation at precision prec.
inline Real eps_at(mpfr_prec_t prec) { return Real(std::ldexp(1.0, -static_cast<int>(prec) + 4), 64); }

inline Ball ball_exact(const Real& re, const Real& im, mpfr_prec_t prec) {
  return Ball{Complex<Real>(re.with_prec(prec), im.with_prec(prec)), Real(0.0, prec)};
}

/// Ball around the rounded value of an exact rational.
inline Ball ball_from_rational(const Rational& re, const Rational& im, mpfr_prec_t prec) {
  Ball b{Complex<Real>(Real(prec), Real(prec)), Real(0.0, prec)};
  mpfr_set_q(b.c.re.get(), re.get_mpq_t(), MPFR_RNDN);
  mpfr_set_q(b.c.im.get(), im.get_mpq_t(), MPFR_RNDN);
  b.r = eps_at(prec) * (cabs(b.c) + 1e-300);
  return b;
}

inline Ball ball_mul(const Ball& a, const Ball& b, const Real& eps) {
  Ball o;
  o.c = a.c * b.c;
  Real ma = cabs(a.c), mb = cabs(b.c);
  o.r = ma * b.r + mb * a.r + a.r * b.r + eps * (ma * mb + 1e-300);
  return o;
}

inline Ball ball_add(const Ball& a, const Ball& b, const Real& eps) {
  Ball o;
  o.c = a.c + b.c;
  o.r = a.r + b.r + eps * (cabs(o.c) + 1e-300);
  return o;
}

inline Ball ball_sub(const Ball& a, const Ball& b, const Real& eps) {
  Ball o;
  o.c = a.c - b.c;
  o.r = a.r + b.r + eps * (cabs(o.c) + 1e-300);
  return o;
}

/// a / b; requires 0 outside b.
inline Ball ball_div(const Ball& a, const Ball& b, const Real& eps) {
  Real mb = cabs(b.c);
  if (!(mb > b.r)) throw std::domain_error("ball_div: divisor ball contains zero");
  Ball o;
  o.c = a.c / b.c;
  Real ma = cabs(a.c);
  o.r = (ma * b.r + mb * a.r) / (mb * (mb - b.r)) + eps * (cabs(o.c) + 1e-300);
  o.r = o.r * (1 + 1e-15);
  return o;
}

inline Ball ball_pow(Ball base, std::uint64_t e, const Real& eps, mpfr_prec_t prec) {
  Ball acc{Complex<Real>(Real(1.0, prec), Real(0.0, prec)), Real(0.0, prec)};
  while (e) {
    if (e & 1) acc = ball_mul(acc, base, eps);
    e >>= 1;
    if (e) base = ball_mul(base, base, eps);
  }
  return acc;
}

inline bool ball_contains_zero(const Ball& a) { return !(cabs(a.c) > a.r); }

inline bool balls_overlap(const Ball& a, const Ball& b) { return !(cabs(a.c - b.c) > a.r + b.r); }

}  // namespace detail

}  // namespace lehmer
