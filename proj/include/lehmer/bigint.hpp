#pragma once

#include <gmpxx.h>

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace lehmer {

using Int = mpz_class;
using Rational = mpq_class;

/// Thrown when a computation would exceed a configured size or work budget.
class resource_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Thrown when two routes that must agree do not (an internal defect).
class consistency_error : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Malformed textual input.
class parse_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline Int ipow(const Int& base, unsigned long e) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

inline Int ipow(long base, unsigned long e) { return ipow(Int(base), e); }

inline int sgn(const Int& x) { return mpz_sgn(x.get_mpz_t()); }

inline Int iabs(const Int& x) {
  Int r;
  mpz_abs(r.get_mpz_t(), x.get_mpz_t());
  return r;
}

/// d | n, with the convention that 0 divides only 0.
inline bool divides(const Int& d, const Int& n) {
  if (d == 0) return n == 0;
  return mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t()) != 0;
}

inline Int divexact(const Int& n, const Int& d) {
  Int q;
  mpz_divexact(q.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
  return q;
}

inline std::string to_string(const Int& x) { return x.get_str(10); }

inline Int parse_int(const std::string& s) {
  Int r;
  std::string t = (!s.empty() && s[0] == '+') ? s.substr(1) : s;
  if (t.empty() || r.set_str(t, 10) != 0) throw parse_error("not an integer: '" + s + "'");
  return r;
}

/// Natural log of |x| for x != 0, valid far beyond the double exponent range.
inline double log_abs(const Int& x) {
  if (x == 0) throw std::domain_error("log_abs: zero");
  long e = 0;
  double m = mpz_get_d_2exp(&e, x.get_mpz_t());
  return std::log(std::fabs(m)) + static_cast<double>(e) * std::log(2.0);
}

inline Int binomial(unsigned long n, unsigned long k) {
  Int r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

/// Largest e with p^e | n (n != 0, |p| >= 2).
inline unsigned long valuation(const Int& n, const Int& p) {
  if (n == 0) throw std::domain_error("valuation of zero");
  Int t = n;
  unsigned long e = 0;
  while (mpz_divisible_p(t.get_mpz_t(), p.get_mpz_t())) {
    mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), p.get_mpz_t());
    ++e;
  }
  return e;
}

inline std::size_t bit_length(const Int& x) {
  return x == 0 ? 0 : mpz_sizeinbase(x.get_mpz_t(), 2);
}

inline std::uint64_t to_u64(const Int& x) {
  if (x < 0 || bit_length(x) > 64) throw std::out_of_range("does not fit in 64 bits");
  std::uint64_t r = 0;
  mpz_export(&r, nullptr, -1, sizeof r, 0, 0, x.get_mpz_t());
  return r;
}

inline Int from_u64(std::uint64_t v) {
  Int r;
  mpz_import(r.get_mpz_t(), 1, -1, sizeof v, 0, 0, &v);
  return r;
}

}  // namespace lehmer
