#pragma once

// The generating function f_P(z) = sum_{n >= 1} Delta(P_n) z^n as an exact
// rational function, its decomposition into integer multiples of z u'/u,
// and the product identity prod (1 - z^n)^{delta_n / n} = prod u_j^{-c_j}.

#include <algorithm>
#include <cmath>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lehmer/polyfactor.hpp"
#include "lehmer/roots.hpp"
#include "lehmer/sequences.hpp"

namespace lehmer {

/// Raised when a rational function has a non-integral weight at some pole.
class decomposition_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------------------
// Linear recurrences

/// s_n = sum_{i=1}^{L} coefficients[i-1] s_{n-i} for every n > L in the input.
struct LinearRecurrence {
  std::vector<Rational> coefficients;
  bool confirmed = false;  ///< input length >= 2L + 1, so the recurrence is forced
  std::size_t order() const { return coefficients.size(); }
};

/// Minimal recurrence over Q (Berlekamp-Massey with exact rationals).
inline LinearRecurrence berlekamp_massey(const std::vector<Rational>& s) {
  std::vector<Rational> C{Rational(1)}, B{Rational(1)};
  std::size_t L = 0, m = 1;
  Rational b = 1;
  for (std::size_t n = 0; n < s.size(); ++n) {
    Rational disc = s[n];
    for (std::size_t i = 1; i <= L && i < C.size(); ++i) disc += C[i] * s[n - i];
    if (disc == 0) {
      ++m;
      continue;
    }
    std::vector<Rational> T = C;
    Rational coef = disc / b;
    if (C.size() < B.size() + m) C.resize(B.size() + m, Rational(0));
    for (std::size_t i = 0; i < B.size(); ++i) C[i + m] -= coef * B[i];
    if (2 * L <= n) {
      L = n + 1 - L;
      B = std::move(T);
      b = disc;
      m = 1;
    } else {
      ++m;
    }
  }
  C.resize(L + 1, Rational(0));
  LinearRecurrence r;
  for (std::size_t i = 1; i <= L; ++i) r.coefficients.push_back(-C[i]);
  r.confirmed = s.size() >= 2 * L + 1;
  return r;
}

namespace detail {

/// Connection polynomial 1 + c_1 x + ... + c_L x^L over F_p.
inline std::vector<u64> berlekamp_massey_mod(const std::vector<u64>& s, u64 p) {
  std::vector<u64> C{1}, B{1};
  std::size_t L = 0, m = 1;
  u64 b = 1;
  for (std::size_t n = 0; n < s.size(); ++n) {
    u64 disc = s[n];
    for (std::size_t i = 1; i <= L && i < C.size(); ++i) disc = (disc + mulmod_u64(C[i], s[n - i], p)) % p;
    if (disc == 0) {
      ++m;
      continue;
    }
    std::vector<u64> T = C;
    u64 coef = mulmod_u64(disc, invmod_u64(b, p), p);
    if (C.size() < B.size() + m) C.resize(B.size() + m, 0);
    for (std::size_t i = 0; i < B.size(); ++i) C[i + m] = (C[i + m] + p - mulmod_u64(coef, B[i], p)) % p;
    if (2 * L <= n) {
      L = n + 1 - L;
      B = std::move(T);
      b = disc;
      m = 1;
    } else {
      ++m;
    }
  }
  C.resize(L + 1, 0);
  return C;
}

/// Primes just below 2^62, descending.
inline u64 next_prime_below(u64 n) {
  for (u64 c = n - 1;; --c)
    if (is_probable_prime(from_u64(c))) return c;
}

/// The first 256 primes below 2^62, descending.
inline const std::vector<u64>& word_primes() {
  static const std::vector<u64> primes = [] {
    std::vector<u64> out;
    u64 p = u64(1) << 62;
    for (int i = 0; i < 256; ++i) out.push_back(p = next_prime_below(p));
    return out;
  }();
  return primes;
}

/// Squarefree over Q, certified by one good prime when possible.
inline bool squarefree_fast(const IntPoly& f) {
  if (f.is_zero() || f.degree() < 1) return true;
  const auto& primes = word_primes();
  for (int i = 0; i < 8; ++i) {
    u64 p = primes[i];
    if (modq::reduce(f.leading(), p) == 0) continue;
    modq::Vec fp = modq::reduce(f, p);
    if (modq::deg(modq::gcd(fp, modq::derivative(fp, p), p)) == 0) return true;
  }
  return is_squarefree(f);
}

/// gcd(a, b) = 1 over Q, certified by one good prime when possible.
inline bool coprime_fast(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return false;
  const auto& primes = word_primes();
  for (int i = 0; i < 8; ++i) {
    u64 p = primes[i];
    if (modq::reduce(a.leading(), p) == 0 || modq::reduce(b.leading(), p) == 0) continue;
    if (modq::deg(modq::gcd(modq::reduce(a, p), modq::reduce(b, p), p)) == 0) return true;
  }
  IntPoly g = gcd(a, b);
  return g.degree() == 0;
}

/// x = r mod M combined with x = a mod p; symmetric representatives on output.
inline void crt_step(std::vector<Int>& r, Int& M, const std::vector<u64>& a, u64 p) {
  Int P = from_u64(p);
  Int Minv;
  mpz_invert(Minv.get_mpz_t(), M.get_mpz_t(), P.get_mpz_t());
  for (std::size_t i = 0; i < r.size(); ++i) {
    Int t = (from_u64(a[i]) - r[i]) * Minv;
    mpz_fdiv_r(t.get_mpz_t(), t.get_mpz_t(), P.get_mpz_t());
    r[i] += M * t;
  }
  M *= P;
  Int half = M / 2;
  for (auto& v : r) {
    mpz_fdiv_r(v.get_mpz_t(), v.get_mpz_t(), M.get_mpz_t());
    if (v > half) v -= M;
  }
}

/// Integer connection polynomial of s (minimal over Q), found modulo word
/// primes and lifted by CRT until it satisfies every term exactly.
inline std::optional<IntPoly> integer_connection_polynomial(const std::vector<Int>& s) {
  std::vector<Int> acc;
  Int M = 1;
  std::size_t L = 0;
  std::vector<Int> prev;
  for (u64 p : word_primes()) {
    std::vector<u64> sm(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) sm[i] = modq::reduce(s[i], p);
    std::vector<u64> C = berlekamp_massey_mod(sm, p);
    if (C.size() - 1 < L) continue;  // unlucky prime: order dropped
    if (C.size() - 1 > L) {
      L = C.size() - 1;
      acc.assign(L + 1, Int(0));
      M = 1;
      prev.clear();
    }
    crt_step(acc, M, C, p);
    if (acc == prev) {
      bool ok = true;
      for (std::size_t n = L; n < s.size() && ok; ++n) {
        Int t = 0;
        for (std::size_t i = 0; i <= L; ++i) mpz_addmul(t.get_mpz_t(), acc[i].get_mpz_t(), s[n - i].get_mpz_t());
        ok = t == 0;
      }
      if (ok) return IntPoly(acc);
    }
    prev = acc;
  }
  return std::nullopt;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Rational functions in z

/// num / den with den(0) = 1.
struct RationalFn {
  IntPoly num, den;
};

/// Taylor coefficients t_0..t_count of F at 0.
inline std::vector<Int> taylor(const RationalFn& F, std::size_t count) {
  if (F.den.is_zero() || F.den[0] != 1) throw std::domain_error("taylor: denominator must have constant term 1");
  std::vector<Int> t(count + 1);
  for (std::size_t n = 0; n <= count; ++n) {
    Int v = F.num[n];
    const std::size_t lim = std::min<std::size_t>(n, F.den.degree());
    for (std::size_t i = 1; i <= lim; ++i) mpz_submul(v.get_mpz_t(), F.den[i].get_mpz_t(), t[n - i].get_mpz_t());
    t[n] = std::move(v);
  }
  return t;
}

/// Truncate to degree < k.
inline IntPoly truncate(const IntPoly& a, std::size_t k) {
  std::vector<Int> c;
  for (std::size_t i = 0; i < std::min(a.size(), k); ++i) c.push_back(a[i]);
  return IntPoly(std::move(c));
}

struct DeltaGenerating {
  RationalFn f;
  std::size_t order = 0;     ///< degree of the denominator
  u64 terms = 0;             ///< Delta(P_n) used to find the recurrence
  u64 verified_through = 0;  ///< exact agreement for n <= this
};

/// Order bound for f_P: number of exponent vectors with sum d(d-1) and
/// entries <= 2(d-1), capped at the binomial count C(d(d-1)+d-1, d-1).
inline u64 delta_recurrence_bound(int d) {
  Int b = binomial(d * (d - 1) + d - 1, d - 1);
  return bit_length(b) > 40 ? (u64(1) << 40) : to_u64(b);
}

/// Default number of terms: twice the order bound (capped at 2000) plus 8.
inline u64 default_delta_terms(int d) { return 2 * std::min<u64>(delta_recurrence_bound(d), 2000) + 8; }

/// f_P(z) from Delta(P_1..P_N), verified on 8 further terms.
inline DeltaGenerating rational_fn_of_delta(const IntPoly& P, u64 N = 0) {
  detail::require_monic(P, 2, "rational_fn_of_delta");
  if (!is_squarefree(P)) throw std::domain_error("rational_fn_of_delta: P must be squarefree");
  if (N == 0) N = default_delta_terms(P.degree());
  const u64 total = N + 8;
  PowerMapTable table(P, total);
  std::vector<Int> s;
  for (u64 n = 1; n <= total; ++n) s.push_back(discriminant(table.at(n)));
  std::vector<Int> head(s.begin(), s.begin() + N);
  auto C = detail::integer_connection_polynomial(head);
  auto too_low = [&]() {
    return consistency_error("rational_fn_of_delta: recurrence not confirmed on held-out terms; increase N beyond " +
                             std::to_string(N));
  };
  if (!C) throw too_low();
  const std::size_t L = C->degree();
  if (N < 2 * L + 1) throw too_low();
  for (std::size_t n = L; n < s.size(); ++n) {
    Int t = 0;
    for (std::size_t i = 0; i <= L; ++i) mpz_addmul(t.get_mpz_t(), (*C)[i].get_mpz_t(), s[n - i].get_mpz_t());
    if (t != 0) throw too_low();
  }
  // f = z * T(z) where T = sum s_{n+1} z^n; numerator = (C * S) mod z^{L+1}
  std::vector<Int> series(L + 1);
  for (std::size_t n = 1; n <= L; ++n) series[n] = s[n - 1];
  IntPoly num = truncate(*C * IntPoly(series), L + 1);
  DeltaGenerating out;
  out.f = RationalFn{num, *C};
  out.order = L;
  out.terms = N;
  out.verified_through = total;
  if (!detail::squarefree_fast(out.f.den)) throw consistency_error("rational_fn_of_delta: denominator has a repeated factor");
  return out;
}

/// g(z) = z / (1 + a1 z + a0 z^2), the generating function of b_n for a quadratic.
inline RationalFn quadratic_g(const IntPoly& P) {
  if (P.is_zero() || P.degree() != 2 || !P.is_monic()) throw std::domain_error("quadratic_g: P must be monic of degree 2");
  return RationalFn{IntPoly{0, 1}, IntPoly(std::vector<Int>{Int(1), P[1], P[0]})};
}

/// Least n <= N (1-based sequence) breaking sum_{m | n} mu(n/m) a_m = 0 mod n.
inline std::optional<u64> gauss_property_witness(const std::vector<Int>& seq, u64 N) {
  N = std::min<u64>(N, seq.size());
  for (u64 n = 1; n <= N; ++n) {
    Int lhs = detail::mobius_sum(n, [&](u64 m) { return seq[m - 1]; });
    if (!divides(from_u64(n), lhs)) return n;
  }
  return std::nullopt;
}


// ---------------------------------------------------------------------------
// Decomposition f = sum_j c_j z u_j'/u_j

struct MintonTerm {
  IntPoly u;              ///< u(0) = 1
  Int c;
  bool irreducible = false;  ///< false when u could not be split further within budget
};

struct MintonDecomposition {
  std::vector<MintonTerm> terms;
  unsigned taylor_checked = 0;  ///< Gauss congruences verified on t_1..t_this
};

namespace detail {

inline Int symmetric(u64 r, u64 p) {
  Int v = from_u64(r);
  if (r > p / 2) v -= from_u64(p);
  return v;
}

/// a/b = r mod p with |a|, |b| < sqrt(p/2), if such a fraction exists.
inline std::optional<Rational> rational_reconstruct(u64 r, u64 p) {
  Int r0 = from_u64(p), r1 = from_u64(r), t0 = 0, t1 = 1;
  Int bound;
  mpz_sqrt(bound.get_mpz_t(), Int(from_u64(p) / 2).get_mpz_t());
  while (r1 > bound) {
    Int q = r0 / r1;
    Int r2 = r0 - q * r1, t2 = t0 - q * t1;
    r0 = r1, r1 = r2, t0 = t1, t1 = t2;
  }
  if (t1 == 0 || iabs(t1) > bound) return std::nullopt;
  Rational out(r1, t1);
  out.canonicalize();
  return out;
}

/// N - c z D' modulo p.
inline modq::Vec residue_numerator(const modq::Vec& num, const modq::Vec& zdd, u64 c, u64 p) {
  return modq::sub(num, modq::scale(zdd, c, p), p);
}

/// Polynomial in c whose roots are the residues N(rho) / (rho D'(rho)) over
/// the poles rho, modulo p.
inline modq::Vec residue_polynomial(const IntPoly& num, const IntPoly& den, u64 p) {
  modq::Vec D = modq::reduce(den, p), Nm = modq::reduce(num, p);
  modq::Vec zdd = modq::reduce(IntPoly::x() * derivative(den), p);
  const int L = den.degree();
  std::vector<u64> vals;
  for (int c = 0; c <= L; ++c) {
    modq::Vec B = residue_numerator(Nm, zdd, c, p);
    // formal degree L in the second argument
    u64 r = modq::resultant(D, B, p);
    if (!B.empty()) r = mulmod_u64(r, powmod_u64(D.back(), L - modq::deg(B), p), p);
    vals.push_back(r);
  }
  return modq::interpolate(vals, p);
}

inline bool good_prime(const IntPoly& num, const IntPoly& den, u64 p) {
  if (modq::reduce(den.leading(), p) == 0) return false;
  modq::Vec D = modq::reduce(den, p);
  if (modq::deg(modq::gcd(D, modq::derivative(D, p), p)) != 0) return false;
  return modq::deg(modq::gcd(D, modq::reduce(num, p), p)) == 0;
}

/// gcd(D, N - c z D') over Z with constant term 1, by CRT over word primes.
inline IntPoly residue_group(const IntPoly& num, const IntPoly& den, const Int& c) {
  IntPoly zdd = IntPoly::x() * derivative(den);
  int best = -1;
  std::vector<Int> acc, prev;
  Int M = 1;
  for (u64 p : word_primes()) {
    if (!good_prime(num, den, p)) continue;
    u64 cm = modq::reduce(c, p);
    modq::Vec g = modq::gcd(modq::reduce(den, p), residue_numerator(modq::reduce(num, p), modq::reduce(zdd, p), cm, p), p);
    if (g.empty() || g[0] == 0) continue;
    g = modq::scale(g, invmod_u64(g[0], p), p);
    const int dg = modq::deg(g);
    if (best >= 0 && dg > best) continue;
    if (dg != best) {
      best = dg;
      acc.assign(dg + 1, Int(0));
      M = 1;
      prev.clear();
    }
    g.resize(dg + 1, 0);
    crt_step(acc, M, g, p);
    if (acc == prev) {
      IntPoly U(acc);
      if (exact_quotient(den, U)) return U;
    }
    prev = acc;
  }
  throw consistency_error("minton_decompose: residue group did not lift to an integer factor");
}

}  // namespace detail

struct MintonOptions {
  unsigned long split_budget = 1ul << 16;  ///< recombination subsets tried per group
};

/// Integer weights c_j and factors u_j with F = sum_j c_j z u_j'/u_j.
inline MintonDecomposition minton_decompose(const RationalFn& F, const MintonOptions& opt = {}) {
  const IntPoly& num = F.num;
  const IntPoly& den = F.den;
  if (den.is_zero() || den[0] != 1) throw std::domain_error("minton_decompose: denominator must have constant term 1");
  if (num[0] != 0) throw std::domain_error("minton_decompose: F(0) must be 0");
  MintonDecomposition out;
  if (num.is_zero()) return out;
  if (den.degree() == 0) throw std::domain_error("minton_decompose: F must have poles");
  if (!detail::squarefree_fast(den)) throw std::domain_error("minton_decompose: poles must be simple");
  if (!detail::coprime_fast(num, den)) throw std::domain_error("minton_decompose: numerator and denominator share a factor");
  if (num.degree() > den.degree()) throw std::domain_error("minton_decompose: F must vanish at infinity up to a constant");
  const unsigned T = std::max(24, 2 * den.degree() + 8);
  auto t = taylor(F, T);
  std::vector<Int> seq(t.begin() + 1, t.end());
  if (auto w = gauss_property_witness(seq, T))
    throw std::domain_error("minton_decompose: Taylor coefficients break the Gauss congruence at n = " + std::to_string(*w));
  out.taylor_checked = T;

  // residues modulo two primes; a residue is an integer iff its symmetric
  // lift is also a root modulo the second prime
  std::vector<u64> good;
  for (u64 p : detail::word_primes()) {
    if (detail::good_prime(num, den, p)) good.push_back(p);
    if (good.size() == 2) break;
  }
  if (good.size() < 2) throw consistency_error("minton_decompose: no good primes");
  modq::Vec R1 = detail::residue_polynomial(num, den, good[0]);
  modq::Vec R2 = detail::residue_polynomial(num, den, good[1]);
  std::vector<Int> weights;
  for (u64 r : modq::roots(R1, good[0])) {
    Int c = detail::symmetric(r, good[0]);
    if (modq::eval(R2, modq::reduce(c, good[1]), good[1]) != 0) {
      std::string witness = "unknown";
      if (auto q = detail::rational_reconstruct(r, good[0])) witness = q->get_str();
      throw decomposition_error("minton_decompose: non-integer residue " + witness);
    }
    weights.push_back(c);
  }
  std::sort(weights.begin(), weights.end());

  std::vector<std::pair<IntPoly, Int>> groups;
  int total = 0;
  for (const Int& c : weights) {
    IntPoly U = detail::residue_group(num, den, c);
    total += U.degree();
    groups.emplace_back(std::move(U), c);
  }
  if (total != den.degree()) throw consistency_error("minton_decompose: residue groups do not cover the denominator");

  // re-synthesis: sum c z U' (D / U) = N
  IntPoly acc;
  for (auto& [U, c] : groups) acc = acc + IntPoly::constant(c) * IntPoly::x() * derivative(U) * *exact_quotient(den, U);
  if (acc != num) throw consistency_error("minton_decompose: re-synthesis differs from the numerator");

  for (auto& [U, c] : groups) {
    auto parts = factor_monic_squarefree(reversal(U), opt.split_budget);  // reversal is monic
    for (std::size_t i = 0; i < parts.factors.size(); ++i) {
      bool irreducible = parts.complete || i + 1 < parts.factors.size();
      out.terms.push_back(MintonTerm{reversal(parts.factors[i]), c, irreducible});
    }
  }
  std::sort(out.terms.begin(), out.terms.end(), [](const MintonTerm& a, const MintonTerm& b) {
    if (a.u.degree() != b.u.degree()) return a.u.degree() < b.u.degree();
    if (a.c != b.c) return a.c < b.c;
    return a.u.coeffs() < b.u.coeffs();
  });
  return out;
}

/// sum_j c_j z u_j'/u_j as a single rational function with den = prod u_j.
inline RationalFn synthesize(const MintonDecomposition& dec) {
  IntPoly den = IntPoly::constant(1);
  for (const auto& t : dec.terms) den = den * t.u;
  IntPoly num;
  for (const auto& t : dec.terms)
    num = num + IntPoly::constant(t.c) * IntPoly::x() * derivative(t.u) * *exact_quotient(den, t.u);
  return RationalFn{num, den};
}

// ---------------------------------------------------------------------------
// prod_{n >= 1} (1 - z^n)^{r_n} = prod_j u_j^{-c_j}, r_n = delta_n / n

namespace series {

using Series = std::vector<Int>;  ///< coefficients 0..order

inline Series mul(const Series& a, const Series& b, std::size_t order) {
  Series r(order + 1);
  for (std::size_t i = 0; i < a.size() && i <= order; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size() && i + j <= order; ++j) mpz_addmul(r[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
  }
  return r;
}

/// 1/u for u(0) = 1.
inline Series inverse(const IntPoly& u, std::size_t order) {
  if (u.is_zero() || u[0] != 1) throw std::domain_error("series inverse: constant term must be 1");
  Series r(order + 1);
  r[0] = 1;
  for (std::size_t n = 1; n <= order; ++n) {
    Int v = 0;
    for (std::size_t i = 1; i <= n && i < u.size(); ++i) mpz_submul(v.get_mpz_t(), u[i].get_mpz_t(), r[n - i].get_mpz_t());
    r[n] = v;
  }
  return r;
}

inline Series power(Series base, unsigned long e, std::size_t order) {
  Series acc(order + 1);
  acc[0] = 1;
  while (e) {
    if (e & 1) acc = mul(acc, base, order);
    e >>= 1;
    if (e) base = mul(base, base, order);
  }
  return acc;
}

/// (1 - z^n)^r for any integer r, via the generalized binomial series.
inline Series binomial_factor(std::size_t n, const Int& r, std::size_t order) {
  Series s(order + 1);
  Int c = 1;
  for (std::size_t k = 0; k * n <= order; ++k) {
    if (k > 0) {
      c = c * (r - static_cast<unsigned long>(k - 1));
      c = divexact(c, Int(static_cast<unsigned long>(k)));
    }
    s[k * n] = (k % 2) ? Int(-c) : c;
  }
  return s;
}

}  // namespace series

struct ProductIdentity {
  std::size_t order = 0;
  std::vector<Int> lhs, rhs;
  bool pass = false;
};

inline ProductIdentity product_identity_check(const IntPoly& P, std::size_t order, const MintonDecomposition& dec) {
  if (order == 0) throw std::domain_error("product_identity_check: order must be positive");
  DeltaSequence s = delta_seq(P, order);
  ProductIdentity out;
  out.order = order;
  series::Series lhs(order + 1);
  lhs[0] = 1;
  for (std::size_t n = 1; n <= order; ++n) {
    const Int& d = s.delta(n);
    if (!divides(Int(static_cast<unsigned long>(n)), d))
      throw consistency_error("product_identity_check: delta_n not divisible by n at n = " + std::to_string(n));
    lhs = series::mul(lhs, series::binomial_factor(n, divexact(d, Int(static_cast<unsigned long>(n))), order), order);
  }
  series::Series rhs(order + 1);
  rhs[0] = 1;
  for (const auto& t : dec.terms) {
    series::Series base;
    if (t.c > 0) {
      base = series::inverse(t.u, order);
    } else {
      base.assign(order + 1, Int(0));
      for (std::size_t i = 0; i < t.u.size() && i <= order; ++i) base[i] = t.u[i];
    }
    if (!t.c.fits_ulong_p() && !Int(-t.c).fits_ulong_p()) throw resource_error("product_identity_check: weight too large");
    rhs = series::mul(rhs, series::power(base, iabs(t.c).get_ui(), order), order);
  }
  out.lhs = lhs;
  out.rhs = rhs;
  out.pass = lhs == rhs;
  if (!out.pass) {
    std::size_t k = 0;
    while (lhs[k] == rhs[k]) ++k;
    throw consistency_error("product_identity_check: series differ at z^" + std::to_string(k));
  }
  return out;
}

inline ProductIdentity product_identity_check(const IntPoly& P, std::size_t order) {
  auto g = rational_fn_of_delta(P);
  return product_identity_check(P, order, minton_decompose(g.f));
}

// ---------------------------------------------------------------------------
// pole locations

struct PoleMonomialCheck {
  std::size_t poles = 0;
  std::size_t matched = 0;  ///< poles whose modulus matched some exponent vector
  double worst_gap = 0;     ///< largest |log|beta| - best monomial log| over matched poles
  bool pass = false;
};

/// Every pole 1/beta of f_P has |beta| = prod |alpha_j|^{e_j} with
/// sum e_j = d(d-1) and 0 <= e_j <= 2(d-1), within enclosure error.
inline PoleMonomialCheck pole_monomial_check(const IntPoly& P, const MintonDecomposition& dec) {
  const int d = P.degree();
  RootSet alphas = find_roots(P, 1e-30);
  std::vector<double> logs, errs;
  for (const auto* r : alphas.expanded()) {
    double m = r->modulus();
    if (m == 0) continue;  // exponent vectors touching a zero root give no pole
    logs.push_back(std::log(m));
    errs.push_back(r->radius.to_double() / m);
  }
  // log-moduli of all admissible monomials with their error bounds
  std::vector<std::pair<double, double>> monos;
  std::vector<int> e(logs.size(), 0);
  auto rec = [&](auto&& self, std::size_t j, int left) -> void {
    if (j == logs.size()) {
      if (left != 0) return;
      double v = 0, err = 0;
      for (std::size_t k = 0; k < logs.size(); ++k) v += e[k] * logs[k], err += e[k] * errs[k];
      monos.emplace_back(v, err);
      return;
    }
    for (int x = 0; x <= std::min(left, 2 * (d - 1)); ++x) {
      e[j] = x;
      self(self, j + 1, left - x);
    }
    e[j] = 0;
  };
  rec(rec, 0, d * (d - 1));
  PoleMonomialCheck out;
  for (const auto& t : dec.terms) {
    RootSet betas = find_roots(reversal(t.u), 1e-30);
    for (const auto* b : betas.expanded()) {
      ++out.poles;
      double m = b->modulus();
      double lb = std::log(m), eb = b->radius.to_double() / m;
      double best = HUGE_VAL;
      bool hit = false;
      for (auto [v, err] : monos) {
        double gap = std::fabs(lb - v);
        best = std::min(best, gap);
        if (gap <= err + eb + 1e-12 * (1 + std::fabs(v))) hit = true;
      }
      if (hit) {
        ++out.matched;
        out.worst_gap = std::max(out.worst_gap, best);
      }
    }
  }
  out.pass = out.matched == out.poles;
  return out;
}

struct RadiusLimsup {
  u64 N = 0;
  double inverse_radius = 0;  ///< 1/R, R the smallest pole modulus
  double growth = 0;          ///< max_{n <= N} |Delta(P_n)|^{1/n}
  double relative_gap = 0;    ///< |growth - 1/R| / (1/R)
  bool pass = false;          ///< relative_gap <= tolerance
};

/// Compare the smallest pole of F with the growth of Delta(P_n) up to N.
inline RadiusLimsup radius_limsup_check(const IntPoly& P, const RationalFn& F, u64 N = 40, double tolerance = 0.05) {
  RadiusLimsup out;
  out.N = N;
  // poles are reciprocals of the roots of the reversed denominator
  for (const auto& r : find_roots(reversal(F.den), 1e-20).roots) out.inverse_radius = std::max(out.inverse_radius, r.modulus());
  auto seq = delta_seq(P, N);
  for (u64 n = 1; n <= N; ++n)
    if (seq.disc(n) != 0) out.growth = std::max(out.growth, std::exp(log_abs(seq.disc(n)) / static_cast<double>(n)));
  out.relative_gap = out.inverse_radius > 0 ? std::fabs(out.growth - out.inverse_radius) / out.inverse_radius : HUGE_VAL;
  out.pass = out.relative_gap <= tolerance;
  return out;
}

}  // namespace lehmer
