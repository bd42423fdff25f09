#pragma once

// Discriminant and resultant sequences of power maps: Delta(P_n), delta_n,
// Psi_n, U(n), and the congruence and divisibility checks built on them.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lehmer/ball.hpp"
#include "lehmer/factorize.hpp"
#include "lehmer/measure.hpp"
#include "lehmer/power_map.hpp"
#include "lehmer/quotient_order.hpp"

namespace lehmer {

// ---------------------------------------------------------------------------
// Gauss-type congruence reports

struct GaussRecord {
  u64 n = 0;
  Int lhs;
  std::optional<Int> quotient;  ///< lhs / n when divisible
  bool pass = false;
  int index = -1;               ///< coefficient index, coefficient family only
};

struct GaussReport {
  std::string family;  ///< "coefficients", "discriminant", "resultant", "dobrowolski"
  IntPoly P;
  std::optional<IntPoly> Q;
  u64 first = 1, last = 0;
  std::vector<GaussRecord> records;
  bool pass = true;
};

namespace detail {

inline GaussRecord gauss_record(u64 n, Int lhs, const Int& modulus) {
  GaussRecord r;
  r.n = n;
  r.pass = divides(modulus, lhs);
  if (r.pass) r.quotient = divexact(lhs, modulus);
  r.lhs = std::move(lhs);
  return r;
}

/// sum_{m | n} mu(n/m) f(m)
template <class F>
Int mobius_sum(u64 n, F&& f) {
  Int s = 0;
  for (u64 m : divisors(n)) {
    int mu = mobius(n / m);
    if (mu == 1) s += f(m);
    if (mu == -1) s -= f(m);
  }
  return s;
}

inline void require_monic(const IntPoly& P, int min_degree, const char* who) {
  if (P.is_zero() || !P.is_monic() || P.degree() < min_degree)
    throw std::domain_error(std::string(who) + ": P must be monic of degree >= " + std::to_string(min_degree));
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Delta(P_n), delta_n(P), Psi_n(P)

struct DeltaSequence {
  IntPoly P;
  std::vector<Int> discs;                  ///< discs[n-1] = Delta(P_n)
  std::vector<Int> deltas;                 ///< deltas[n-1] = delta_n(P)
  std::vector<std::optional<Int>> psis;    ///< psis[n-1] = Psi_n(P); empty if a smaller factor vanishes

  u64 size() const { return discs.size(); }
  const Int& disc(u64 n) const { return discs.at(n - 1); }
  const Int& delta(u64 n) const { return deltas.at(n - 1); }
  const std::optional<Int>& psi(u64 n) const { return psis.at(n - 1); }
};

inline DeltaSequence delta_seq(const IntPoly& P, u64 N) {
  detail::require_monic(P, 2, "delta_seq");
  if (N == 0) throw std::domain_error("delta_seq: N must be positive");
  DeltaSequence s;
  s.P = P;
  PowerMapTable table(P, N);
  for (u64 n = 1; n <= N; ++n) s.discs.push_back(discriminant(table.at(n)));
  for (u64 n = 1; n <= N; ++n) s.deltas.push_back(detail::mobius_sum(n, [&](u64 m) { return s.discs[m - 1]; }));
  s.psis.resize(N);
  for (u64 n = 1; n <= N; ++n) {
    Int rest = 1;
    bool known = true;
    for (u64 m : divisors(n)) {
      if (m == n) continue;
      if (!s.psis[m - 1]) {
        known = false;
        break;
      }
      rest *= *s.psis[m - 1];
    }
    if (!known) continue;
    const Int& D = s.discs[n - 1];
    if (rest == 0) {
      if (D != 0) throw consistency_error("delta_seq: Delta(P_n) nonzero while a divisor factor vanishes");
      continue;
    }
    if (!divides(rest, D)) throw consistency_error("delta_seq: essential factor division is not exact at n = " + std::to_string(n));
    s.psis[n - 1] = divexact(D, rest);
  }
  return s;
}

/// Orders m >= 1 such that some ratio of two distinct roots of P is a
/// primitive m-th root of unity; Delta(P_n) = 0 iff one of them divides n.
/// A repeated root gives m = 1.
inline std::vector<u64> vanishing_orders(const IntPoly& P) {
  detail::require_monic(P, 1, "vanishing_orders");
  IntPoly Q = P;
  unsigned zeros = 0;
  while (Q.degree() > 0 && Q[0] == 0) {
    Q = *exact_quotient(Q, IntPoly::x());
    ++zeros;
  }
  if (zeros >= 2 || !is_squarefree(Q)) return {1};
  const int e = Q.degree();
  if (e <= 1) return {};
  // R(x) = Res_y(Q(y), Q(xy)) has the d^2 ratios of roots as its roots
  std::vector<Int> vals;
  for (int x = 0; x <= e * e; ++x) {
    std::vector<Int> c(e + 1);
    Int xp = 1;
    for (int i = 0; i <= e; ++i) {
      c[i] = Q[i] * xp;
      xp *= x;
    }
    vals.push_back(resultant(Q, IntPoly(std::move(c))));
  }
  IntPoly R = interpolate_at_naturals(vals);
  // the diagonal pairs contribute (x - 1)^e
  for (int k = 0; k < e; ++k) {
    auto q = exact_quotient(R, IntPoly{-1, 1});
    if (!q) throw consistency_error("vanishing_orders: ratio polynomial lacks the diagonal factor");
    R = std::move(*q);
  }
  std::vector<u64> out;
  if (R.degree() == 0) return out;
  const u64 D = R.degree();
  for (u64 m = 1; m <= 2 * D * D; ++m) {
    if (totient(m) > D) continue;
    if (exact_quotient(R, cyclotomic(m))) out.push_back(m);
  }
  return out;
}

/// Smallest n <= N with Delta(P_n) = 0 according to vanishing_orders.
inline std::optional<u64> first_vanishing(const std::vector<u64>& orders, u64 N) {
  std::optional<u64> best;
  for (u64 m : orders)
    if (m <= N && (!best || m < *best)) best = m;
  return best;
}

// ---------------------------------------------------------------------------
// Gauss congruences

inline GaussReport gauss_check_coefficients(const IntPoly& P, u64 N) {
  detail::require_monic(P, 1, "gauss_check_coefficients");
  GaussReport rep;
  rep.family = "coefficients";
  rep.P = P;
  rep.first = 2;
  rep.last = N;
  if (N < 2) return rep;
  PowerMapTable table(P, N);
  std::vector<IntPoly> Pm{IntPoly()};
  for (u64 m = 1; m <= N; ++m) Pm.push_back(table.at(m));
  const int d = P.degree();
  for (u64 n = 2; n <= N; ++n) {
    GaussRecord worst;
    bool have = false;
    for (int k = 0; k <= d; ++k) {
      Int lhs = detail::mobius_sum(n, [&](u64 m) { return Pm[m][k]; });
      GaussRecord r = detail::gauss_record(n, std::move(lhs), from_u64(n));
      r.index = k;
      if (!have || (!r.pass && worst.pass) || (r.pass == worst.pass && iabs(r.lhs) > iabs(worst.lhs))) {
        worst = std::move(r);
        have = true;
      }
    }
    rep.pass = rep.pass && worst.pass;
    rep.records.push_back(std::move(worst));
  }
  return rep;
}

inline GaussReport gauss_check_delta(const IntPoly& P, u64 N) {
  DeltaSequence s = delta_seq(P, N);
  GaussReport rep;
  rep.family = "discriminant";
  rep.P = P;
  rep.first = 1;
  rep.last = N;
  for (u64 n = 1; n <= N; ++n) {
    rep.records.push_back(detail::gauss_record(n, s.delta(n), from_u64(n)));
    rep.pass = rep.pass && rep.records.back().pass;
  }
  return rep;
}

inline GaussReport gauss_check_resultant(const IntPoly& P, const IntPoly& Q, u64 N) {
  detail::require_monic(P, 1, "gauss_check_resultant");
  detail::require_monic(Q, 1, "gauss_check_resultant");
  if (N == 0) throw std::domain_error("gauss_check_resultant: N must be positive");
  PowerMapTable table(P, N);
  std::vector<Int> res{0};
  for (u64 m = 1; m <= N; ++m) res.push_back(resultant(table.at(m), Q));
  GaussReport rep;
  rep.family = "resultant";
  rep.P = P;
  rep.Q = Q;
  rep.first = 1;
  rep.last = N;
  for (u64 n = 1; n <= N; ++n) {
    rep.records.push_back(detail::gauss_record(n, detail::mobius_sum(n, [&](u64 m) { return res[m]; }), from_u64(n)));
    rep.pass = rep.pass && rep.records.back().pass;
  }
  return rep;
}

/// For each prime p: Res(P_p, P) is nonzero and divisible by p^d.
inline GaussReport dobrowolski_check(const IntPoly& P, const std::vector<u64>& primes) {
  detail::require_monic(P, 1, "dobrowolski_check");
  GaussReport rep;
  rep.family = "dobrowolski";
  rep.P = P;
  if (!primes.empty()) {
    rep.first = *std::min_element(primes.begin(), primes.end());
    rep.last = *std::max_element(primes.begin(), primes.end());
  }
  const unsigned long d = P.degree();
  for (u64 p : primes) {
    if (!is_prime_small(p)) throw std::domain_error("dobrowolski_check: " + std::to_string(p) + " is not prime");
    Int r = resultant(power_map(P, p), P);
    GaussRecord rec = detail::gauss_record(p, r, ipow(from_u64(p), d));
    rec.pass = rec.pass && r != 0;
    if (r == 0) rec.quotient.reset();
    rep.pass = rep.pass && rec.pass;
    rep.records.push_back(std::move(rec));
  }
  return rep;
}

// ---------------------------------------------------------------------------
// delta_n: signs, divisibility by n and by 12

enum class SignVerdict { consistent, violated, inapplicable };

inline const char* to_string(SignVerdict v) {
  switch (v) {
    case SignVerdict::consistent: return "consistent";
    case SignVerdict::violated: return "violated";
    case SignVerdict::inapplicable: return "inapplicable";
  }
  return "?";
}

struct SmallDeltaReport {
  std::vector<Int> deltas;            ///< delta_1..delta_N
  bool divisible_by_n = true;
  SignVerdict sign = SignVerdict::consistent;
  std::optional<u64> zero_witness;    ///< least n <= N with Delta(P_n) = 0
  std::vector<u64> vanishing;         ///< orders from vanishing_orders
  bool range_limited = true;          ///< hypothesis only checked for n <= N
  std::optional<u64> div12_threshold; ///< least n0 < N with 12 | delta_n on (n0, N]
};

inline SmallDeltaReport small_delta(const IntPoly& P, u64 N) {
  DeltaSequence s = delta_seq(P, N);
  SmallDeltaReport rep;
  rep.deltas = s.deltas;
  for (u64 n = 1; n <= N; ++n) rep.divisible_by_n = rep.divisible_by_n && divides(from_u64(n), s.delta(n));
  rep.vanishing = vanishing_orders(P);
  rep.range_limited = !rep.vanishing.empty();
  for (u64 n = 1; n <= N && !rep.zero_witness; ++n)
    if (s.disc(n) == 0) rep.zero_witness = n;
  if (rep.zero_witness) {
    rep.sign = SignVerdict::inapplicable;
  } else {
    const int sg = sgn(s.disc(1));
    for (u64 n = 1; n <= N; ++n)
      if (sgn(s.disc(n)) != sg || (s.delta(n) != 0 && sgn(s.delta(n)) != sg)) rep.sign = SignVerdict::violated;
  }
  u64 n0 = 0;
  for (u64 n = 1; n <= N; ++n)
    if (!divides(Int(12), s.delta(n))) n0 = n;
  if (n0 < N) rep.div12_threshold = n0;
  return rep;
}

struct MonotonicityRecord {
  u64 n = 0;
  Int upper;  ///< delta_n(P_{p^k})
  Int lower;  ///< delta_n(P_{p^{k-1}})
  Int direct; ///< delta_{n p^k}(P) from its own divisor sum
  bool identity = false;
  bool pass = false;
};

struct MonotonicityReport {
  u64 p = 0;
  unsigned k = 0;
  bool applicable = true;
  std::vector<u64> vanishing;
  std::vector<MonotonicityRecord> records;
  bool pass = true;
};

/// |delta_n(P_{p^k})| >= |delta_n(P_{p^{k-1}})| for n <= N with p not dividing n.
inline MonotonicityReport delta_pk_monotonicity(const IntPoly& P, u64 p, unsigned k, u64 N) {
  detail::require_monic(P, 2, "delta_pk_monotonicity");
  if (!is_prime_small(p)) throw std::domain_error("delta_pk_monotonicity: p must be prime");
  if (k == 0 || N == 0) throw std::domain_error("delta_pk_monotonicity: k and N must be positive");
  MonotonicityReport rep;
  rep.p = p;
  rep.k = k;
  rep.vanishing = vanishing_orders(P);
  if (!rep.vanishing.empty()) {
    rep.applicable = false;
    rep.pass = false;
    return rep;
  }
  u64 pk = 1;
  for (unsigned i = 0; i < k; ++i) pk *= p;
  const u64 top = N * pk;
  PowerMapTable table(P, top);
  std::vector<std::optional<Int>> disc(top + 1);
  auto D = [&](u64 m) -> const Int& {
    if (!disc[m]) disc[m] = discriminant(table.at(m));
    return *disc[m];
  };
  for (u64 n = 1; n <= N; ++n) {
    if (n % p == 0) continue;
    MonotonicityRecord r;
    r.n = n;
    r.upper = detail::mobius_sum(n, [&](u64 m) { return D(m * pk); });
    r.lower = detail::mobius_sum(n, [&](u64 m) { return D(m * (pk / p)); });
    r.direct = detail::mobius_sum(n * pk, [&](u64 m) { return D(m); });
    r.identity = r.direct == r.upper - r.lower;
    r.pass = r.identity && iabs(r.upper) >= iabs(r.lower);
    rep.pass = rep.pass && r.pass;
    rep.records.push_back(std::move(r));
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Psi_n and characteristic primes

struct EssentialRecord {
  u64 m = 0;
  std::optional<Int> psi;
  std::optional<Int> root;  ///< integer square root, m >= 2
  bool square = false;
};

struct EssentialReport {
  std::vector<EssentialRecord> records;
  bool product_identity = true;  ///< prod_{m | n} Psi_m = Delta(P_n) where all factors are known
  bool base_matches = true;      ///< Psi_1 = Delta(P)
  bool squares = true;
  bool sign_shared = true;       ///< every nonzero Delta(P_n) has the sign of Psi_1
  bool pass = true;
};

inline EssentialReport essential_factors(const IntPoly& P, u64 N) {
  detail::require_monic(P, 2, "essential_factors");
  if (!is_squarefree(P)) throw std::domain_error("essential_factors: P must be squarefree");
  DeltaSequence s = delta_seq(P, N);
  EssentialReport rep;
  for (u64 m = 1; m <= N; ++m) {
    EssentialRecord r;
    r.m = m;
    r.psi = s.psi(m);
    if (m >= 2 && r.psi) {
      if (*r.psi >= 0 && mpz_perfect_square_p(r.psi->get_mpz_t())) {
        Int root;
        mpz_sqrt(root.get_mpz_t(), r.psi->get_mpz_t());
        r.root = root;
        r.square = true;
      } else {
        rep.squares = false;
      }
    }
    rep.records.push_back(std::move(r));
  }
  rep.base_matches = s.psi(1) && *s.psi(1) == s.disc(1);
  for (u64 n = 1; n <= N; ++n) {
    Int prod = 1;
    bool known = true;
    for (u64 m : divisors(n)) {
      if (!s.psi(m)) known = false;
      else prod *= *s.psi(m);
    }
    if (known && prod != s.disc(n)) rep.product_identity = false;
    if (s.disc(n) != 0 && sgn(s.disc(n)) != sgn(s.disc(1))) rep.sign_shared = false;
  }
  rep.pass = rep.product_identity && rep.base_matches && rep.squares && rep.sign_shared;
  return rep;
}

struct CharacteristicPrime {
  Int p;
  unsigned long k = 0;
  bool residue_ok = false;   ///< p^k = 1 mod n
  bool divides_psi = false;  ///< p | Psi_n
};

struct CharacteristicReport {
  u64 n = 0;
  Int disc;
  bool degenerate = false;            ///< n = 1: every prime counts
  std::vector<CharacteristicPrime> primes;
  Int unknown = 1;                    ///< unfactored composite part of Delta(P_n)
  bool pass = true;
};

inline CharacteristicReport characteristic_primes(const IntPoly& P, u64 n, const FactorBudget& budget = {}) {
  detail::require_monic(P, 2, "characteristic_primes");
  if (n == 0) throw std::domain_error("characteristic_primes: n must be positive");
  if (!is_squarefree(P)) throw std::domain_error("characteristic_primes: P must be squarefree");
  DeltaSequence s = delta_seq(P, n);
  CharacteristicReport rep;
  rep.n = n;
  rep.disc = s.disc(n);
  if (rep.disc == 0) throw std::domain_error("characteristic_primes: Delta(P_n) = 0");
  rep.degenerate = n == 1;
  Factorization f = factorize(rep.disc, budget);
  rep.unknown = f.cofactor;
  const auto& psi = s.psi(n);
  for (const auto& pe : f.factors) {
    bool proper = false;
    for (u64 m : divisors(n))
      if (m < n && divides(pe.prime, s.disc(m))) proper = true;
    if (proper) continue;
    CharacteristicPrime c;
    c.p = pe.prime;
    c.k = pe.exponent;
    Int r;
    Int mod = from_u64(n);
    mpz_powm_ui(r.get_mpz_t(), pe.prime.get_mpz_t(), pe.exponent, mod.get_mpz_t());
    c.residue_ok = r == Int(1) % mod;
    c.divides_psi = psi && divides(pe.prime, *psi);
    rep.pass = rep.pass && c.residue_ok && c.divides_psi;
    rep.primes.push_back(std::move(c));
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Orders in Z[x]/(m, P) and the discriminant divisibility they predict

struct PredictedDivisibility {
  u64 m = 0;
  Int M;
  Int disc;      ///< Delta(P_M)
  Int divisor;   ///< m^{d(d-1)}
  bool pass = false;
};

inline PredictedDivisibility predicted_disc_divisibility(const IntPoly& P, u64 m) {
  detail::require_monic(P, 2, "predicted_disc_divisibility");
  QuotientOrder q = order_in_quotient(P, m);
  PredictedDivisibility out;
  out.m = m;
  out.M = q.M;
  if (bit_length(q.M) > 20) throw resource_error("predicted_disc_divisibility: M = " + to_string(q.M) + " is too large");
  const unsigned long d = P.degree();
  out.disc = discriminant(power_map(P, to_u64(q.M)));
  out.divisor = ipow(from_u64(m), d * (d - 1));
  out.pass = divides(out.divisor, out.disc);
  return out;
}

// ---------------------------------------------------------------------------
// U(n) = Res(P_{D+(n)}, P_{D-(n)})

struct UOptions {
  u64 degree_cap = 64;
};

/// d^r with r = 2^{l-1}: the degree of P_{D+(n)}.
inline Int u_degree(int d, u64 n) {
  DivisorTable t = divisor_table(n);
  return ipow(Int(d), t.plus.size());
}

inline Int u_of_n(const IntPoly& P, u64 n, const UOptions& opt = {}) {
  detail::require_monic(P, 1, "u_of_n");
  if (n < 2) throw std::domain_error("u_of_n: n must be at least 2");
  Int D = u_degree(P.degree(), n);
  if (D > from_u64(opt.degree_cap))
    throw resource_error("u_of_n: degree d^r = " + to_string(D) + " exceeds the cap " + std::to_string(opt.degree_cap));
  DivisorTable t = divisor_table(n);
  return resultant(multiset_poly(P, t.plus), multiset_poly(P, t.minus));
}

struct DivisorCheck {
  Int divisor;
  bool pass = false;
};

struct UDivisibility {
  u64 n = 0;
  Int U;
  unsigned long exponent = 0;  ///< d^r
  DivisorCheck main;           ///< n^{d^r} | U(n)
  std::vector<std::pair<u64, DivisorCheck>> coprime;  ///< m^{d^r} for m | n, gcd(m, a0) = 1
  bool pass = false;
};

inline UDivisibility u_divisibility_check(const IntPoly& P, u64 n, const UOptions& opt = {}) {
  UDivisibility out;
  out.n = n;
  out.U = u_of_n(P, n, opt);
  out.exponent = to_u64(u_degree(P.degree(), n));
  out.main.divisor = ipow(from_u64(n), out.exponent);
  out.main.pass = divides(out.main.divisor, out.U);
  out.pass = out.main.pass;
  for (u64 m : divisors(n)) {
    if (m < 2) continue;
    Int g;
    Int mm = from_u64(m);
    mpz_gcd(g.get_mpz_t(), mm.get_mpz_t(), P[0].get_mpz_t());
    if (g != 1) continue;
    DivisorCheck c;
    c.divisor = ipow(mm, out.exponent);
    c.pass = divides(c.divisor, out.U);
    out.pass = out.pass && c.pass;
    out.coprime.emplace_back(m, std::move(c));
  }
  return out;
}

struct A0Divisibility {
  u64 n = 0;
  Int U;
  Int exponent;  ///< n' 2^{2(l-1)} d^{2^l - 2}
  bool trivial = false;  ///< |a0| = 1
  bool pass = false;
};

/// a0^{n' 4^{l-1} d^{2^l-2}} | U(n), n' = prod p^{k-1}. Applied for every l >= 1.
inline A0Divisibility a0_power_divisibility(const IntPoly& P, u64 n, const UOptions& opt = {}) {
  A0Divisibility out;
  out.n = n;
  out.U = u_of_n(P, n, opt);
  u64 nprime = 1;
  auto fac = factor_small(n);
  for (auto [p, k] : fac)
    for (unsigned i = 1; i < k; ++i) nprime *= p;
  const unsigned long l = fac.size();
  out.exponent = from_u64(nprime) * ipow(Int(4), l - 1) * ipow(Int(P.degree()), (1ul << l) - 2);
  const Int& a0 = P[0];
  out.trivial = iabs(a0) == 1;
  if (out.trivial) {
    out.pass = true;
  } else if (a0 == 0) {
    out.pass = out.U == 0;
  } else {
    // compare valuations prime by prime instead of forming a0^exponent
    out.pass = true;
    if (out.U == 0) return out;
    for (const auto& pe : factorize(a0).factors) {
      Int need = out.exponent * static_cast<unsigned long>(pe.exponent);
      if (Int(static_cast<unsigned long>(valuation(out.U, pe.prime))) < need) out.pass = false;
    }
  }
  return out;
}

struct UBound {
  u64 n = 0;
  Int U;
  Real log_lhs;   ///< log|U(n)|; -inf when U(n) = 0
  Real log_rhs;   ///< d^{2^l} log 2 + d^{2^l} (sum D+) log M
  bool pass = false;
};

inline UBound u_upper_bound_check(const IntPoly& P, u64 n, const UOptions& opt = {}) {
  UBound out;
  out.n = n;
  out.U = u_of_n(P, n, opt);
  DivisorTable t = divisor_table(n);
  const mpfr_prec_t prec = 128;
  Int sum = 0;
  for (u64 m : t.plus) sum += from_u64(m);
  Int D = ipow(Int(P.degree()), 1ul << t.distinct_primes);
  MeasureResult M = mahler_measure(P);
  out.log_rhs = Real(D, prec) * log(Real(2.0, prec)) + Real(D * sum, prec) * log(M.upper.with_prec(prec));
  if (out.U == 0) {
    out.log_lhs = Real(prec);
    mpfr_set_inf(out.log_lhs.get(), -1);
    out.pass = true;
  } else {
    out.log_lhs = log(Real(iabs(out.U), prec));
    out.pass = out.log_lhs <= out.log_rhs;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Factors U(n, partition)

/// Blocks of indices 1..2^l.
struct Partition {
  std::vector<std::vector<unsigned>> blocks;
};

/// All set partitions of {1..size} into at most max_blocks blocks.
inline std::vector<Partition> set_partitions(unsigned size, unsigned max_blocks) {
  std::vector<Partition> out;
  std::vector<unsigned> label(size, 0);
  // restricted growth strings
  auto emit = [&]() {
    unsigned nb = *std::max_element(label.begin(), label.end()) + 1;
    Partition p;
    p.blocks.resize(nb);
    for (unsigned i = 0; i < size; ++i) p.blocks[label[i]].push_back(i + 1);
    out.push_back(std::move(p));
  };
  auto rec = [&](auto&& self, unsigned i, unsigned used) -> void {
    if (i == size) {
      emit();
      return;
    }
    for (unsigned b = 0; b <= used && b < max_blocks; ++b) {
      label[i] = b;
      self(self, i + 1, std::max(used, b + 1));
    }
  };
  if (size == 0) return out;
  label[0] = 0;
  rec(rec, 1, 1);
  return out;
}

/// Exponents attached to indices 1..2^l: D+(n) descending, then D-(n) ascending.
inline std::vector<u64> u_index_exponents(u64 n, std::size_t& plus_count) {
  DivisorTable t = divisor_table(n);
  std::vector<u64> e = t.plus;
  plus_count = e.size();
  std::vector<u64> minus = t.minus;
  std::sort(minus.begin(), minus.end());
  e.insert(e.end(), minus.begin(), minus.end());
  return e;
}

struct PartitionFactor {
  Partition partition;
  Int value;
  double half_width = 0;
};

struct PartitionReport {
  u64 n = 0;
  Int U;
  std::vector<PartitionFactor> factors;
  unsigned precision_bits = 0;
  bool product_matches = false;
};

/// Each U(n, partition) from certified root balls, rounded once the ball's
/// half-width is below 1/4; the product must equal u_of_n exactly.
inline PartitionReport u_partition_factors(const IntPoly& P, u64 n, double precision = 1e-30, const UOptions& opt = {}) {
  detail::require_monic(P, 1, "u_partition_factors");
  if (!is_squarefree(P)) throw std::domain_error("u_partition_factors: P must be squarefree");
  std::size_t plus_count = 0;
  std::vector<u64> expo = u_index_exponents(n, plus_count);
  if (expo.size() > 4) throw std::domain_error("u_partition_factors: n must have at most two distinct prime factors");
  PartitionReport rep;
  rep.n = n;
  rep.U = u_of_n(P, n, opt);
  const unsigned d = P.degree();
  const unsigned slots = expo.size();
  std::vector<Partition> parts = set_partitions(slots, d);
  double target = precision;
  for (;;) {
    RootSet rs = find_roots(P, RootOptions{target, 4096});
    auto roots = rs.expanded();
    const mpfr_prec_t prec = std::max<mpfr_prec_t>(rs.precision_bits + 64, 128);
    const Real eps = detail::eps_at(prec);
    // powers[j][s] = alpha_j^{expo[s]}
    std::vector<std::vector<detail::Ball>> powers(d);
    for (unsigned j = 0; j < d; ++j) {
      detail::Ball a{Complex<Real>(roots[j]->re.with_prec(prec), roots[j]->im.with_prec(prec)),
                     roots[j]->radius.with_prec(prec)};
      for (unsigned s = 0; s < slots; ++s) powers[j].push_back(detail::ball_pow(a, expo[s], eps, prec));
    }
    std::vector<PartitionFactor> factors;
    bool wide = false;
    double worst = 0;
    for (const auto& part : parts) {
      const unsigned nb = part.blocks.size();
      std::vector<unsigned> slot_block(slots);
      for (unsigned b = 0; b < nb; ++b)
        for (unsigned s : part.blocks[b]) slot_block[s - 1] = b;
      detail::Ball prod{Complex<Real>(Real(1.0, prec), Real(0.0, prec)), Real(0.0, prec)};
      // injective maps blocks -> roots
      std::vector<unsigned> pick(nb);
      std::vector<bool> used(d, false);
      auto rec = [&](auto&& self, unsigned b) -> void {
        if (b == nb) {
          detail::Ball lhs{Complex<Real>(Real(1.0, prec), Real(0.0, prec)), Real(0.0, prec)};
          detail::Ball rhs = lhs;
          for (unsigned s = 0; s < slots; ++s) {
            const auto& pw = powers[pick[slot_block[s]]][s];
            if (s < plus_count)
              lhs = detail::ball_mul(lhs, pw, eps);
            else
              rhs = detail::ball_mul(rhs, pw, eps);
          }
          prod = detail::ball_mul(prod, detail::ball_sub(lhs, rhs, eps), eps);
          return;
        }
        for (unsigned j = 0; j < d; ++j) {
          if (used[j]) continue;
          used[j] = true;
          pick[b] = j;
          self(self, b + 1);
          used[j] = false;
        }
      };
      rec(rec, 0);
      double hw = prod.r.to_double();
      worst = std::max(worst, hw);
      if (!(hw < 0.25)) {
        wide = true;
        break;
      }
      Int v;
      mpfr_get_z(v.get_mpz_t(), prod.c.re.get(), MPFR_RNDN);
      Real dist = abs(prod.c.re - Real(v, prec));
      if (dist > prod.r || abs(prod.c.im) > prod.r) throw consistency_error("u_partition_factors: enclosure contains no integer");
      factors.push_back(PartitionFactor{part, v, hw});
    }
    if (wide) {
      if (rs.precision_bits >= 4096) throw resource_error("u_partition_factors: enclosure too wide at the precision cap");
      target = target * 1e-30 / std::max(1.0, worst);
      if (target < 1e-300) throw resource_error("u_partition_factors: enclosure too wide at the precision cap");
      continue;
    }
    rep.factors = std::move(factors);
    rep.precision_bits = prec;
    Int prod = 1;
    for (const auto& f : rep.factors) prod *= f.value;
    rep.product_matches = prod == rep.U;
    if (!rep.product_matches) throw consistency_error("u_partition_factors: product of factors differs from U(n)");
    return rep;
  }
}

// ---------------------------------------------------------------------------
// Small-modulus divisibility of U(n)

enum class Applicability { applies, condition_false, inapplicable };

inline const char* to_string(Applicability a) {
  switch (a) {
    case Applicability::applies: return "applies";
    case Applicability::condition_false: return "condition_false";
    case Applicability::inapplicable: return "inapplicable";
  }
  return "?";
}

struct SmallPrimeDivisibility {
  u64 k = 0, n = 0;
  Int U;
  std::optional<Int> group_exponent;  ///< order of x in Z[x]/(k, P)
  Applicability full = Applicability::inapplicable;     ///< k^d | U(n)
  bool full_pass = true;
  Applicability partial = Applicability::inapplicable;  ///< k | U(n)
  bool partial_pass = true;
  Applicability at_one = Applicability::inapplicable;   ///< P(1) | U(n)
  bool at_one_pass = true;
  bool pass = true;
};

inline SmallPrimeDivisibility u_small_prime_divisibility(const IntPoly& P, u64 k, u64 n, const UOptions& opt = {}) {
  if (k < 2) throw std::domain_error("u_small_prime_divisibility: k must be at least 2");
  SmallPrimeDivisibility out;
  out.k = k;
  out.n = n;
  out.U = u_of_n(P, n, opt);
  const u64 phi = totient(n);
  const Int K = from_u64(k);
  if (iabs(P[0]) == 1) {
    std::optional<QuotientOrder> q;
    try {
      q = order_in_quotient(P, k);
    } catch (const std::domain_error&) {
    }
    if (q) {
      out.group_exponent = q->M;
      if (divides(q->M, from_u64(phi))) {
        out.full = Applicability::applies;
        out.full_pass = divides(ipow(K, P.degree()), out.U);
      } else {
        out.full = Applicability::condition_false;
      }
      if (is_prime_small(k)) {
        // some root of P mod k has order dividing phi(n)
        modq::Vec f = modq::reduce(P, k);
        modq::Vec xp = modq::powx(from_u64(phi), f, k);
        modq::Vec g = modq::gcd(f, modq::sub(xp, modq::Vec{1}, k), k);
        if (modq::deg(g) > 0) {
          out.partial = Applicability::applies;
          out.partial_pass = divides(K, out.U);
        } else {
          out.partial = Applicability::condition_false;
        }
      }
    }
  }
  const Int P1 = P.eval(1);
  if (P1 != 0) {
    out.at_one = Applicability::applies;
    out.at_one_pass = divides(P1, out.U);
  }
  out.pass = out.full_pass && out.partial_pass && out.at_one_pass;
  return out;
}

// ---------------------------------------------------------------------------
// Lehmer's Delta_n and the quadratic b_n

struct LehmerDelta {
  std::vector<Int> values;  ///< Delta_1..Delta_N
  double growth = 0;        ///< max_n |Delta_n|^{1/n}
};

inline LehmerDelta lehmer_delta(const IntPoly& P, u64 N) {
  detail::require_monic(P, 1, "lehmer_delta");
  if (N == 0) throw std::domain_error("lehmer_delta: N must be positive");
  PowerMapTable table(P, N);
  LehmerDelta out;
  const IntPoly x_minus_1{-1, 1};
  for (u64 n = 1; n <= N; ++n) {
    Int v = resultant(table.at(n), x_minus_1);
    if (v != 0) out.growth = std::max(out.growth, std::exp(log_abs(v) / static_cast<double>(n)));
    out.values.push_back(std::move(v));
  }
  return out;
}

struct QuadraticB {
  std::vector<Int> values;  ///< b_1..b_N
  bool identity = true;     ///< b_n^2 Delta(P) = Delta(P_n) for all n
};

inline QuadraticB b_seq_quadratic(const IntPoly& P, u64 N) {
  if (P.is_zero() || P.degree() != 2 || !P.is_monic()) throw std::domain_error("b_seq_quadratic: P must be monic of degree 2");
  const Int disc = discriminant(P);
  if (disc == 0) throw std::domain_error("b_seq_quadratic: Delta(P) = 0");
  QuadraticB out;
  for (u64 n = 1; n <= N; ++n) {
    if (n == 1)
      out.values.push_back(1);
    else if (n == 2)
      out.values.push_back(-P[1]);
    else
      out.values.push_back(-P[1] * out.values[n - 2] - P[0] * out.values[n - 3]);
  }
  PowerMapTable table(P, std::max<u64>(N, 1));
  for (u64 n = 1; n <= N; ++n)
    if (out.values[n - 1] * out.values[n - 1] * disc != discriminant(table.at(n))) out.identity = false;
  return out;
}

}  // namespace lehmer
