#pragma once

// Factorization of monic squarefree integer polynomials: Cantor-Zassenhaus
// modulo a small prime, Hensel lifting along a factor tree, then
// recombination of the lifted factors by trial division.

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>
#include <vector>

#include "lehmer/modpoly.hpp"

namespace lehmer {

namespace modq {

/// (q, r) with a = q b + r over F_p.
inline std::pair<Vec, Vec> divmod(Vec a, const Vec& b, u64 p) {
  const int db = deg(b);
  if (deg(a) < db) return {{}, a};
  const u64 inv = invmod_u64(b.back(), p);
  Vec q(deg(a) - db + 1, 0);
  for (int k = deg(a); k >= db; --k) {
    u64 c = mulmod_u64(a[k], inv, p);
    q[k - db] = c;
    if (!c) continue;
    for (int i = 0; i <= db; ++i) a[k - db + i] = (a[k - db + i] + p - mulmod_u64(c, b[i], p)) % p;
  }
  trim(q);
  trim(a);
  return {q, a};
}

/// s, t with s a + t b = 1 over F_p, for coprime a and b.
inline std::pair<Vec, Vec> bezout(const Vec& a, const Vec& b, u64 p) {
  Vec r0 = a, r1 = b, s0{1}, s1, t0, t1{1};
  while (!r1.empty()) {
    auto [q, r] = divmod(r0, r1, p);
    Vec s2 = sub(s0, mul(q, s1, p), p);
    Vec t2 = sub(t0, mul(q, t1, p), p);
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (deg(r0) != 0) throw std::domain_error("bezout: polynomials are not coprime");
  const u64 inv = invmod_u64(r0[0], p);
  return {scale(s0, inv, p), scale(t0, inv, p)};
}

/// base^e mod (f, p), f monic, e arbitrary size.
inline Vec powmod(Vec base, const Int& e, const Vec& f, u64 p) {
  Vec acc = rem(Vec{1 % p}, f, p);
  base = rem(std::move(base), f, p);
  for (std::size_t i = bit_length(e); i-- > 0;) {
    acc = mulmod(acc, acc, f, p);
    if (mpz_tstbit(e.get_mpz_t(), i)) acc = mulmod(acc, base, f, p);
  }
  return acc;
}

/// Split a monic f whose irreducible factors all have degree i (p odd).
inline void equal_degree(const Vec& f, int i, u64 p, std::mt19937_64& rng, std::vector<Vec>& out) {
  if (deg(f) == i) {
    out.push_back(f);
    return;
  }
  const Int e = (ipow(from_u64(p), static_cast<unsigned long>(i)) - 1) / 2;
  for (;;) {
    Vec a(deg(f));
    for (auto& v : a) v = rng() % p;
    trim(a);
    if (deg(a) < 1) continue;
    Vec g = gcd(f, sub(powmod(a, e, f, p), Vec{1}, p), p);
    if (deg(g) > 0 && deg(g) < deg(f)) {
      equal_degree(g, i, p, rng, out);
      equal_degree(quotient(f, g, p), i, p, rng, out);
      return;
    }
  }
}

/// Monic irreducible factors of a monic squarefree f over F_p (p odd).
inline std::vector<Vec> factor_squarefree(const Vec& f, u64 p) {
  std::mt19937_64 rng(0x6c65686d6572ull);
  std::vector<Vec> out;
  for (auto& [i, g] : distinct_degree(f, p)) equal_degree(g, i, p, rng, out);
  return out;
}

}  // namespace modq

struct PolyFactorization {
  std::vector<IntPoly> factors;
  bool complete = true;  ///< false when the recombination budget ran out; the last factor is then unresolved
};

namespace detail {

using ZVec = std::vector<Int>;

inline ZVec lift_vec(const modq::Vec& a) {
  ZVec r;
  for (u64 v : a) r.push_back(from_u64(v));
  return r;
}

inline ZVec zmul(const ZVec& a, const ZVec& b) {
  if (a.empty() || b.empty()) return {};
  ZVec r(a.size() + b.size() - 1, Int(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return r;
}

inline void zreduce(ZVec& a, const Int& m) {
  for (auto& v : a) mpz_fdiv_r(v.get_mpz_t(), v.get_mpz_t(), m.get_mpz_t());
}

/// Lift W = g0 h0 mod p to W = g h mod p^k (g, h monic).
inline std::pair<ZVec, ZVec> hensel_pair(const ZVec& W, const modq::Vec& g0, const modq::Vec& h0, u64 p, unsigned k) {
  auto [s, t] = modq::bezout(g0, h0, p);
  ZVec g = lift_vec(g0), h = lift_vec(h0);
  Int m = from_u64(p);
  for (unsigned j = 1; j < k; ++j) {
    ZVec gh = zmul(g, h);
    modq::Vec e(W.size(), 0);
    for (std::size_t i = 0; i < W.size(); ++i) {
      Int diff = W[i] - (i < gh.size() ? gh[i] : Int(0));
      mpz_divexact(diff.get_mpz_t(), diff.get_mpz_t(), m.get_mpz_t());
      e[i] = modq::reduce(diff, p);
    }
    modq::trim(e);
    auto [q, dg] = modq::divmod(modq::mul(t, e, p), g0, p);
    modq::Vec dh = modq::add(modq::mul(s, e, p), modq::mul(q, h0, p), p);
    for (std::size_t i = 0; i < dg.size(); ++i) g[i] += m * from_u64(dg[i]);
    for (std::size_t i = 0; i < dh.size(); ++i) h[i] += m * from_u64(dh[i]);
    m *= from_u64(p);
  }
  return {g, h};
}

/// Lift the modular factorization W = prod mods mod p to modulus p^k.
inline void hensel_tree(const ZVec& W, const std::vector<modq::Vec>& mods, u64 p, unsigned k, std::vector<ZVec>& out) {
  if (mods.size() == 1) {
    out.push_back(W);
    return;
  }
  const std::size_t half = mods.size() / 2;
  std::vector<modq::Vec> left(mods.begin(), mods.begin() + half), right(mods.begin() + half, mods.end());
  modq::Vec g0{1}, h0{1};
  for (auto& f : left) g0 = modq::mul(g0, f, p);
  for (auto& f : right) h0 = modq::mul(h0, f, p);
  auto [g, h] = hensel_pair(W, g0, h0, p, k);
  hensel_tree(g, left, p, k, out);
  hensel_tree(h, right, p, k, out);
}

inline IntPoly symmetric_poly(ZVec a, const Int& m) {
  Int half = m / 2;
  for (auto& v : a) {
    mpz_fdiv_r(v.get_mpz_t(), v.get_mpz_t(), m.get_mpz_t());
    if (v > half) v -= m;
  }
  return IntPoly(std::move(a));
}

inline bool next_combination(std::vector<std::size_t>& idx, std::size_t n) {
  const std::size_t k = idx.size();
  for (std::size_t i = k; i-- > 0;) {
    if (idx[i] < n - k + i) {
      ++idx[i];
      for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
      return true;
    }
  }
  return false;
}

}  // namespace detail

/// Irreducible factors over Z of a monic squarefree V of degree >= 1, in the
/// order found. budget caps the number of candidate subsets tried.
inline PolyFactorization factor_monic_squarefree(const IntPoly& V, unsigned long budget = 1ul << 16) {
  if (!V.is_monic() || V.degree() < 1) throw std::domain_error("factor_monic_squarefree: V must be monic of degree >= 1");
  PolyFactorization out;
  const int n = V.degree();
  if (n == 1) {
    out.factors.push_back(V);
    return out;
  }

  // pick the prime with the fewest modular factors; intersect degree patterns
  std::vector<bool> allowed(n + 1, true);
  u64 best = 0;
  std::size_t best_count = 0;
  int used = 0;
  for (u64 p : primes_up_to(2000)) {
    if (p == 2) continue;
    if (used == 10) break;
    modq::Vec f = modq::reduce(V, p);
    if (modq::deg(modq::gcd(f, modq::derivative(f, p), p)) != 0) continue;
    ++used;
    std::vector<bool> sums(n + 1, false);
    sums[0] = true;
    std::size_t count = 0;
    for (auto& [i, g] : modq::distinct_degree(f, p))
      for (int k = 0; k < modq::deg(g) / i; ++k, ++count)
        for (int s = n; s >= i; --s)
          if (sums[s - i]) sums[s] = true;
    for (int s = 0; s <= n; ++s) allowed[s] = allowed[s] && sums[s];
    if (best == 0 || count < best_count) best = p, best_count = count;
  }
  if (best == 0) throw std::domain_error("factor_monic_squarefree: V is not squarefree");
  bool proper = false;
  for (int s = 1; s < n; ++s) proper = proper || allowed[s];
  if (!proper || best_count == 1) {
    out.factors.push_back(V);
    return out;
  }

  // Hensel lift past twice the Mignotte-type bound 2^n ||V||_2
  const u64 p = best;
  double log2_norm = 0;
  {
    Int sq = 0;
    for (const auto& c : V.coeffs()) sq += c * c;
    log2_norm = 0.5 * static_cast<double>(bit_length(sq));
  }
  const double need_bits = n + log2_norm + 2;
  const unsigned k = static_cast<unsigned>(std::ceil(need_bits / std::log2(static_cast<double>(p)))) + 1;
  const Int M = ipow(from_u64(p), k);
  auto mods = modq::factor_squarefree(modq::reduce(V, p), p);
  std::vector<detail::ZVec> lifted;
  detail::hensel_tree(V.coeffs(), mods, p, k, lifted);

  std::vector<int> degs;
  for (auto& f : lifted) degs.push_back(static_cast<int>(f.size()) - 1);
  IntPoly W = V;
  for (std::size_t s = 1; 2 * s <= lifted.size();) {
    std::vector<std::size_t> idx(s);
    for (std::size_t i = 0; i < s; ++i) idx[i] = i;
    bool found = false;
    do {
      int dsum = 0;
      for (auto i : idx) dsum += degs[i];
      if (!allowed[dsum]) continue;
      if (budget == 0) {
        out.factors.push_back(W);
        out.complete = false;
        return out;
      }
      --budget;
      // constant terms first
      Int c0 = 1;
      for (auto i : idx) c0 = (c0 * lifted[i][0]) % M;
      detail::ZVec c0v{c0};
      Int c0s = detail::symmetric_poly(c0v, M)[0];
      if (W[0] != 0 && (c0s == 0 || !divides(c0s, W[0]))) continue;
      detail::ZVec prod{Int(1)};
      for (auto i : idx) {
        prod = detail::zmul(prod, lifted[i]);
        detail::zreduce(prod, M);
      }
      IntPoly G = detail::symmetric_poly(prod, M);
      if (auto Q = exact_quotient(W, G)) {
        out.factors.push_back(G);
        W = *Q;
        std::vector<detail::ZVec> rest;
        std::vector<int> rdeg;
        for (std::size_t i = 0, j = 0; i < lifted.size(); ++i) {
          if (j < s && idx[j] == i) {
            ++j;
            continue;
          }
          rest.push_back(std::move(lifted[i]));
          rdeg.push_back(degs[i]);
        }
        lifted = std::move(rest);
        degs = std::move(rdeg);
        found = true;
        break;
      }
    } while (detail::next_combination(idx, lifted.size()));
    if (!found) ++s;
  }
  out.factors.push_back(W);
  return out;
}

}  // namespace lehmer
