#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <vector>

#include "lehmer/bigint.hpp"
#include "lehmer/numtheory.hpp"

namespace lehmer {

struct PrimePower {
  Int prime;
  unsigned long exponent = 0;
  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// n = sign * prod p^e * cofactor. A cofactor other than 1 is a composite
/// that the work budget could not split.
struct Factorization {
  int sign = 1;
  std::vector<PrimePower> factors;  ///< strictly increasing primes
  Int cofactor = 1;

  bool complete() const { return cofactor == 1; }
  Int value() const {
    Int v = sign;
    for (const auto& f : factors) v *= ipow(f.prime, f.exponent);
    return v * cofactor;
  }
};

struct FactorBudget {
  unsigned long trial_bound = 10000;
  unsigned long rho_iterations = 1ul << 21;  ///< total Pollard-Brent steps per call
};

namespace detail {

inline bool miller_rabin_round(const Int& n, const Int& nm1, const Int& d, unsigned long s, const Int& a) {
  Int x;
  mpz_powm(x.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
  if (x == 1 || x == nm1) return true;
  for (unsigned long r = 1; r < s; ++r) {
    mpz_powm_ui(x.get_mpz_t(), x.get_mpz_t(), 2, n.get_mpz_t());
    if (x == nm1) return true;
    if (x == 1) return false;
  }
  return false;
}

}  // namespace detail

/// Miller-Rabin. Deterministic below 3.3e24 (bases = first 13 primes);
/// above that, those bases plus `rounds` bases from a fixed-seed generator.
inline bool is_probable_prime(const Int& n, unsigned rounds = 64) {
  if (n < 2) return false;
  static const unsigned long small[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41};
  for (unsigned long p : small) {
    if (n == p) return true;
    if (mpz_divisible_ui_p(n.get_mpz_t(), p)) return false;
  }
  Int nm1 = n - 1, d = nm1;
  unsigned long s = mpz_scan1(d.get_mpz_t(), 0);
  mpz_tdiv_q_2exp(d.get_mpz_t(), d.get_mpz_t(), s);
  for (unsigned long p : small)
    if (!detail::miller_rabin_round(n, nm1, d, s, Int(p))) return false;
  static const Int deterministic_bound("3317044064679887385961981");
  if (n < deterministic_bound) return true;
  gmp_randclass rng(gmp_randinit_mt);
  rng.seed(0x5eed);
  for (unsigned i = 0; i < rounds; ++i) {
    Int a = rng.get_z_range(n - 3) + 2;
    if (!detail::miller_rabin_round(n, nm1, d, s, a)) return false;
  }
  return true;
}

namespace detail {

/// Pollard-Brent; returns a nontrivial factor or 0 when the budget runs out.
inline Int pollard_brent(const Int& n, unsigned long& budget) {
  if (mpz_even_p(n.get_mpz_t())) return 2;
  for (unsigned long c = 1; budget > 0; ++c) {
    Int y = 2, x, q = 1, g = 1, ys;
    const unsigned long m = 128;
    unsigned long r = 1;
    auto f = [&](const Int& v) {
      Int t = v * v + c;
      mpz_mod(t.get_mpz_t(), t.get_mpz_t(), n.get_mpz_t());
      return t;
    };
    do {
      x = y;
      for (unsigned long i = 0; i < r; ++i) y = f(y);
      unsigned long k = 0;
      do {
        ys = y;
        const unsigned long lim = std::min(m, r - k);
        for (unsigned long i = 0; i < lim; ++i) {
          y = f(y);
          Int diff = x - y;
          q = q * diff;
          mpz_mod(q.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
        }
        mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
        k += lim;
        budget = budget > lim ? budget - lim : 0;
      } while (k < r && g == 1 && budget > 0);
      r *= 2;
    } while (g == 1 && budget > 0);
    if (g == n) {
      do {
        ys = f(ys);
        Int diff = x - ys;
        mpz_gcd(g.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
      } while (g == 1);
    }
    if (g != n && g != 1) return g;
  }
  return 0;
}

}  // namespace detail

/// Trial division, then Miller-Rabin / perfect-power / Pollard-Brent on what
/// remains. Factorization of 0 is rejected.
inline Factorization factorize(const Int& n, const FactorBudget& budget = {}) {
  if (n == 0) throw std::domain_error("factorize: zero has no factorization");
  Factorization out;
  out.sign = n < 0 ? -1 : 1;
  Int m = iabs(n);
  std::map<Int, unsigned long> found;
  static const std::vector<u64> small = primes_up_to(10000);
  for (u64 p : small) {
    if (p > budget.trial_bound) break;
    if (m == 1) break;
    if (Int(p) * p > m) break;
    while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
      mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), p);
      ++found[Int(p)];
    }
  }
  unsigned long rho_budget = budget.rho_iterations;
  std::vector<std::pair<Int, unsigned long>> work;
  if (m > 1) work.emplace_back(m, 1);
  while (!work.empty()) {
    auto [c, mult] = work.back();
    work.pop_back();
    if (is_probable_prime(c)) {
      found[c] += mult;
      continue;
    }
    if (mpz_perfect_power_p(c.get_mpz_t())) {
      for (unsigned long k = 2; k <= bit_length(c); ++k) {
        Int root;
        if (mpz_root(root.get_mpz_t(), c.get_mpz_t(), k)) {
          work.emplace_back(root, mult * k);
          c = 1;
          break;
        }
      }
      if (c == 1) continue;
    }
    Int f = detail::pollard_brent(c, rho_budget);
    if (f == 0) {
      out.cofactor *= ipow(c, mult);
      continue;
    }
    work.emplace_back(f, mult);
    work.emplace_back(divexact(c, f), mult);
  }
  // a prime found in one branch may still hide in an unsplit composite
  for (auto& [p, e] : found) {
    while (out.cofactor != 1 && divides(p, out.cofactor)) {
      out.cofactor = divexact(out.cofactor, p);
      ++e;
    }
    out.factors.push_back({p, e});
  }
  return out;
}

}  // namespace lehmer
