#pragma once

// Small-integer arithmetic on exponents and indices: divisors, Moebius, totient.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <utility>
#include <vector>

namespace lehmer {

using u64 = std::uint64_t;

inline u64 mulmod_u64(u64 a, u64 b, u64 m) {
  return static_cast<u64>((static_cast<unsigned __int128>(a) * b) % m);
}

inline u64 powmod_u64(u64 b, u64 e, u64 m) {
  u64 r = 1 % m;
  b %= m;
  while (e) {
    if (e & 1) r = mulmod_u64(r, b, m);
    b = mulmod_u64(b, b, m);
    e >>= 1;
  }
  return r;
}

inline u64 invmod_u64(u64 a, u64 m) {
  // m prime
  return powmod_u64(a, m - 2, m);
}

/// Prime factorization by trial division; fine for exponents and indices.
inline std::vector<std::pair<u64, unsigned>> factor_small(u64 n) {
  if (n == 0) throw std::domain_error("factor_small: zero");
  std::vector<std::pair<u64, unsigned>> f;
  for (u64 p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
    if (n % p) continue;
    unsigned e = 0;
    while (n % p == 0) n /= p, ++e;
    f.emplace_back(p, e);
  }
  if (n > 1) f.emplace_back(n, 1);
  return f;
}

inline std::vector<u64> divisors(u64 n) {
  std::vector<u64> ds{1};
  for (auto [p, e] : factor_small(n)) {
    std::size_t base = ds.size();
    u64 pk = 1;
    for (unsigned k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < base; ++i) ds.push_back(ds[i] * pk);
    }
  }
  std::sort(ds.begin(), ds.end());
  return ds;
}

inline int mobius(u64 n) {
  auto f = factor_small(n);
  for (auto& pe : f)
    if (pe.second > 1) return 0;
  return (f.size() % 2) ? -1 : 1;
}

inline u64 totient(u64 n) {
  u64 r = n;
  for (auto [p, e] : factor_small(n)) r = r / p * (p - 1);
  return r;
}

inline bool is_prime_small(u64 n) {
  if (n < 2) return false;
  for (u64 p = 2; p * p <= n; ++p)
    if (n % p == 0) return false;
  return true;
}

inline std::vector<u64> primes_up_to(u64 n) {
  std::vector<bool> comp(n + 1, false);
  std::vector<u64> ps;
  for (u64 i = 2; i <= n; ++i) {
    if (comp[i]) continue;
    ps.push_back(i);
    for (u64 j = i * i; j <= n; j += i) comp[j] = true;
  }
  return ps;
}

/// Squarefree divisors of n split by the sign of mu(n/m).
struct DivisorTable {
  u64 n = 0;
  std::vector<u64> plus;   ///< mu(n/m) = +1, descending
  std::vector<u64> minus;  ///< mu(n/m) = -1, descending
  u64 phi = 0;
  unsigned distinct_primes = 0;
};

inline DivisorTable divisor_table(u64 n) {
  if (n == 0) throw std::domain_error("divisor_table: n must be positive");
  DivisorTable t;
  t.n = n;
  t.phi = totient(n);
  t.distinct_primes = static_cast<unsigned>(factor_small(n).size());
  for (u64 m : divisors(n)) {
    int mu = mobius(n / m);
    if (mu == 1) t.plus.push_back(m);
    if (mu == -1) t.minus.push_back(m);
  }
  std::sort(t.plus.rbegin(), t.plus.rend());
  std::sort(t.minus.rbegin(), t.minus.rend());
  return t;
}

}  // namespace lehmer
