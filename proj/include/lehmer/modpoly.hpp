#pragma once

// Dense polynomials over Z/qZ for word-sized q, coefficients ascending.
// Division routines need a monic divisor unless q is prime.

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "lehmer/numtheory.hpp"
#include "lehmer/poly.hpp"

namespace lehmer {

namespace modq {

using Vec = std::vector<u64>;

inline void trim(Vec& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

inline u64 reduce(const Int& v, u64 q) {
  return mpz_fdiv_ui(v.get_mpz_t(), q);
}

inline Vec reduce(const IntPoly& P, u64 q) {
  Vec r(P.size());
  for (std::size_t i = 0; i < P.size(); ++i) r[i] = reduce(P[i], q);
  trim(r);
  return r;
}

inline int deg(const Vec& a) { return static_cast<int>(a.size()) - 1; }

inline Vec mul(const Vec& a, const Vec& b, u64 q) {
  if (a.empty() || b.empty()) return {};
  Vec r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a[i]) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + mulmod_u64(a[i], b[j], q)) % q;
  }
  trim(r);
  return r;
}

inline Vec sub(Vec a, const Vec& b, u64 q) {
  if (b.size() > a.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = (a[i] + q - b[i]) % q;
  trim(a);
  return a;
}

/// a mod f for monic f.
inline Vec rem(Vec a, const Vec& f, u64 q) {
  const int df = deg(f);
  for (int k = deg(a); k >= df; --k) {
    u64 c = a[k];
    if (!c) continue;
    for (int i = 0; i <= df; ++i) a[k - df + i] = (a[k - df + i] + q - mulmod_u64(c, f[i], q)) % q;
  }
  trim(a);
  return a;
}

inline Vec mulmod(const Vec& a, const Vec& b, const Vec& f, u64 q) { return rem(mul(a, b, q), f, q); }

/// x^e mod (f, q), f monic.
inline Vec powx(const Int& e, const Vec& f, u64 q) {
  Vec result{1 % q}, base{0, 1};
  base = rem(base, f, q);
  result = rem(result, f, q);
  const std::size_t bits = bit_length(e);
  for (std::size_t i = bits; i-- > 0;) {
    result = mulmod(result, result, f, q);
    if (mpz_tstbit(e.get_mpz_t(), i)) result = mulmod(result, base, f, q);
  }
  return result;
}

inline Vec monic(Vec a, u64 p) {
  if (a.empty()) return a;
  u64 inv = invmod_u64(a.back(), p);
  for (auto& v : a) v = mulmod_u64(v, inv, p);
  return a;
}

/// Monic gcd over F_p.
inline Vec gcd(Vec a, Vec b, u64 p) {
  while (!b.empty()) {
    b = monic(b, p);
    Vec r = rem(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a, p);
}

/// Exact quotient a / b over F_p, b monic.
inline Vec quotient(Vec a, const Vec& b, u64 p) {
  const int db = deg(b);
  if (deg(a) < db) return {};
  Vec q(deg(a) - db + 1, 0);
  for (int k = deg(a); k >= db; --k) {
    u64 c = a[k];
    q[k - db] = c;
    if (!c) continue;
    for (int i = 0; i <= db; ++i) a[k - db + i] = (a[k - db + i] + p - mulmod_u64(c, b[i], p)) % p;
  }
  trim(q);
  return q;
}

inline Vec derivative(const Vec& a, u64 q) {
  if (a.size() <= 1) return {};
  Vec r(a.size() - 1);
  for (std::size_t i = 1; i < a.size(); ++i) r[i - 1] = mulmod_u64(a[i], i % q, q);
  trim(r);
  return r;
}

/// Distinct-degree factorization of a monic squarefree f over F_p:
/// (i, product of the irreducible factors of degree i).
inline std::vector<std::pair<int, Vec>> distinct_degree(Vec f, u64 p) {
  std::vector<std::pair<int, Vec>> out;
  Vec h{0, 1};
  for (int i = 1; 2 * i <= deg(f); ++i) {
    h = rem(h, f, p);
    // h <- h^p mod f
    Vec acc{1};
    Vec b = h;
    for (u64 e = p; e; e >>= 1) {
      if (e & 1) acc = mulmod(acc, b, f, p);
      b = mulmod(b, b, f, p);
    }
    h = acc;
    Vec g = gcd(f, sub(h, Vec{0, 1}, p), p);
    if (deg(g) > 0) {
      out.emplace_back(i, g);
      f = quotient(f, g, p);
      h = rem(h, f, p);
    }
  }
  if (deg(f) > 0) out.emplace_back(deg(f), f);
  return out;
}


inline u64 eval(const Vec& a, u64 x, u64 q) {
  u64 r = 0;
  for (auto it = a.rbegin(); it != a.rend(); ++it) r = (mulmod_u64(r, x, q) + *it) % q;
  return r;
}

inline Vec scale(Vec a, u64 c, u64 q) {
  for (auto& v : a) v = mulmod_u64(v, c, q);
  trim(a);
  return a;
}

inline Vec add(Vec a, const Vec& b, u64 q) {
  if (b.size() > a.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = (a[i] + b[i]) % q;
  trim(a);
  return a;
}

/// base^e mod (f, q), f monic.
inline Vec powmod(Vec base, u64 e, const Vec& f, u64 q) {
  Vec acc = rem(Vec{1 % q}, f, q);
  base = rem(std::move(base), f, q);
  while (e) {
    if (e & 1) acc = mulmod(acc, base, f, q);
    e >>= 1;
    if (e) base = mulmod(base, base, f, q);
  }
  return acc;
}

/// Res(a, b) = lc(a)^{deg b} prod_{a(x) = 0} b(x) over F_p.
inline u64 resultant(Vec a, Vec b, u64 p) {
  if (a.empty() || b.empty()) return 0;
  u64 res = 1;
  while (deg(b) > 0) {
    const int da = deg(a), db = deg(b);
    Vec r = rem(a, monic(b, p), p);
    if (r.empty()) return 0;
    if ((da & 1) && (db & 1)) res = (p - res) % p;
    res = mulmod_u64(res, powmod_u64(b.back(), da - deg(r), p), p);
    a = std::move(b);
    b = std::move(r);
  }
  return mulmod_u64(res, powmod_u64(b[0], deg(a), p), p);
}

/// Polynomial of degree < values.size() through (k, values[k]), k = 0, 1, ...
inline Vec interpolate(const std::vector<u64>& values, u64 p) {
  const std::size_t n = values.size();
  std::vector<u64> c = values;  // Newton divided differences
  for (std::size_t k = 1; k < n; ++k)
    for (std::size_t i = n - 1; i >= k; --i) {
      u64 num = (c[i] + p - c[i - 1]) % p;
      c[i] = mulmod_u64(num, invmod_u64(k % p, p), p);
    }
  Vec r{c[n - 1]};
  for (std::size_t k = n - 1; k-- > 0;) {
    // r = r * (x - k) + c[k]
    Vec t(r.size() + 1, 0);
    for (std::size_t i = 0; i < r.size(); ++i) {
      t[i + 1] = (t[i + 1] + r[i]) % p;
      t[i] = (t[i] + p - mulmod_u64(r[i], k % p, p)) % p;
    }
    t[0] = (t[0] + c[k]) % p;
    r = std::move(t);
  }
  trim(r);
  return r;
}

/// Distinct roots in F_p of f (p an odd prime), ascending.
inline std::vector<u64> roots(const Vec& f, u64 p) {
  std::vector<u64> out;
  if (deg(f) < 1) return out;
  Vec g = monic(f, p);
  g = gcd(g, sub(powmod(Vec{0, 1}, p, g, p), Vec{0, 1}, p), p);
  std::mt19937_64 rng(0x6c65686d6572ull);
  std::vector<Vec> work{g};
  while (!work.empty()) {
    Vec h = std::move(work.back());
    work.pop_back();
    if (deg(h) < 1) continue;
    if (deg(h) == 1) {
      out.push_back((p - h[0]) % p);
      continue;
    }
    for (;;) {
      u64 delta = rng() % p;
      Vec t = sub(powmod(Vec{delta, 1}, (p - 1) / 2, h, p), Vec{1}, p);
      Vec s = gcd(h, t, p);
      if (deg(s) > 0 && deg(s) < deg(h)) {
        work.push_back(quotient(h, s, p));
        work.push_back(std::move(s));
        break;
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace modq

}  // namespace lehmer
