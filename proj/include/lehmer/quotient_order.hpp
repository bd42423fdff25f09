#pragma once

// Multiplicative order of x in Z[x]/(m, P), via distinct-degree
// factorization of P modulo each prime of m.

#include <string>
#include <vector>

#include "lehmer/factorize.hpp"
#include "lehmer/modpoly.hpp"

namespace lehmer {

namespace modq {

/// Order of x modulo (f, q) given a multiple E of it.
inline Int order_from_exponent(Int E, const Vec& f, u64 q) {
  if (powx(E, f, q) != Vec{1}) throw consistency_error("order_in_quotient: exponent is not a multiple of the order");
  for (const auto& pe : factorize(E).factors) {
    for (unsigned long k = 0; k < pe.exponent; ++k) {
      Int cand = divexact(E, pe.prime);
      if (powx(cand, f, q) == Vec{1})
        E = cand;
      else
        break;
    }
  }
  return E;
}

}  // namespace modq

struct BlockOrder {
  int degree = 0;      ///< degree of each irreducible factor in the block
  int factors = 0;     ///< number of irreducible factors of that degree
  Int order;           ///< order of x modulo the block over F_p
};

struct PrimeComponent {
  u64 p = 0;
  unsigned e = 0;
  Int order;                       ///< order of x in (Z/p^e)[x]/(P)
  std::vector<BlockOrder> blocks;  ///< per distinct-degree block over F_p
};

struct QuotientOrder {
  u64 m = 0;
  Int M;  ///< lcm of the component orders
  std::vector<PrimeComponent> components;
};

/// Order of x in Z[x]/(m, P). Requires gcd(a0, m) = 1 and P squarefree
/// modulo every prime dividing m.
inline QuotientOrder order_in_quotient(const IntPoly& P, u64 m) {
  if (!P.is_monic() || P.degree() < 1) throw std::domain_error("order_in_quotient: P must be monic of degree >= 1");
  if (m < 2) throw std::domain_error("order_in_quotient: m must be at least 2");
  QuotientOrder out;
  out.m = m;
  out.M = 1;
  for (auto [p, e] : factor_small(m)) {
    if (divides(Int(static_cast<unsigned long>(p)), P[0]))
      throw std::domain_error("order_in_quotient: prime " + std::to_string(p) + " divides the constant coefficient");
    modq::Vec fp = modq::reduce(P, p);
    if (modq::deg(modq::gcd(fp, modq::derivative(fp, p), p)) > 0)
      throw std::domain_error("order_in_quotient: P is not squarefree modulo " + std::to_string(p));
    PrimeComponent pc;
    pc.p = p;
    pc.e = e;
    Int E = 1;
    for (auto& [i, g] : modq::distinct_degree(fp, p)) {
      Int grp = ipow(from_u64(p), i) - 1;
      BlockOrder b;
      b.degree = i;
      b.factors = modq::deg(g) / i;
      b.order = modq::order_from_exponent(grp, g, p);
      pc.blocks.push_back(b);
      mpz_lcm(E.get_mpz_t(), E.get_mpz_t(), grp.get_mpz_t());
    }
    u64 q = 1;
    for (unsigned k = 0; k < e; ++k) q *= p;
    E *= ipow(from_u64(p), e - 1);
    pc.order = modq::order_from_exponent(E, modq::reduce(P, q), q);
    mpz_lcm(out.M.get_mpz_t(), out.M.get_mpz_t(), pc.order.get_mpz_t());
    out.components.push_back(std::move(pc));
  }
  return out;
}

}  // namespace lehmer
