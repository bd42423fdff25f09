#pragma once

#include <cstdint>
#include <stdexcept>

#include "lehmer/numtheory.hpp"
#include "lehmer/poly.hpp"

namespace lehmer {

/// Phi_n = prod_{m | n} (x^m - 1)^mu(n/m).
inline IntPoly cyclotomic(std::uint64_t n) {
  if (n == 0) throw std::domain_error("cyclotomic: n must be positive");
  IntPoly num = IntPoly::constant(1), den = IntPoly::constant(1);
  for (u64 m : divisors(n)) {
    int mu = mobius(n / m);
    if (mu == 0) continue;
    IntPoly f = IntPoly::monomial(1, m) - IntPoly::constant(1);
    (mu == 1 ? num : den) *= f;
  }
  auto q = exact_quotient(num, den);
  if (!q) throw consistency_error("cyclotomic: inexact division");
  return *q;
}

}  // namespace lehmer
