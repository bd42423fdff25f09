#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "lehmer/resultant.hpp"

namespace lehmer {

/// Newton power sums p_0..p_count of the roots of a monic P (p_0 = deg P).
inline std::vector<Int> power_sums(const IntPoly& P, std::size_t count) {
  if (!P.is_monic()) throw std::domain_error("power_sums: polynomial must be monic");
  const int d = P.degree();
  std::vector<Int> p(count + 1);
  p[0] = d;
  // a_{d-i} is the coefficient paired with e_i up to sign.
  for (std::size_t k = 1; k <= count; ++k) {
    Int s = 0;
    const std::size_t lim = std::min<std::size_t>(k - 1, d);
    for (std::size_t i = 1; i <= lim; ++i) mpz_addmul(s.get_mpz_t(), P[d - i].get_mpz_t(), p[k - i].get_mpz_t());
    if (k <= static_cast<std::size_t>(d)) s += P[d - k] * static_cast<unsigned long>(k);
    p[k] = -s;
  }
  return p;
}

/// Monic polynomial of degree d whose root power sums are q_1..q_d.
/// q[0] is ignored. Throws consistency_error if the sums are not integral
/// power sums (a division fails to be exact).
inline IntPoly from_power_sums(const std::vector<Int>& q, std::size_t d) {
  if (q.size() < d + 1) throw std::invalid_argument("from_power_sums: not enough power sums");
  // k e_k = sum_{i=1}^k (-1)^(i-1) e_{k-i} q_i
  std::vector<Int> e(d + 1);
  e[0] = 1;
  for (std::size_t k = 1; k <= d; ++k) {
    Int s = 0;
    for (std::size_t i = 1; i <= k; ++i) {
      if (i % 2)
        mpz_addmul(s.get_mpz_t(), e[k - i].get_mpz_t(), q[i].get_mpz_t());
      else
        mpz_submul(s.get_mpz_t(), e[k - i].get_mpz_t(), q[i].get_mpz_t());
    }
    if (!mpz_divisible_ui_p(s.get_mpz_t(), k)) throw consistency_error("from_power_sums: non-integral elementary symmetric function");
    mpz_divexact_ui(e[k].get_mpz_t(), s.get_mpz_t(), k);
  }
  std::vector<Int> c(d + 1);
  for (std::size_t k = 0; k <= d; ++k) c[d - k] = (k % 2) ? Int(-e[k]) : e[k];
  return IntPoly(std::move(c));
}

/// P_n: the monic polynomial whose roots are the n-th powers of the roots of P.
inline IntPoly power_map(const IntPoly& P, std::uint64_t n) {
  if (P.is_zero() || P.degree() < 1 || !P.is_monic()) throw std::domain_error("power_map: P must be monic of degree >= 1");
  if (n == 0) throw std::domain_error("power_map: n must be positive");
  if (n == 1) return P;
  const std::size_t d = P.degree();
  auto p = power_sums(P, d * n);
  std::vector<Int> q(d + 1);
  for (std::size_t k = 0; k <= d; ++k) q[k] = p[k * n];
  return from_power_sums(q, d);
}

/// Shared-power-sum table of P_1..P_N; one power-sum pass for all n.
class PowerMapTable {
 public:
  PowerMapTable(const IntPoly& P, std::uint64_t max_n) : P_(P), max_n_(max_n) {
    if (P.is_zero() || P.degree() < 1 || !P.is_monic()) throw std::domain_error("power_map: P must be monic of degree >= 1");
    sums_ = power_sums(P, static_cast<std::size_t>(P.degree()) * max_n);
  }
  std::uint64_t max_n() const { return max_n_; }
  const std::vector<Int>& sums() const { return sums_; }
  IntPoly at(std::uint64_t n) const {
    if (n == 0 || n > max_n_) throw std::out_of_range("PowerMapTable: n out of range");
    if (n == 1) return P_;
    const std::size_t d = P_.degree();
    std::vector<Int> q(d + 1);
    for (std::size_t k = 0; k <= d; ++k) q[k] = sums_[k * n];
    return from_power_sums(q, d);
  }

 private:
  IntPoly P_;
  std::uint64_t max_n_;
  std::vector<Int> sums_;
};

/// Integer polynomial of degree <= D through (k, values[k]) for k = 0..D.
/// Newton forward differences; each divided difference must be integral
/// once scaled by k!, which holds whenever an integer interpolant exists.
inline IntPoly interpolate_at_naturals(const std::vector<Int>& values) {
  const std::size_t n = values.size();
  if (n == 0) throw std::invalid_argument("interpolate: no values");
  std::vector<Int> diff = values;
  std::vector<Int> newton(n);  // coefficient of falling factorial x^(k) / k!
  for (std::size_t k = 0; k < n; ++k) {
    newton[k] = diff[0];
    for (std::size_t i = 0; i + 1 < n - k; ++i) diff[i] = diff[i + 1] - diff[i];
  }
  // sum_k newton[k] * C(x, k); expand with exact rational-free arithmetic:
  // accumulate numerators over the common denominator (n-1)!.
  Int fact = 1;
  for (std::size_t k = 2; k < n; ++k) fact *= static_cast<unsigned long>(k);
  std::vector<Int> acc(n);
  std::vector<Int> ff{1};  // x(x-1)...(x-k+1), ascending
  Int kf = 1;
  for (std::size_t k = 0; k < n; ++k) {
    if (k > 0) {
      kf *= static_cast<unsigned long>(k);
      std::vector<Int> nf(ff.size() + 1);
      for (std::size_t i = 0; i < ff.size(); ++i) {
        nf[i + 1] += ff[i];
        nf[i] -= ff[i] * static_cast<unsigned long>(k - 1);
      }
      ff = std::move(nf);
    }
    Int scale = divexact(fact, kf) * newton[k];
    for (std::size_t i = 0; i < ff.size(); ++i) mpz_addmul(acc[i].get_mpz_t(), scale.get_mpz_t(), ff[i].get_mpz_t());
  }
  for (auto& v : acc) {
    if (!divides(fact, v)) throw consistency_error("interpolate: values have no integer interpolant");
    v = divexact(v, fact);
  }
  return IntPoly(std::move(acc));
}

/// P_n computed as Res_y(P(y), x - y^n), evaluated at x = 0..d and interpolated.
/// Independent of the power-sum route; used for cross-checks.
inline IntPoly power_map_by_resultant(const IntPoly& P, std::uint64_t n) {
  if (P.is_zero() || P.degree() < 1 || !P.is_monic()) throw std::domain_error("power_map: P must be monic of degree >= 1");
  if (n == 0) throw std::domain_error("power_map: n must be positive");
  const int d = P.degree();
  std::vector<Int> vals;
  for (int x = 0; x <= d; ++x) {
    IntPoly B = IntPoly::constant(x) - IntPoly::monomial(1, n);
    vals.push_back(resultant(P, B));
  }
  return interpolate_at_naturals(vals);
}

/// Monic polynomial with roots alpha*beta over all root pairs of A and B.
/// Res_y(A(y), y^b B(x/y)) sampled at x = 0..ab and interpolated.
inline IntPoly composed_product(const IntPoly& A, const IntPoly& B) {
  if (!A.is_monic() || !B.is_monic() || A.degree() < 1 || B.degree() < 1)
    throw std::domain_error("composed_product: inputs must be monic of degree >= 1");
  const int a = A.degree(), b = B.degree();
  std::vector<Int> vals;
  vals.reserve(a * b + 1);
  for (int x = 0; x <= a * b; ++x) {
    // y^b B(x/y) = sum_i B_i x^i y^(b-i)
    std::vector<Int> c(b + 1);
    Int xp = 1;
    for (int i = 0; i <= b; ++i) {
      c[b - i] = B[i] * xp;
      xp *= x;
    }
    IntPoly H(std::move(c));
    if (H.is_zero()) {
      vals.push_back(0);
      continue;
    }
    vals.push_back(resultant(A, H));
  }
  IntPoly C = interpolate_at_naturals(vals);
  if (C.is_zero() || C.degree() != a * b || !C.is_monic()) throw consistency_error("composed_product: interpolant is not monic of degree ab");
  return C;
}

/// A multiset {n_1, ..., n_r} of positive exponents.
using ExponentMultiset = std::vector<std::uint64_t>;

/// P_N: the composed product of P_{n_1}, ..., P_{n_r}, of degree d^r.
/// Built from power sums, p_k(P_N) = prod_i p_{k n_i}(P).
inline IntPoly multiset_poly(const IntPoly& P, const ExponentMultiset& ns) {
  if (ns.empty()) throw std::domain_error("multiset_poly: empty multiset");
  if (P.is_zero() || P.degree() < 1 || !P.is_monic()) throw std::domain_error("multiset_poly: P must be monic of degree >= 1");
  std::size_t D = 1;
  std::uint64_t top = 0;
  for (auto n : ns) {
    if (n == 0) throw std::domain_error("multiset_poly: exponents must be positive");
    D *= static_cast<std::size_t>(P.degree());
    top = std::max(top, n);
  }
  auto p = power_sums(P, D * top);
  std::vector<Int> q(D + 1);
  q[0] = static_cast<unsigned long>(D);
  for (std::size_t k = 1; k <= D; ++k) {
    q[k] = 1;
    for (auto n : ns) q[k] *= p[k * n];
  }
  return from_power_sums(q, D);
}

/// Same polynomial as multiset_poly, by repeated resultant-based composed products.
inline IntPoly multiset_poly_by_resultant(const IntPoly& P, const ExponentMultiset& ns) {
  if (ns.empty()) throw std::domain_error("multiset_poly: empty multiset");
  IntPoly acc = power_map_by_resultant(P, ns[0]);
  for (std::size_t i = 1; i < ns.size(); ++i) acc = composed_product(acc, power_map_by_resultant(P, ns[i]));
  return acc;
}

}  // namespace lehmer
