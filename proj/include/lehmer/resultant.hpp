#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

#include "lehmer/poly.hpp"

namespace lehmer {

/// Res(A, B) = lc(A)^deg B * prod B(alpha) over the roots alpha of A.
///
/// Sub-resultant remainder sequence; every division is exact, so the
/// computation stays in Z. Linear second arguments go through evaluation.
inline Int resultant(const IntPoly& A, const IntPoly& B) {
  if (A.is_zero() || B.is_zero()) throw std::domain_error("resultant: zero polynomial");
  const int da = A.degree(), db = B.degree();
  if (db == 0) return ipow(B[0], da);
  if (da == 0) return ipow(A[0], db);
  if (db == 1) {
    // (-1)^da * sum a_i (-b0)^i b1^(da-i)
    std::vector<Int> b1p(da + 1);
    b1p[0] = 1;
    for (int i = 1; i <= da; ++i) b1p[i] = b1p[i - 1] * B[1];
    const Int nb0 = -B[0];
    Int r = 0, nb0pow = 1;
    for (int i = 0; i <= da; ++i) {
      r += A[i] * nb0pow * b1p[da - i];
      nb0pow *= nb0;
    }
    return (da % 2) ? Int(-r) : r;
  }
  if (da == 1) {
    Int r = resultant(B, A);
    return ((da * db) % 2) ? Int(-r) : r;
  }

  Int ca = content(A), cb = content(B);
  IntPoly a = A, b = B;
  {
    std::vector<Int> va = A.coeffs(), vb = B.coeffs();
    for (auto& v : va) v = divexact(v, ca);
    for (auto& v : vb) v = divexact(v, cb);
    a = IntPoly(std::move(va));
    b = IntPoly(std::move(vb));
  }
  Int t = ipow(ca, db) * ipow(cb, da);
  Int g = 1, h = 1;
  int s = 1;
  if (a.degree() < b.degree()) {
    std::swap(a, b);
    if ((a.degree() % 2) && (b.degree() % 2)) s = -1;
  }
  for (;;) {
    const int delta = a.degree() - b.degree();
    if ((a.degree() % 2) && (b.degree() % 2)) s = -s;
    IntPoly r = pseudo_remainder(a, b);
    if (r.is_zero()) return 0;
    a = std::move(b);
    Int div = g * ipow(h, delta);
    std::vector<Int> rv = r.coeffs();
    for (auto& v : rv) v = divexact(v, div);
    b = IntPoly(std::move(rv));
    g = a.leading();
    if (delta == 0) {
      // h unchanged
    } else if (delta == 1) {
      h = g;
    } else {
      h = divexact(ipow(g, delta), ipow(h, delta - 1));
    }
    if (b.degree() == 0) break;
  }
  // b is a nonzero constant; a has degree >= 1.
  const int dA = a.degree();
  Int last = divexact(ipow(b.leading(), dA), ipow(h, dA - 1));
  return s * t * last;
}

/// Discriminant of a monic P: (-1)^(d(d-1)/2) Res(P, P').
inline Int discriminant(const IntPoly& P) {
  if (P.is_zero()) throw std::domain_error("discriminant of the zero polynomial");
  if (!P.is_monic()) throw std::domain_error("discriminant: polynomial must be monic");
  const int d = P.degree();
  if (d == 0) throw std::domain_error("discriminant: degree must be at least 1");
  if (d == 1) return 1;
  Int r = resultant(P, derivative(P));
  return ((static_cast<long>(d) * (d - 1) / 2) % 2) ? Int(-r) : r;
}

}  // namespace lehmer
