#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "lehmer/cyclotomic.hpp"
#include "lehmer/numtheory.hpp"
#include "lehmer/power_map.hpp"
#include "lehmer/roots.hpp"

namespace lehmer {

enum class MeasureMethod { roots, graeffe };

/// Certified enclosure [lower, upper] of a Mahler measure.
struct MeasureResult {
  Real lower{Real(1.0, 128)};
  Real upper{Real(1.0, 128)};
  MeasureMethod method = MeasureMethod::roots;

  double value() const { return ((lower + upper) / 2.0).to_double(); }
  double error() const {
    Real mid = (lower + upper) / 2.0;
    double e = (upper - mid).to_double();
    // cover the rounding of the midpoint itself
    return e + std::fabs(mid.to_double()) * 4 * std::numeric_limits<double>::epsilon();
  }
  double log_upper() const { return log(upper).to_double(); }
  double log_lower() const { return log(lower).to_double(); }
  bool overlaps(const MeasureResult& o) const { return !(upper < o.lower || o.upper < lower); }
};

namespace detail {

/// M enclosure from a root set; radii widen each modulus to [|c|-r, |c|+r].
inline MeasureResult measure_from_roots(const RootSet& rs) {
  const mpfr_prec_t prec = std::max<mpfr_prec_t>(rs.precision_bits + 64, 192);
  Real lo(iabs(rs.leading), prec), hi(iabs(rs.leading), prec);
  const Real one(1.0, prec);
  for (const auto& r : rs.roots) {
    Real m = hypot(r.re.with_prec(prec), r.im.with_prec(prec));
    Real rad = r.radius.with_prec(prec);
    Real a = max(one, m - rad), b = max(one, m + rad);
    for (unsigned k = 0; k < r.multiplicity; ++k) {
      lo *= a;
      hi *= b;
    }
  }
  // relative slack for the rounding in the products above
  Real slack(std::ldexp(1.0, -static_cast<int>(prec) + 8) * (rs.degree + 2), prec);
  MeasureResult out;
  out.lower = lo * (one - slack);
  out.upper = hi * (one + slack);
  if (out.lower < one && rs.leading != 0 && iabs(rs.leading) >= 1) out.lower = max(out.lower, Real(iabs(rs.leading), prec));
  out.method = MeasureMethod::roots;
  return out;
}

}  // namespace detail

/// M(P) from certified roots, tightened until the half-width is <= target.
inline MeasureResult mahler_measure(const IntPoly& P, double target = 1e-12, unsigned max_bits = 4096) {
  if (P.is_zero()) throw std::domain_error("mahler_measure: zero polynomial");
  if (P.degree() == 0) {
    MeasureResult r;
    r.lower = Real(iabs(P[0]), 128);
    r.upper = r.lower;
    return r;
  }
  double root_target = std::min(target, 1e-15);
  for (;;) {
    RootSet rs = find_roots(P, RootOptions{root_target, max_bits});
    MeasureResult m = detail::measure_from_roots(rs);
    if (m.error() <= target) return m;
    double shrink = m.error() / target;
    if (root_target < 1e-300) throw resource_error("mahler_measure: target precision unreachable");
    root_target /= std::max(4.0, 2 * shrink);
  }
}

struct GraeffeOptions {
  std::size_t max_coefficient_bits = std::size_t(1) << 27;
};

/// One root-squaring step: Q2(x^2) = (-1)^d Q(x) Q(-x), i.e. power_map(Q, 2).
inline IntPoly graeffe_step(const IntPoly& Q) {
  const int d = Q.degree();
  std::vector<Int> even, odd;
  for (int k = 0; k <= d; ++k) (k % 2 ? odd : even).push_back(Q[k]);
  IntPoly E(even), O(odd);
  IntPoly r = E * E - IntPoly::x() * (O * O);
  return (d % 2) ? IntPoly(-r) : r;
}

namespace detail {

/// Bounds on log M(Q) from the coefficients of Q alone (Q(0) != 0): Landau,
/// the binomial lower bound, and Pellet-annulus grouping of root moduli.
struct LogBounds {
  double lower, upper;
};

inline LogBounds coefficient_log_bounds(const IntPoly& Q) {
  const int d = Q.degree();
  const double ninf = -std::numeric_limits<double>::infinity();
  std::vector<double> lc(d + 1, ninf);
  double scale = 1;
  for (int k = 0; k <= d; ++k)
    if (Q[k] != 0) {
      lc[k] = log_abs(Q[k]);
      scale = std::max(scale, std::fabs(lc[k]));
    }
  double lower = ninf, upper;
  // Landau: M(Q) <= ||Q||_2 ; Mahler: |c_j| <= C(d, j) M(Q)
  {
    double mx = *std::max_element(lc.begin(), lc.end());
    double s = 0;
    for (int k = 0; k <= d; ++k)
      if (lc[k] != ninf) s += std::exp(2 * (lc[k] - mx));
    upper = mx + 0.5 * std::log(s);
    for (int k = 0; k <= d; ++k)
      if (lc[k] != ninf) lower = std::max(lower, lc[k] - log_abs(binomial(d, k)));
  }
  const double margin = 1e-12 * scale + 1e-9;

  // f_t(rho) = log|c_t| + t rho - log sum_{j != t} |c_j| e^{j rho}; concave.
  auto f = [&](int t, double rho) {
    double mx = ninf;
    for (int j = 0; j <= d; ++j)
      if (j != t && lc[j] != ninf) mx = std::max(mx, lc[j] + j * rho);
    double s = 0;
    for (int j = 0; j <= d; ++j)
      if (j != t && lc[j] != ninf) s += std::exp(lc[j] + j * rho - mx);
    return lc[t] + t * rho - (mx + std::log(s));
  };
  // root moduli lie within e^{+-R}
  double R = 0;
  for (int k = 0; k < d; ++k)
    if (lc[k] != ninf) R = std::max(R, std::fabs((lc[k] - lc[d]) / (d - k)));
  for (int k = 1; k <= d; ++k)
    if (lc[k] != ninf) R = std::max(R, std::fabs((lc[k] - lc[0]) / k));
  R += 2;

  struct Annulus {
    int t;
    double a, b;  // Pellet holds at e^a and at e^b
  };
  std::vector<Annulus> valid;
  for (int t = 0; t <= d; ++t) {
    if (lc[t] == ninf) continue;
    double lo = -R, hi = R;
    if (t == d) {
      // increasing on the right: find the leftmost certified radius
      double x = R;
      while (f(t, x) <= margin) x += R;
      double l = -R;
      for (int it = 0; it < 200; ++it) {
        double mid = 0.5 * (l + x);
        (f(t, mid) > margin ? x : l) = mid;
      }
      valid.push_back({t, x, std::numeric_limits<double>::infinity()});
      continue;
    }
    if (t == 0) {
      double x = -R;
      while (f(t, x) <= margin) x -= R;
      double r = R;
      for (int it = 0; it < 200; ++it) {
        double mid = 0.5 * (x + r);
        (f(t, mid) > margin ? x : r) = mid;
      }
      valid.push_back({t, -std::numeric_limits<double>::infinity(), x});
      continue;
    }
    // golden-section search for the maximum of the concave f_t
    const double g = (std::sqrt(5.0) - 1) / 2;
    double x1 = hi - g * (hi - lo), x2 = lo + g * (hi - lo);
    double f1 = f(t, x1), f2 = f(t, x2);
    for (int it = 0; it < 200; ++it) {
      if (f1 < f2) {
        lo = x1, x1 = x2, f1 = f2, x2 = lo + g * (hi - lo), f2 = f(t, x2);
      } else {
        hi = x2, x2 = x1, f2 = f1, x1 = hi - g * (hi - lo), f1 = f(t, x1);
      }
    }
    double peak = 0.5 * (lo + hi);
    if (f(t, peak) <= margin) continue;
    double l = -R, in = peak;
    for (int it = 0; it < 200; ++it) {
      double mid = 0.5 * (l + in);
      (f(t, mid) > margin ? in : l) = mid;
    }
    double a = in;
    double r = R;
    in = peak;
    for (int it = 0; it < 200; ++it) {
      double mid = 0.5 * (in + r);
      (f(t, mid) > margin ? in : r) = mid;
    }
    valid.push_back({t, a, in});
  }
  // roots t_prev+1..t (ascending modulus) have log-modulus in [b_prev, a_t]
  double plo = lc[d], phi = lc[d];
  for (std::size_t i = 1; i < valid.size(); ++i) {
    const int n = valid[i].t - valid[i - 1].t;
    plo += n * std::max(0.0, valid[i - 1].b);
    phi += n * std::max(0.0, valid[i].a);
  }
  return {std::max(lower, plo), std::min(upper, phi)};
}

}  // namespace detail

/// M(P) from k exact root-squaring steps and coefficient bounds on M(Q_k).
inline MeasureResult graeffe_measure(const IntPoly& P, unsigned iterations, const GraeffeOptions& opt = {}) {
  if (P.is_zero() || P.degree() < 1) throw std::domain_error("graeffe_measure: degree must be at least 1");
  if (!P.is_monic()) throw std::domain_error("graeffe_measure: polynomial must be monic");
  IntPoly Q = P;
  while (Q[0] == 0) Q = *exact_quotient(Q, IntPoly::x());
  MeasureResult out;
  out.method = MeasureMethod::graeffe;
  if (Q.degree() == 0) return out;
  if (Q.degree() == 1) {
    // M(x + c) = max(1, |c|) exactly
    out.lower = max(Real(1.0, 128), Real(iabs(Q[0]), 128));
    out.upper = out.lower;
    return out;
  }
  for (unsigned k = 0; k < iterations; ++k) {
    Q = graeffe_step(Q);
    for (const auto& c : Q.coeffs())
      if (bit_length(c) > opt.max_coefficient_bits)
        throw resource_error("graeffe_measure: coefficient size budget of " + std::to_string(opt.max_coefficient_bits) +
                             " bits exceeded at iteration " + std::to_string(k + 1));
  }
  auto b = detail::coefficient_log_bounds(Q);
  const double scale = std::ldexp(1.0, -static_cast<int>(iterations));
  const double eps = 1e-15 * (std::fabs(b.lower) + std::fabs(b.upper)) + 1e-13;
  double lo = std::max(0.0, (b.lower - eps) * scale), hi = std::max(0.0, (b.upper + eps) * scale);
  out.lower = exp(Real(lo, 128)) * (1 - 1e-15);
  out.upper = exp(Real(hi, 128)) * (1 + 1e-15);
  if (out.lower < Real(1.0, 128)) out.lower = Real(1.0, 128);
  return out;
}

/// Witness for P = x^a * prod Phi_{n_i}.
struct CyclotomicWitness {
  bool is_product = false;
  unsigned x_power = 0;
  std::vector<std::uint64_t> indices;  ///< with repetition, ascending
};

/// Exact test: strip x^a, then divide out Phi_n while phi(n) <= remaining degree.
inline CyclotomicWitness is_cyclotomic_product(const IntPoly& P) {
  if (P.is_zero() || !P.is_monic()) throw std::domain_error("is_cyclotomic_product: polynomial must be monic");
  CyclotomicWitness w;
  IntPoly Q = P;
  while (Q.degree() > 0 && Q[0] == 0) {
    Q = *exact_quotient(Q, IntPoly::x());
    ++w.x_power;
  }
  if (Q.degree() == 0) {
    w.is_product = true;
    return w;
  }
  if (iabs(Q[0]) != 1) return w;
  // phi(n) >= sqrt(n/2), so phi(n) <= d forces n <= 2 d^2
  const std::uint64_t bound = 2ull * Q.degree() * Q.degree();
  for (std::uint64_t n = 1; n <= bound && Q.degree() > 0; ++n) {
    if (totient(n) > static_cast<u64>(Q.degree())) continue;
    IntPoly phi = cyclotomic(n);
    while (Q.degree() >= phi.degree()) {
      auto q = exact_quotient(Q, phi);
      if (!q) break;
      Q = std::move(*q);
      w.indices.push_back(n);
      if (Q.degree() == 0) break;
    }
  }
  w.is_product = Q.degree() == 0;
  if (!w.is_product) w.indices.clear();
  return w;
}

/// a_j = a_{d-j}.
inline bool is_reciprocal(const IntPoly& P) {
  if (P.is_zero()) return false;
  return reversal(P) == P;
}

/// c0 * (log log d / log d)^3.
inline double dobrowolski_bound(std::uint64_t d, double c0 = 1.0) {
  if (d < 3) throw std::domain_error("dobrowolski_bound: degree must be at least 3");
  double l = std::log(static_cast<double>(d));
  double r = std::log(l) / l;
  return c0 * r * r * r;
}

/// d^d * M^(2nd), using the upper end of a measure enclosure.
inline Real hadamard_disc_bound(int d, const MeasureResult& M, std::uint64_t n) {
  if (d < 1 || n == 0) throw std::domain_error("hadamard_disc_bound: need d >= 1 and n >= 1");
  const mpfr_prec_t prec = 128;
  Real logb = Real(static_cast<double>(d), prec) * log(Real(static_cast<double>(d), prec)) +
              Real(2.0 * d, prec) * Real(static_cast<double>(n), prec) * log(M.upper.with_prec(prec));
  return exp(logb) * (1 + 1e-30);
}

inline Real hadamard_disc_bound(const IntPoly& P, std::uint64_t n) {
  if (!P.is_monic() || !is_squarefree(P)) throw std::domain_error("hadamard_disc_bound: P must be monic and squarefree");
  return hadamard_disc_bound(P.degree(), mahler_measure(P), n);
}

}  // namespace lehmer
