#pragma once

// Certified complex root isolation: Aberth iteration on a precision ladder
// (long double, then MPFR at doubling precision), certified by Weierstrass
// inclusion disks.

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <optional>
#include <vector>

#include "lehmer/poly.hpp"
#include "lehmer/real.hpp"

namespace lehmer {

/// One root: center, certified inclusion radius and multiplicity.
struct Root {
  Real re, im;
  Real radius;
  unsigned multiplicity = 1;
  bool real = false;     ///< certified to lie on the real axis
  bool cluster = false;  ///< disk overlaps another disk at the final precision

  double modulus() const { return hypot(re, im).to_double(); }
  double argument() const { return atan2(im, re).to_double(); }
  Real modulus_hp() const { return hypot(re, im); }
};

/// Roots of P in descending modulus, ties broken by ascending argument.
struct RootSet {
  int degree = 0;
  Int leading = 1;
  unsigned precision_bits = 0;
  std::vector<Root> roots;  ///< distinct roots; multiplicities sum to degree

  bool clustered() const {
    return std::any_of(roots.begin(), roots.end(), [](const Root& r) { return r.cluster; });
  }
  double max_radius() const {
    double m = 0;
    for (const auto& r : roots) m = std::max(m, r.radius.to_double());
    return m;
  }
  /// Each root repeated by its multiplicity, keeping the order.
  std::vector<const Root*> expanded() const {
    std::vector<const Root*> out;
    for (const auto& r : roots)
      for (unsigned k = 0; k < r.multiplicity; ++k) out.push_back(&r);
    return out;
  }
};

struct RootOptions {
  double target_radius = 1e-15;
  unsigned max_bits = 4096;
};

namespace detail {

/// Bini's starting points: circles whose radii follow the upper convex hull
/// of (k, log|a_k|).
inline std::vector<std::pair<double, double>> bini_start(const IntPoly& P) {
  const int m = P.degree();
  std::vector<std::pair<int, double>> pts;
  for (int k = 0; k <= m; ++k)
    if (P[k] != 0) pts.emplace_back(k, log_abs(P[k]));
  std::vector<std::pair<int, double>> hull;
  for (auto& p : pts) {
    while (hull.size() >= 2) {
      auto& a = hull[hull.size() - 2];
      auto& b = hull.back();
      double cross = (b.first - a.first) * (p.second - a.second) - (b.second - a.second) * (p.first - a.first);
      if (cross >= 0) hull.pop_back(); else break;
    }
    hull.push_back(p);
  }
  std::vector<std::pair<double, double>> z;  // (log radius, angle)
  const double sigma = 0.7;
  for (std::size_t h = 0; h + 1 < hull.size(); ++h) {
    int i = hull[h].first, j = hull[h + 1].first;
    double logr = (hull[h].second - hull[h + 1].second) / (j - i);
    for (int t = 0; t < j - i; ++t) {
      double ang = 2 * std::numbers::pi * t / (j - i) + 2 * std::numbers::pi * i / m + sigma;
      z.emplace_back(logr, ang);
    }
  }
  return z;
}

template <class R>
struct PolyR {
  std::vector<R> a;    // coefficients
  std::vector<R> aa;   // |coefficients|
};

template <class R>
PolyR<R> to_r(const IntPoly& P, unsigned bits) {
  PolyR<R> q;
  for (int k = 0; k <= P.degree(); ++k) {
    q.a.push_back(RealOps<R>::from(P[k], bits));
    using std::abs;
    q.aa.push_back(abs(q.a.back()));
  }
  return q;
}

/// p(z), p'(z) by Horner.
template <class R>
void horner(const PolyR<R>& p, const Complex<R>& z, Complex<R>& v, Complex<R>& dv) {
  const int m = static_cast<int>(p.a.size()) - 1;
  const R zero = RealOps<R>::like(0, p.a[0]);
  v = Complex<R>(p.a[m], zero);
  dv = Complex<R>(zero, zero);
  for (int k = m - 1; k >= 0; --k) {
    dv = dv * z + v;
    v = v * z;
    v.re = v.re + p.a[k];
  }
}

template <class R>
R mag_sum(const PolyR<R>& p, const R& r) {
  R s = p.aa.back();
  for (int k = static_cast<int>(p.a.size()) - 2; k >= 0; --k) s = s * r + p.aa[k];
  return s;
}

template <class R>
bool is_zero(const Complex<R>& z) {
  const R zero = RealOps<R>::like(0, z.re);
  return z.re == zero && z.im == zero;
}

/// Gauss-Seidel Aberth sweeps. A root is frozen once its relative correction
/// is below tol, or below sqrt(tol) and no longer shrinking (rounding floor).
template <class R>
bool aberth(const PolyR<R>& p, std::vector<Complex<R>>& z, int max_iter, const R& tol) {
  const std::size_t m = z.size();
  const R zero = RealOps<R>::like(0, tol);
  const Complex<R> one(RealOps<R>::like(1, tol), zero);
  using std::sqrt;
  const R loose = sqrt(tol);
  std::vector<char> frozen(m, 0);
  std::vector<R> prev(m, RealOps<R>::like(1, tol));
  for (int it = 0; it < max_iter; ++it) {
    bool all = true;
    for (std::size_t i = 0; i < m; ++i) {
      if (frozen[i]) continue;
      Complex<R> v, dv;
      horner(p, z[i], v, dv);
      if (is_zero(v)) {
        frozen[i] = 1;
        continue;
      }
      all = false;
      if (is_zero(dv)) {
        z[i] = z[i] + Complex<R>(tol, tol);  // stationary point
        continue;
      }
      Complex<R> ratio = v / dv;
      Complex<R> s(zero, zero);
      for (std::size_t j = 0; j < m; ++j) {
        if (j == i) continue;
        Complex<R> diff = z[i] - z[j];
        if (is_zero(diff)) diff = Complex<R>(tol, tol);
        s = s + one / diff;
      }
      Complex<R> corr = ratio / (one - ratio * s);
      z[i] = z[i] - corr;
      R zm = cabs(z[i]);
      R cm = cabs(corr);
      R rel = zm > one.re ? R(cm / zm) : cm;
      if (rel < tol || (rel < loose && rel + rel > prev[i])) frozen[i] = 1;
      prev[i] = rel;
    }
    if (all) return true;
  }
  return std::all_of(frozen.begin(), frozen.end(), [](char f) { return f != 0; });
}

template <class R>
struct Certificate {
  std::vector<R> radius;
  bool finite = true;
  bool disjoint = true;
  R worst;
};

/// Inclusion radii max(m |W_i|, m |p/p'|) with rounding slack. All roots lie
/// in the union of the disks; a component of k disks holds k roots.
template <class R>
Certificate<R> certify(const PolyR<R>& p, const std::vector<Complex<R>>& z, double unit) {
  const std::size_t m = z.size();
  const R& ref = p.a[0];
  auto k = [&](double v) { return RealOps<R>::like(v, ref); };
  Certificate<R> c;
  const R zero = k(0), one = k(1), md = k(static_cast<double>(m));
  const R slack = k(unit * 8.0 * (m + 1));
  c.worst = zero;
  for (std::size_t i = 0; i < m; ++i) {
    Complex<R> v, dv;
    horner(p, z[i], v, dv);
    R zm = cabs(z[i]);
    // Horner error is bounded by slack * sum |a_k| |z|^k; the derivative sum
    // is at most m/|z| (or m) times that.
    R err = mag_sum(p, zm) * slack;
    R derr = err * md * (zm > one ? one : R(one / (zm > zero ? zm : one))) + err * md;
    R pv = cabs(v) + err;
    Complex<R> prod(p.a.back(), zero);
    for (std::size_t j = 0; j < m; ++j)
      if (j != i) prod = prod * (z[i] - z[j]);
    R den = cabs(prod) * (one - slack);
    R dpv = cabs(dv) - derr;
    if (!(den > zero) || !(dpv > zero)) {
      c.finite = false;
      c.radius.push_back(zero);
      continue;
    }
    R rw = md * pv / den;
    R rn = md * pv / dpv;
    R r = (rw > rn ? rw : rn) * (one + slack + slack);
    if (r > c.worst) c.worst = r;
    c.radius.push_back(std::move(r));
  }
  if (!c.finite) {
    c.disjoint = false;
    return c;
  }
  for (std::size_t i = 0; i < m && c.disjoint; ++i)
    for (std::size_t j = i + 1; j < m; ++j) {
      R dist = cabs(Complex<R>(z[i] - z[j])) * (one - slack);
      if (!(dist > c.radius[i] + c.radius[j])) {
        c.disjoint = false;
        break;
      }
    }
  return c;
}

inline bool fits_long_double(const IntPoly& P) {
  for (const auto& v : P.coeffs())
    if (bit_length(v) > 15000) return false;
  return true;
}

/// Roots of a squarefree polynomial with P(0) != 0.
inline std::vector<Root> isolate_squarefree(const IntPoly& P, const RootOptions& opt, unsigned& bits_used) {
  const int m = P.degree();
  std::vector<Root> out;
  auto start = bini_start(P);
  std::vector<Complex<Real>> approx;
  bool have_ld = false;

  auto finalize = [&](auto& z, auto& cert, unsigned bits, bool clustered) {
    using R = std::decay_t<decltype(z[0].re)>;
    const unsigned keep = std::max(bits, 64u);
    for (int i = 0; i < m; ++i) {
      Root r;
      r.re = RealOps<R>::to_real(z[i].re, keep);
      r.im = RealOps<R>::to_real(z[i].im, keep);
      r.radius = RealOps<R>::to_real(cert.radius[i], 64);
      r.cluster = clustered;
      out.push_back(std::move(r));
    }
    bits_used = bits;
  };

  if (fits_long_double(P)) {
    using R = long double;
    auto p = to_r<R>(P, 64);
    std::vector<Complex<R>> z;
    for (auto [lr, ang] : start) {
      R rad = std::exp(static_cast<R>(lr));
      z.emplace_back(rad * std::cos(static_cast<R>(ang)), rad * std::sin(static_cast<R>(ang)));
    }
    const R tol = 1e-17L;
    bool ok = aberth(p, z, 800, tol);
    if (!ok && m <= 400) {
      // companion-matrix eigenvalues as a restart
      Eigen::MatrixXd C = Eigen::MatrixXd::Zero(m, m);
      bool finite = true;
      for (int i = 0; i < m; ++i) {
        double v = -static_cast<double>(p.a[i] / p.a[m]);
        if (!std::isfinite(v)) finite = false;
        C(i, m - 1) = v;
        if (i > 0) C(i, i - 1) = 1.0;
      }
      if (finite) {
        Eigen::EigenSolver<Eigen::MatrixXd> es(C, false);
        if (es.info() == Eigen::Success) {
          for (int i = 0; i < m; ++i) z[i] = Complex<R>(es.eigenvalues()[i].real(), es.eigenvalues()[i].imag());
          ok = aberth(p, z, 800, tol);
        }
      }
    }
    bool finite = true;
    for (auto& w : z)
      if (!std::isfinite(w.re) || !std::isfinite(w.im)) finite = false;
    if (finite) {
      auto cert = certify(p, z, std::ldexp(1.0, -63));
      if (cert.finite && cert.disjoint && static_cast<double>(cert.worst) <= opt.target_radius) {
        finalize(z, cert, 64, false);
        return out;
      }
      if (ok) {
        for (auto& w : z) approx.emplace_back(RealOps<R>::to_real(w.re, 64), RealOps<R>::to_real(w.im, 64));
        have_ld = true;
      }
    }
  }
  if (!have_ld) {
    for (auto [lr, ang] : start) {
      Real lrr(lr, 128);
      Real rad = exp(lrr);
      Real a(ang, 128);
      approx.emplace_back(rad * cos(a), rad * sin(a));
    }
  }
  std::optional<Certificate<Real>> last;
  std::vector<Complex<Real>> z;
  for (unsigned bits = 128; bits <= opt.max_bits; bits *= 2) {
    auto p = to_r<Real>(P, bits);
    z.clear();
    for (auto& w : approx) z.emplace_back(w.re.with_prec(bits), w.im.with_prec(bits));
    Real tol(std::ldexp(1.0, -static_cast<int>(bits) + 12), bits);
    if (!aberth(p, z, have_ld ? 60 : 2000, tol) && have_ld) aberth(p, z, 2000, tol);
    auto cert = certify(p, z, std::ldexp(1.0, 1 - static_cast<int>(bits)));
    approx = z;
    have_ld = true;
    if (cert.finite && cert.disjoint && cert.worst.to_double() <= opt.target_radius) {
      finalize(z, cert, bits, false);
      return out;
    }
    last = cert;
    if (bits * 2 > opt.max_bits) {
      if (cert.finite && cert.worst.to_double() <= opt.target_radius) {
        finalize(z, cert, bits, true);
        return out;
      }
      break;
    }
  }
  throw resource_error("find_roots: precision cap of " + std::to_string(opt.max_bits) +
                       " bits reached before the inclusion radii met the target");
}

inline bool disks_overlap(const Root& a, const Root& b) {
  Real d = hypot(a.re - b.re, a.im - b.im);
  return !(d > a.radius + b.radius);
}

}  // namespace detail

/// Certified roots of a nonzero P of degree >= 1.
///
/// Works on the squarefree factors separately and reattaches multiplicities.
/// Throws resource_error when max_bits is reached before every radius is
/// below target_radius.
inline RootSet find_roots(const IntPoly& P, const RootOptions& opt = {}) {
  if (P.is_zero() || P.degree() < 1) throw std::domain_error("find_roots: degree must be at least 1");
  RootSet rs;
  rs.degree = P.degree();
  rs.leading = P.leading();
  unsigned bits_max = 64;
  for (auto& [f, mult] : squarefree_factorization(P)) {
    IntPoly g = f;
    if (g[0] == 0) {
      Root z;
      z.re = Real(0.0, 64);
      z.im = Real(0.0, 64);
      z.radius = Real(0.0, 64);
      z.real = true;
      z.multiplicity = mult;
      rs.roots.push_back(z);
      g = *exact_quotient(g, IntPoly::x());
    }
    if (g.degree() == 0) continue;
    unsigned bits = 0;
    for (auto& r : detail::isolate_squarefree(g, opt, bits)) {
      r.multiplicity = mult;
      rs.roots.push_back(std::move(r));
    }
    bits_max = std::max(bits_max, bits);
  }
  rs.precision_bits = bits_max;

  // overlaps across squarefree factors and the real-axis test
  const std::size_t n = rs.roots.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (detail::disks_overlap(rs.roots[i], rs.roots[j])) rs.roots[i].cluster = rs.roots[j].cluster = true;
  for (std::size_t i = 0; i < n; ++i) {
    Root& r = rs.roots[i];
    if (r.real || r.cluster) continue;
    if (abs(r.im) > r.radius) continue;
    Root conj = r;
    conj.im = -r.im;
    bool alone = true;
    for (std::size_t j = 0; j < n; ++j)
      if (j != i && detail::disks_overlap(conj, rs.roots[j])) alone = false;
    if (alone) {
      r.real = true;
      r.radius = r.radius + abs(r.im);
      r.im = Real(0.0, r.im.prec());
    }
  }

  // descending modulus; runs of roots whose modulus intervals overlap are
  // ordered by ascending argument
  std::stable_sort(rs.roots.begin(), rs.roots.end(),
                   [](const Root& a, const Root& b) { return a.modulus_hp() > b.modulus_hp(); });
  std::size_t i = 0;
  while (i < rs.roots.size()) {
    std::size_t j = i + 1;
    while (j < rs.roots.size()) {
      Real gap = rs.roots[j - 1].modulus_hp() - rs.roots[j].modulus_hp();
      if (gap > rs.roots[j - 1].radius + rs.roots[j].radius) break;
      ++j;
    }
    std::stable_sort(rs.roots.begin() + i, rs.roots.begin() + j,
                     [](const Root& a, const Root& b) { return atan2(a.im, a.re) < atan2(b.im, b.re); });
    i = j;
  }
  return rs;
}

inline RootSet find_roots(const IntPoly& P, double target_radius, unsigned max_bits = 4096) {
  return find_roots(P, RootOptions{target_radius, max_bits});
}

}  // namespace lehmer
