#pragma once

// Confluent Vandermonde determinants, per-n upper bounds for Delta(P_n), the
// finite-N growth of Delta(P_n) and Res(P_n, Q), and the equidistribution
// constant for finitely many angles.

#include <algorithm>
#include <cmath>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "lehmer/ball.hpp"
#include "lehmer/measure.hpp"
#include "lehmer/sequences.hpp"

namespace lehmer {

// ---------------------------------------------------------------------------
// confluent Vandermonde

struct GaussianRational {
  Rational re = 0, im = 0;

  friend GaussianRational operator+(const GaussianRational& a, const GaussianRational& b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend GaussianRational operator-(const GaussianRational& a, const GaussianRational& b) {
    return {a.re - b.re, a.im - b.im};
  }
  friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend bool operator==(const GaussianRational& a, const GaussianRational& b) { return a.re == b.re && a.im == b.im; }
  bool is_real() const { return im == 0; }
  std::string to_string() const;
};

inline std::string GaussianRational::to_string() const {
  if (im == 0) return re.get_str();
  std::string out = re == 0 ? "" : re.get_str();
  if (im > 0 && re != 0) out += "+";
  if (im == -1) return out + "-i";
  if (im == 1) return out + "i";
  return out + im.get_str() + "i";
}

inline GaussianRational gpow(GaussianRational base, unsigned long e) {
  GaussianRational acc{1, 0};
  while (e) {
    if (e & 1) acc = acc * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return acc;
}

struct ConfluentPoint {
  GaussianRational x;
  unsigned multiplicity = 1;
};

struct ConfluentSpec {
  std::vector<ConfluentPoint> points;

  unsigned size() const {
    unsigned n = 0;
    for (const auto& p : points) n += p.multiplicity;
    return n;
  }
  bool is_real() const {
    return std::all_of(points.begin(), points.end(), [](const ConfluentPoint& p) { return p.x.is_real(); });
  }
};

struct ConfluentOptions {
  unsigned size_cap = 64;
  double relative_width = 1e-20;  ///< complex points: required half-width relative to magnitude
  unsigned max_bits = 4096;
};

/// Decimal center and radius of a complex enclosure.
struct ComplexEnclosure {
  std::string re, im;
  double radius = 0;
};

struct ConfluentReport {
  unsigned n = 0;
  bool exact = true;  ///< rational points: exact arithmetic; otherwise enclosures
  std::vector<std::vector<GaussianRational>> matrix;
  Rational determinant = 0, closed_form = 0;   ///< exact path
  ComplexEnclosure determinant_ball, closed_form_ball;  ///< enclosure path
  unsigned precision_bits = 0;
  bool equal = false;
};

/// Concatenated blocks; column k of a block at x has rows C(j, k) x^(j-k).
inline std::vector<std::vector<GaussianRational>> confluent_matrix(const ConfluentSpec& spec) {
  const unsigned n = spec.size();
  std::vector<std::vector<GaussianRational>> A(n, std::vector<GaussianRational>(n));
  unsigned col = 0;
  for (const auto& p : spec.points)
    for (unsigned k = 0; k < p.multiplicity; ++k, ++col)
      for (unsigned j = k; j < n; ++j) {
        GaussianRational v = gpow(p.x, j - k);
        Rational c(binomial(j, k));
        A[j][col] = {v.re * c, v.im * c};
      }
  return A;
}

/// Determinant over Q by elimination; pivot is the first row of maximal
/// absolute value in the column.
inline Rational determinant(std::vector<std::vector<Rational>> A) {
  const std::size_t n = A.size();
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    for (std::size_t r = c + 1; r < n; ++r)
      if (abs(A[r][c]) > abs(A[piv][c])) piv = r;
    if (A[piv][c] == 0) return 0;
    if (piv != c) {
      std::swap(A[piv], A[c]);
      det = -det;
    }
    det *= A[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      if (A[r][c] == 0) continue;
      Rational f = A[r][c] / A[c][c];
      for (std::size_t k = c; k < n; ++k) A[r][k] -= f * A[c][k];
    }
  }
  return det;
}

namespace detail {

inline void require_distinct(const ConfluentSpec& spec, unsigned cap) {
  if (spec.points.empty()) throw std::domain_error("confluent_vandermonde: need at least one point");
  for (const auto& p : spec.points)
    if (p.multiplicity == 0) throw std::domain_error("confluent_vandermonde: multiplicities must be positive");
  for (std::size_t i = 0; i < spec.points.size(); ++i)
    for (std::size_t j = i + 1; j < spec.points.size(); ++j)
      if (spec.points[i].x == spec.points[j].x) throw std::domain_error("confluent_vandermonde: points must be distinct");
  if (spec.size() > cap)
    throw resource_error("confluent_vandermonde: size " + std::to_string(spec.size()) + " exceeds the cap " +
                         std::to_string(cap));
}

inline ComplexEnclosure enclosure(const Ball& b) {
  return ComplexEnclosure{b.c.re.to_string(30), b.c.im.to_string(30), b.r.to_double()};
}

/// Determinant of a ball matrix by elimination with largest-center pivots.
inline std::optional<Ball> ball_determinant(std::vector<std::vector<Ball>> A, mpfr_prec_t prec) {
  const std::size_t n = A.size();
  const Real eps = eps_at(prec);
  Ball det{Complex<Real>(Real(1.0, prec), Real(0.0, prec)), Real(0.0, prec)};
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    for (std::size_t r = c + 1; r < n; ++r)
      if (cabs(A[r][c].c) > cabs(A[piv][c].c)) piv = r;
    if (ball_contains_zero(A[piv][c])) return std::nullopt;
    if (piv != c) {
      std::swap(A[piv], A[c]);
      det.c = -det.c;
    }
    det = ball_mul(det, A[c][c], eps);
    for (std::size_t r = c + 1; r < n; ++r) {
      Ball f = ball_div(A[r][c], A[c][c], eps);
      for (std::size_t k = c; k < n; ++k) A[r][k] = ball_sub(A[r][k], ball_mul(f, A[c][k], eps), eps);
    }
  }
  return det;
}

}  // namespace detail

/// Determinant of the confluent matrix against prod_{j<k} (x_k - x_j)^(m_j m_k).
inline ConfluentReport confluent_vandermonde(const ConfluentSpec& spec, const ConfluentOptions& opt = {}) {
  detail::require_distinct(spec, opt.size_cap);
  ConfluentReport rep;
  rep.n = spec.size();
  rep.matrix = confluent_matrix(spec);
  const auto& pts = spec.points;
  if (spec.is_real()) {
    std::vector<std::vector<Rational>> A(rep.n, std::vector<Rational>(rep.n));
    for (unsigned i = 0; i < rep.n; ++i)
      for (unsigned j = 0; j < rep.n; ++j) A[i][j] = rep.matrix[i][j].re;
    rep.determinant = determinant(std::move(A));
    Rational closed = 1;
    for (std::size_t j = 0; j < pts.size(); ++j)
      for (std::size_t k = j + 1; k < pts.size(); ++k) {
        Rational diff = pts[k].x.re - pts[j].x.re;
        const unsigned long e = static_cast<unsigned long>(pts[j].multiplicity) * pts[k].multiplicity;
        Rational pw;
        mpz_pow_ui(pw.get_num_mpz_t(), diff.get_num_mpz_t(), e);
        mpz_pow_ui(pw.get_den_mpz_t(), diff.get_den_mpz_t(), e);
        pw.canonicalize();
        closed *= pw;
      }
    rep.closed_form = closed;
    rep.equal = rep.determinant == rep.closed_form;
    return rep;
  }

  rep.exact = false;
  for (unsigned bits = 128; bits <= opt.max_bits; bits *= 2) {
    const Real eps = detail::eps_at(bits);
    std::vector<std::vector<detail::Ball>> A(rep.n);
    for (unsigned i = 0; i < rep.n; ++i)
      for (unsigned j = 0; j < rep.n; ++j) A[i].push_back(detail::ball_from_rational(rep.matrix[i][j].re, rep.matrix[i][j].im, bits));
    auto det = detail::ball_determinant(std::move(A), bits);
    if (!det) continue;
    detail::Ball closed{Complex<Real>(Real(1.0, bits), Real(0.0, bits)), Real(0.0, bits)};
    for (std::size_t j = 0; j < pts.size(); ++j)
      for (std::size_t k = j + 1; k < pts.size(); ++k) {
        GaussianRational diff = pts[k].x - pts[j].x;
        detail::Ball b = detail::ball_from_rational(diff.re, diff.im, bits);
        closed = detail::ball_mul(closed, detail::ball_pow(b, std::uint64_t(pts[j].multiplicity) * pts[k].multiplicity, eps, bits), eps);
      }
    rep.precision_bits = bits;
    rep.determinant_ball = detail::enclosure(*det);
    rep.closed_form_ball = detail::enclosure(closed);
    const bool narrow = det->r < cabs(det->c) * opt.relative_width && closed.r < cabs(closed.c) * opt.relative_width;
    if (!detail::balls_overlap(*det, closed)) {
      rep.equal = false;
      return rep;
    }
    if (narrow) {
      rep.equal = true;
      return rep;
    }
  }
  throw resource_error("confluent_vandermonde: enclosures did not narrow below the requested width");
}

namespace detail {

inline Rational parse_rational(const std::string& s, const std::string& whole) {
  if (s.empty() || s.find_first_not_of("+-0123456789/") != std::string::npos || s.find('/') != s.rfind('/'))
    throw parse_error("bad rational '" + s + "' in '" + whole + "'");
  Rational q;
  if (q.set_str(s[0] == '+' ? s.substr(1) : s, 10) != 0 || q.get_den() == 0)
    throw parse_error("bad rational '" + s + "' in '" + whole + "'");
  q.canonicalize();
  return q;
}

}  // namespace detail

/// "a", "a+bi", "bi", "i", "-i" with a, b integers or fractions p/q.
inline GaussianRational parse_gaussian_rational(const std::string& text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  if (s.empty()) throw parse_error("empty point");
  if (s.back() != 'i') return {detail::parse_rational(s, text), 0};
  s.pop_back();
  std::size_t split = std::string::npos;
  for (std::size_t k = s.size(); k-- > 1;)
    if (s[k] == '+' || s[k] == '-') {
      split = k;
      break;
    }
  std::string re = split == std::string::npos ? "" : s.substr(0, split);
  std::string im = split == std::string::npos ? s : s.substr(split);
  if (im.empty() || im == "+") im = "1";
  if (im == "-") im = "-1";
  return {re.empty() ? Rational(0) : detail::parse_rational(re, text), detail::parse_rational(im, text)};
}

/// Points separated by ';', each "x" or "x:multiplicity", e.g. "0:2;1;1/2+i:3".
inline ConfluentSpec parse_confluent_spec(const std::string& text) {
  ConfluentSpec spec;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ';')) {
    ConfluentPoint pt;
    const auto colon = item.find(':');
    pt.x = parse_gaussian_rational(item.substr(0, colon));
    if (colon != std::string::npos) {
      const std::string m = item.substr(colon + 1);
      if (m.empty() || m.find_first_not_of("0123456789 ") != std::string::npos || std::stoul(m) == 0)
        throw parse_error("bad multiplicity '" + m + "' in '" + text + "'");
      pt.multiplicity = std::stoul(m);
    }
    spec.points.push_back(pt);
  }
  if (spec.points.empty()) throw parse_error("no points in '" + text + "'");
  return spec;
}

// ---------------------------------------------------------------------------
// symbolic check with one indeterminate per point

namespace detail {

/// Multivariate integer polynomial: exponent vector -> coefficient.
using MPoly = std::map<std::vector<unsigned>, Int>;

inline MPoly mpoly_mul(const MPoly& a, const MPoly& b) {
  MPoly r;
  for (const auto& [ea, ca] : a)
    for (const auto& [eb, cb] : b) {
      std::vector<unsigned> e(ea.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      Int& slot = r[e];
      slot += ca * cb;
      if (slot == 0) r.erase(e);
    }
  return r;
}

inline void mpoly_add(MPoly& a, const MPoly& b, int sign) {
  for (const auto& [e, c] : b) {
    Int& slot = a[e];
    if (sign > 0) slot += c; else slot -= c;
    if (slot == 0) a.erase(e);
  }
}

}  // namespace detail

struct SymbolicConfluent {
  unsigned n = 0;
  std::size_t terms = 0;  ///< monomials in the expanded determinant
  bool equal = false;
};

/// Expand the confluent determinant with indeterminates x_1..x_r and compare
/// it with the product formula as polynomials. Intended for n <= 10.
inline SymbolicConfluent confluent_symbolic_check(const std::vector<unsigned>& multiplicities) {
  const unsigned r = multiplicities.size();
  unsigned n = 0;
  for (unsigned m : multiplicities) {
    if (m == 0) throw std::domain_error("confluent_symbolic_check: multiplicities must be positive");
    n += m;
  }
  if (n == 0 || n > 10) throw resource_error("confluent_symbolic_check: size must be between 1 and 10");
  // entry (j, col) = C(j, k) x_v^(j-k)
  std::vector<std::vector<detail::MPoly>> A(n, std::vector<detail::MPoly>(n));
  unsigned col = 0;
  for (unsigned v = 0; v < r; ++v)
    for (unsigned k = 0; k < multiplicities[v]; ++k, ++col)
      for (unsigned j = k; j < n; ++j) {
        std::vector<unsigned> e(r, 0);
        e[v] = j - k;
        A[j][col][e] = binomial(j, k);
      }
  // Laplace expansion along columns, memoized on the set of unused rows
  std::map<unsigned, detail::MPoly> memo;
  auto det = [&](auto&& self, unsigned mask, unsigned c) -> detail::MPoly {
    if (c == n) return detail::MPoly{{std::vector<unsigned>(r, 0), Int(1)}};
    if (auto it = memo.find(mask); it != memo.end()) return it->second;
    detail::MPoly acc;
    int pos = 0;
    for (unsigned row = 0; row < n; ++row) {
      if (!(mask >> row & 1)) continue;
      if (!A[row][c].empty()) detail::mpoly_add(acc, detail::mpoly_mul(A[row][c], self(self, mask & ~(1u << row), c + 1)), pos % 2 ? -1 : 1);
      ++pos;
    }
    memo[mask] = acc;
    return acc;
  };
  detail::MPoly lhs = det(det, (1u << n) - 1, 0);
  detail::MPoly rhs{{std::vector<unsigned>(r, 0), Int(1)}};
  for (unsigned j = 0; j < r; ++j)
    for (unsigned k = j + 1; k < r; ++k) {
      std::vector<unsigned> ek(r, 0), ej(r, 0);
      ek[k] = 1;
      ej[j] = 1;
      detail::MPoly diff{{ek, Int(1)}, {ej, Int(-1)}};
      for (unsigned t = 0; t < multiplicities[j] * multiplicities[k]; ++t) rhs = detail::mpoly_mul(rhs, diff);
    }
  SymbolicConfluent out;
  out.n = n;
  out.terms = lhs.size();
  out.equal = lhs == rhs;
  return out;
}

// ---------------------------------------------------------------------------
// growth of Delta(P_n)

namespace detail {

/// Moduli of the roots as descending lower and upper order statistics.
struct ModulusBounds {
  std::vector<Real> lower, upper;
};

inline ModulusBounds modulus_bounds(const IntPoly& P, mpfr_prec_t prec) {
  RootSet rs = find_roots(P, 1e-40);
  ModulusBounds b;
  for (const auto* r : rs.expanded()) {
    Real m = hypot(r->re.with_prec(prec), r->im.with_prec(prec));
    Real rad = r->radius.with_prec(prec) * (1 + 1e-15);
    Real lo = m - rad;
    b.lower.push_back(lo.sign() < 0 ? Real(0.0, prec) : lo);
    b.upper.push_back(m + rad);
  }
  auto desc = [](const Real& x, const Real& y) { return x > y; };
  std::sort(b.lower.begin(), b.lower.end(), desc);
  std::sort(b.upper.begin(), b.upper.end(), desc);
  return b;
}

inline Real prod_pow(const std::vector<Real>& mods, mpfr_prec_t prec) {
  const std::size_t d = mods.size();
  Real t(1.0, prec);
  for (std::size_t j = 0; j < d; ++j) {
    Real p(prec);
    mpfr_pow_ui(p.get(), mods[j].get(), 2 * (d - 1 - j), MPFR_RNDN);
    t *= p;
  }
  return t;
}

inline Real pow_ui(const Real& base, unsigned long e) {
  Real r(base.prec());
  mpfr_pow_ui(r.get(), base.get(), e, MPFR_RNDN);
  return r;
}

inline Real abs_real(const Int& v) {
  return Real(iabs(v), static_cast<mpfr_prec_t>(std::max<std::size_t>(bit_length(v), 64)));
}

inline void require_monic_squarefree(const IntPoly& P, const char* what) {
  if (!P.is_monic() || P.degree() < 1) throw std::domain_error(std::string(what) + ": P must be monic of degree >= 1");
  if (!is_squarefree(P)) throw std::domain_error(std::string(what) + ": P has multiple roots");
}

}  // namespace detail

struct ProductBoundRecord {
  u64 n = 0;
  double log_abs_delta = 0;  ///< -inf when Delta(P_n) = 0
  double log_bound = 0;      ///< log of 2^{d(d-1)} T_upper^n
  bool holds = false;
};

struct LimsupDeltaEstimate {
  u64 N = 0;
  double E = 0;                    ///< max_{n <= N} |Delta(P_n)|^{1/n}
  double T = 0, T_lower = 0, T_upper = 0;  ///< prod |alpha_j|^{2(d-j)}, roots by descending modulus
  double ratio = 0;                ///< E / T
  std::vector<ProductBoundRecord> records;
  bool bound_holds = false;        ///< every n <= N satisfies the product bound
  std::optional<double> chain_lower;  ///< M^d |a0|^{d-m-1}, m roots outside the unit circle (a0 != 0)
  bool chain_holds = false;        ///< T >= chain value within enclosure error
};

/// Finite-N growth of Delta(P_n) against T, with the per-n bound
/// |Delta(P_n)| <= 2^{d(d-1)} T^n.
inline LimsupDeltaEstimate limsup_delta_estimate(const IntPoly& P, u64 N) {
  detail::require_monic_squarefree(P, "limsup_delta_estimate");
  if (N == 0) throw std::domain_error("limsup_delta_estimate: N must be positive");
  const int d = P.degree();
  const mpfr_prec_t prec = 256;
  LimsupDeltaEstimate out;
  out.N = N;
  auto mb = detail::modulus_bounds(P, prec);
  Real t_lo = detail::prod_pow(mb.lower, prec), t_hi = detail::prod_pow(mb.upper, prec) * (1 + 1e-60);
  out.T_lower = t_lo.to_double();
  out.T_upper = t_hi.to_double();
  out.T = ((t_lo + t_hi) / 2.0).to_double();
  const Real scale = Real(std::ldexp(1.0, d * (d - 1)), prec);

  auto seq = delta_seq(P, N);
  out.bound_holds = true;
  for (u64 n = 1; n <= N; ++n) {
    const Int& v = seq.disc(n);
    ProductBoundRecord rec;
    rec.n = n;
    Real bound = scale * detail::pow_ui(t_hi, n) * (1 + 1e-60);
    rec.log_bound = log(bound).to_double();
    if (v == 0) {
      rec.log_abs_delta = -HUGE_VAL;
      rec.holds = true;
    } else {
      rec.log_abs_delta = log_abs(v);
      rec.holds = detail::abs_real(v) <= bound;
      out.E = std::max(out.E, std::exp(rec.log_abs_delta / static_cast<double>(n)));
    }
    out.bound_holds = out.bound_holds && rec.holds;
    out.records.push_back(rec);
  }
  out.ratio = out.T > 0 ? out.E / out.T : HUGE_VAL;

  if (P[0] != 0) {
    auto M = mahler_measure(P);
    // roots not certified outside count as inside; with |a0| >= 1 this can
    // only raise the chain value
    int outside = 0;
    for (const auto& lo : mb.lower)
      if (lo > 1.0) ++outside;
    Real a0 = detail::abs_real(P[0]).with_prec(prec);
    const long e = d - outside - 1;
    auto chain = [&](const Real& m) {
      Real v = detail::pow_ui(m.with_prec(prec), d);
      return e >= 0 ? Real(v * detail::pow_ui(a0, e)) : Real(v / detail::pow_ui(a0, -e));
    };
    Real chain_lo = chain(M.lower) * (1 - 1e-30), chain_hi = chain(M.upper);
    out.chain_lower = ((chain_lo + chain_hi) / 2.0).to_double();
    out.chain_holds = t_hi >= chain_lo;
  }
  return out;
}

struct HadamardRecord {
  u64 n = 0;
  double log_abs_delta = 0;
  double log_bound = 0;  ///< log(d^d M^{2nd})
  bool holds = false;
};

struct SandwichReport {
  u64 N = 0;
  MeasureResult M;
  std::vector<HadamardRecord> records;
  bool hadamard_holds = false;
  double max_growth = 0;       ///< max_{n <= N} |Delta(P_n)|^{1/n}
  double threshold = 0;        ///< M^{d-1}
  bool exceeded = false;       ///< max_growth > threshold (reported, asymptotic side)
  std::optional<u64> first_exceeding;
};

/// Per-n Hadamard bound |Delta(P_n)| <= d^d M^{2nd} and the exceedance of
/// M^{d-1} by the running maximum of |Delta(P_n)|^{1/n}.
inline SandwichReport sandwich_check(const IntPoly& P, u64 N) {
  detail::require_monic_squarefree(P, "sandwich_check");
  if (is_cyclotomic_product(P).is_product) throw std::domain_error("sandwich_check: P must be noncyclotomic");
  if (N == 0) throw std::domain_error("sandwich_check: N must be positive");
  const int d = P.degree();
  SandwichReport out;
  out.N = N;
  out.M = mahler_measure(P);
  out.threshold = std::pow(out.M.value(), d - 1);
  const double thr_hi = std::pow(out.M.upper.to_double(), d - 1) * (1 + 1e-12);
  auto seq = delta_seq(P, N);
  out.hadamard_holds = true;
  double running = 0;
  for (u64 n = 1; n <= N; ++n) {
    const Int& v = seq.disc(n);
    HadamardRecord rec;
    rec.n = n;
    Real bound = hadamard_disc_bound(d, out.M, n);
    rec.log_bound = log(bound).to_double();
    rec.log_abs_delta = v == 0 ? -HUGE_VAL : log_abs(v);
    rec.holds = v == 0 || detail::abs_real(v) <= bound;
    out.hadamard_holds = out.hadamard_holds && rec.holds;
    out.records.push_back(rec);
    if (v != 0) running = std::max(running, std::exp(rec.log_abs_delta / static_cast<double>(n)));
    if (!out.first_exceeding && running > thr_hi) out.first_exceeding = n;
  }
  out.max_growth = running;
  out.exceeded = out.first_exceeding.has_value();
  return out;
}

// ---------------------------------------------------------------------------
// growth of Res(P_n, Q)

struct LimsupResultantEstimate {
  u64 N = 0;
  double E = 0;       ///< max_{n <= N} |Res(P_n, Q)|^{1/n} over nonzero values
  double target = 0;  ///< M(P)^{deg Q}
  double ratio = 0;
  std::vector<Int> values;  ///< values[n-1] = Res(P_n, Q)
};

inline LimsupResultantEstimate limsup_resultant_estimate(const IntPoly& P, const IntPoly& Q, u64 N) {
  if (!P.is_monic() || P.degree() < 1) throw std::domain_error("limsup_resultant_estimate: P must be monic of degree >= 1");
  if (!Q.is_monic() || Q.degree() < 1) throw std::domain_error("limsup_resultant_estimate: Q must be monic of degree >= 1");
  if (Q[0] == 0) throw std::domain_error("limsup_resultant_estimate: Q(0) must be nonzero");
  if (P.eval(1) == 0 && Q.eval(1) == 0) throw std::domain_error("limsup_resultant_estimate: P(1) and Q(1) both vanish");
  if (N == 0) throw std::domain_error("limsup_resultant_estimate: N must be positive");
  LimsupResultantEstimate out;
  out.N = N;
  out.target = std::pow(mahler_measure(P).value(), Q.degree());
  PowerMapTable table(P, N);
  for (u64 n = 1; n <= N; ++n) {
    Int r = resultant(table.at(n), Q);
    if (r != 0) out.E = std::max(out.E, std::exp(log_abs(r) / static_cast<double>(n)));
    out.values.push_back(std::move(r));
  }
  out.ratio = out.E / out.target;
  return out;
}

// ---------------------------------------------------------------------------
// equidistribution constant

struct EquidistributionOptions {
  u64 min_N = 100;  ///< from this N on an empty achieving set is flagged
};

struct EquidistributionReport {
  double delta = 0;           ///< 1/(3m)
  std::vector<u64> achieving;  ///< n <= N with min_j ||n x_j|| > delta
  bool nonempty = false;
  bool flagged = false;       ///< N >= min_N and nothing achieved
};

/// Distance from x to the nearest integer.
inline long double nearest_integer_distance(long double x) {
  long double f = x - std::floor(x);
  return std::min(f, 1 - f);
}

inline EquidistributionReport equidistribution_delta(const std::vector<long double>& angles, u64 N,
                                                     const EquidistributionOptions& opt = {}) {
  const std::size_t m = angles.size();
  if (m == 0) throw std::domain_error("equidistribution_delta: need at least one number");
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j)
      if (nearest_integer_distance(angles[i] - angles[j]) == 0)
        throw std::domain_error("equidistribution_delta: numbers must be distinct modulo 1");
  EquidistributionReport out;
  out.delta = 1.0 / (3.0 * static_cast<double>(m));
  for (u64 n = 1; n <= N; ++n) {
    long double worst = 1;
    for (long double x : angles) {
      // reduce first so that n * x keeps its fractional digits
      long double frac = x - std::floor(x);
      worst = std::min(worst, nearest_integer_distance(std::fmod(static_cast<long double>(n) * frac, 1.0L)));
    }
    if (worst > out.delta) out.achieving.push_back(n);
  }
  out.nonempty = !out.achieving.empty();
  out.flagged = N >= opt.min_N && !out.nonempty;
  return out;
}

}  // namespace lehmer
