#include <gtest/gtest.h>

#include "lehmer/corpus.hpp"
#include "lehmer/estimates.hpp"
#include "support.hpp"

using namespace lehmer;
using testing_support::Gen;

namespace {

IntPoly P(std::initializer_list<long> c) { return IntPoly(c); }

const IntPoly golden2 = P({1, -3, 1});
const IntPoly fib2 = P({-1, -1, 1});
const IntPoly lehmer10 = P({1, 1, 0, -1, -1, -1, -1, -1, 0, 1, 1});

using GQ = GaussianRational;

GQ gq(long re, long im = 0) { return GQ{Rational(re), Rational(im)}; }

GQ ginv(const GQ& z) {
  Rational n = z.re * z.re + z.im * z.im;
  return GQ{z.re / n, -z.im / n};
}

/// Entry (j, col): (1/k!) d^k/dx^k x^j at the block's point, by repeated
/// differentiation of the monomial.
std::vector<std::vector<GQ>> oracle_matrix(const ConfluentSpec& spec) {
  const unsigned n = spec.size();
  std::vector<std::vector<GQ>> A(n, std::vector<GQ>(n, gq(0)));
  unsigned col = 0;
  for (const auto& p : spec.points)
    for (unsigned k = 0; k < p.multiplicity; ++k, ++col)
      for (unsigned j = 0; j < n; ++j) {
        if (j < k) continue;
        // falling factorial j (j-1) ... (j-k+1) / k!
        Int num = 1, den = 1;
        for (unsigned t = 0; t < k; ++t) {
          num *= j - t;
          den *= t + 1;
        }
        GQ pw = gq(1);
        for (unsigned t = 0; t < j - k; ++t) pw = pw * p.x;
        Rational c(num, den);
        c.canonicalize();
        A[j][col] = GQ{pw.re * c, pw.im * c};
      }
  return A;
}

/// Determinant over Q(i) by plain elimination with the first nonzero pivot.
GQ oracle_det(std::vector<std::vector<GQ>> A) {
  const std::size_t n = A.size();
  GQ det = gq(1);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && A[piv][c] == gq(0)) ++piv;
    if (piv == n) return gq(0);
    if (piv != c) {
      std::swap(A[piv], A[c]);
      det = gq(0) - det;
    }
    det = det * A[c][c];
    const GQ inv = ginv(A[c][c]);
    for (std::size_t r = c + 1; r < n; ++r) {
      const GQ f = A[r][c] * inv;
      if (f == gq(0)) continue;
      for (std::size_t k = c; k < n; ++k) A[r][k] = A[r][k] - f * A[c][k];
    }
  }
  return det;
}

GQ oracle_closed_form(const ConfluentSpec& spec) {
  GQ prod = gq(1);
  const auto& pts = spec.points;
  for (std::size_t j = 0; j < pts.size(); ++j)
    for (std::size_t k = j + 1; k < pts.size(); ++k)
      for (unsigned t = 0; t < pts[j].multiplicity * pts[k].multiplicity; ++t) prod = prod * (pts[k].x - pts[j].x);
  return prod;
}

ConfluentSpec random_spec(Gen& gen, unsigned max_n, bool complex) {
  ConfluentSpec spec;
  const unsigned n = static_cast<unsigned>(gen.uniform(1, max_n));
  unsigned used = 0;
  while (used < n) {
    ConfluentPoint pt;
    pt.multiplicity = static_cast<unsigned>(gen.uniform(1, std::min<long>(3, n - used)));
    for (;;) {
      pt.x = GQ{gen.rational(6, 4), complex ? gen.rational(6, 4) : Rational(0)};
      bool fresh = true;
      for (const auto& q : spec.points) fresh = fresh && !(q.x == pt.x);
      if (fresh) break;
    }
    used += pt.multiplicity;
    spec.points.push_back(pt);
  }
  return spec;
}

double to_d(const std::string& s) { return std::strtod(s.c_str(), nullptr); }

}  // namespace

// --- confluent Vandermonde ---------------------------------------------------

TEST(ConfluentVandermondeTest, Examples) {
  ConfluentSpec two{{{gq(2), 1}, {gq(5), 1}}};
  auto r = confluent_vandermonde(two);
  EXPECT_EQ(r.determinant, 3);
  EXPECT_EQ(r.closed_form, 3);
  EXPECT_TRUE(r.equal);
  EXPECT_TRUE(r.exact);

  ConfluentSpec double_point{{{gq(7), 2}}};
  auto d = confluent_vandermonde(double_point);
  EXPECT_EQ(d.determinant, 1);
  EXPECT_EQ(d.closed_form, 1);

  // (0, 1), (x, 2): det = x^2
  for (long x : {-3, 2, 5}) {
    ConfluentSpec s{{{gq(0), 1}, {gq(x), 2}}};
    auto v = confluent_vandermonde(s);
    EXPECT_EQ(v.determinant, x * x);
    EXPECT_TRUE(v.equal);
  }
}

TEST(ConfluentVandermondeTest, MatrixMatchesDerivativeDefinition) {
  Gen gen(61);
  for (int i = 0; i < 30; ++i) {
    ConfluentSpec spec = random_spec(gen, 8, i % 2 == 1);
    EXPECT_EQ(confluent_matrix(spec), oracle_matrix(spec));
  }
}

TEST(ConfluentVandermondeTest, RandomRationalSpecsAreExact) {
  Gen gen(62);
  for (int i = 0; i < 200; ++i) {
    ConfluentSpec spec = random_spec(gen, 12, false);
    auto r = confluent_vandermonde(spec);
    EXPECT_TRUE(r.equal);
    const GQ det = oracle_det(oracle_matrix(spec));
    const GQ closed = oracle_closed_form(spec);
    EXPECT_EQ(det, closed);
    EXPECT_EQ(r.determinant, det.re);
    EXPECT_EQ(r.closed_form, closed.re);
  }
}

TEST(ConfluentVandermondeTest, RandomComplexSpecsWithinEnclosure) {
  Gen gen(63);
  for (int i = 0; i < 50; ++i) {
    ConfluentSpec spec = random_spec(gen, 10, true);
    if (spec.is_real()) continue;
    auto r = confluent_vandermonde(spec);
    EXPECT_TRUE(r.equal);
    EXPECT_FALSE(r.exact);
    const GQ exact = oracle_det(oracle_matrix(spec));
    const double er = exact.re.get_d(), ei = exact.im.get_d();
    const double scale = std::max(1.0, std::hypot(er, ei));
    EXPECT_NEAR(to_d(r.determinant_ball.re), er, 1e-12 * scale);
    EXPECT_NEAR(to_d(r.determinant_ball.im), ei, 1e-12 * scale);
    EXPECT_LE(r.determinant_ball.radius, 1e-20 * scale);
  }
}

TEST(ConfluentVandermondeTest, Errors) {
  EXPECT_THROW(confluent_vandermonde(ConfluentSpec{}), std::domain_error);
  EXPECT_THROW(confluent_vandermonde(ConfluentSpec{{{gq(1), 1}, {gq(1), 2}}}), std::domain_error);
  EXPECT_THROW(confluent_vandermonde(ConfluentSpec{{{gq(1), 0}}}), std::domain_error);
  ConfluentOptions small;
  small.size_cap = 4;
  EXPECT_THROW(confluent_vandermonde(ConfluentSpec{{{gq(1), 3}, {gq(2), 2}}}, small), resource_error);
}

TEST(ConfluentSymbolicTest, ProofShapes) {
  // one point of multiplicity k with s simple points
  for (unsigned k = 1; k <= 3; ++k)
    for (unsigned s = 0; s <= 3; ++s) {
      std::vector<unsigned> m{k};
      for (unsigned t = 0; t < s; ++t) m.push_back(1);
      auto r = confluent_symbolic_check(m);
      EXPECT_TRUE(r.equal) << "k=" << k << " s=" << s;
      EXPECT_EQ(r.n, k + s);
    }
  EXPECT_TRUE(confluent_symbolic_check({2, 2, 1}).equal);
  EXPECT_TRUE(confluent_symbolic_check({1, 2, 3}).equal);
  // an ordinary Vandermonde in r variables has r! monomials
  EXPECT_EQ(confluent_symbolic_check({1, 1, 1, 1}).terms, 24u);
  EXPECT_THROW(confluent_symbolic_check({6, 5}), resource_error);
  EXPECT_THROW(confluent_symbolic_check({0, 1}), std::domain_error);
}

TEST(ConfluentParseTest, Specs) {
  auto s = parse_confluent_spec("0:2;1;1/2+i:3");
  ASSERT_EQ(s.points.size(), 3u);
  EXPECT_EQ(s.points[0].multiplicity, 2u);
  EXPECT_EQ(s.points[1].x, gq(1));
  EXPECT_EQ(s.points[2].x, (GQ{Rational(1, 2), Rational(1)}));
  EXPECT_EQ(s.size(), 6u);
  EXPECT_EQ(parse_gaussian_rational("-i"), gq(0, -1));
  EXPECT_EQ(parse_gaussian_rational("3-2i"), gq(3, -2));
  EXPECT_EQ(parse_gaussian_rational("-3/4i"), (GQ{Rational(0), Rational(-3, 4)}));
  EXPECT_EQ(parse_gaussian_rational(" 5 "), gq(5));
  for (const char* bad : {"", "x", "1/0", "1:0", "2:a", "1++i", ";"})
    EXPECT_THROW(parse_confluent_spec(bad), parse_error) << bad;
  for (const char* text : {"1/3", "2-i", "i", "-7/2+5/3i"}) {
    GQ z = parse_gaussian_rational(text);
    EXPECT_EQ(parse_gaussian_rational(z.to_string()), z) << text;
  }
}

// --- limsup of Delta(P_n) ----------------------------------------------------

TEST(LimsupDeltaTest, GoldenQuadratic) {
  auto e = limsup_delta_estimate(golden2, 40);
  const double alpha = (3 + std::sqrt(5.0)) / 2;
  EXPECT_NEAR(e.T, alpha * alpha, 1e-12);
  EXPECT_NEAR(e.T, 6.854, 1e-3);
  EXPECT_GE(e.ratio, 0.8);
  // exact value is 1 - O(alpha^-80); the slack absorbs double rounding
  EXPECT_LE(e.ratio, 1.0 + 1e-12);
  EXPECT_TRUE(e.bound_holds);
  EXPECT_EQ(e.records.size(), 40u);
  ASSERT_TRUE(e.chain_lower);
  EXPECT_TRUE(e.chain_holds);
}

TEST(LimsupDeltaTest, FibonacciQuadraticExceedsTheBand) {
  // the roots of x^2 - x - 1 have product -1, so Delta(P_n) carries a
  // 2 (-1)^{n+1} term that lifts |Delta(P_1)| = 5 well above T = 2.618
  auto e = limsup_delta_estimate(fib2, 40);
  EXPECT_NEAR(e.T, (3 + std::sqrt(5.0)) / 2, 1e-12);
  EXPECT_NEAR(e.E, 5.0, 1e-12);
  EXPECT_NEAR(e.ratio, 5.0 / ((3 + std::sqrt(5.0)) / 2), 1e-9);
  EXPECT_GT(e.ratio, 1.0);
  EXPECT_TRUE(e.bound_holds);
}

TEST(LimsupDeltaTest, UnitCircleRoots) {
  auto e = limsup_delta_estimate(P({1, 1, 1}), 24);
  EXPECT_NEAR(e.T, 1.0, 1e-12);
  for (const auto& r : e.records) EXPECT_LE(r.log_abs_delta, 2 * std::log(2.0) + 1e-12);
  EXPECT_TRUE(e.bound_holds);
  EXPECT_THROW(limsup_delta_estimate(P({1, 2, 1}), 5), std::domain_error);
}

TEST(LimsupDeltaTest, ProductBoundAgainstEigenvalueOracle) {
  std::size_t i = 0;
  for (const auto& p : standard_corpus()) {
    if (i++ % 5 || !is_squarefree(p)) continue;
    auto e = limsup_delta_estimate(p, 24);
    EXPECT_TRUE(e.bound_holds) << p;
    // T from double eigenvalues, moduli sorted descending
    auto roots = testing_support::eigen_roots(p);
    std::vector<double> mods;
    for (auto z : roots) mods.push_back(std::abs(z));
    std::sort(mods.rbegin(), mods.rend());
    double logT = 0;
    const int d = p.degree();
    for (int j = 0; j < d; ++j)
      if (mods[j] > 0) logT += 2.0 * (d - 1 - j) * std::log(mods[j]);
    if (std::all_of(mods.begin(), mods.end(), [](double m) { return m > 0; }))
      EXPECT_NEAR(std::log(e.T), logT, 1e-6) << p;
    if (e.chain_lower) EXPECT_TRUE(e.chain_holds) << p;
  }
}

// --- sandwich ----------------------------------------------------------------

TEST(SandwichTest, GoldenQuadratic) {
  auto s = sandwich_check(golden2, 40);
  EXPECT_TRUE(s.hadamard_holds);
  EXPECT_NEAR(s.threshold, (3 + std::sqrt(5.0)) / 2, 1e-12);
  EXPECT_TRUE(s.exceeded);
  ASSERT_TRUE(s.first_exceeding);
  EXPECT_LE(*s.first_exceeding, 3u);
  EXPECT_GE(s.max_growth, std::cbrt(320.0) - 1e-12);
}

TEST(SandwichTest, LehmerPolynomial) {
  auto s = sandwich_check(lehmer10, 24);
  EXPECT_TRUE(s.hadamard_holds);
  EXPECT_EQ(s.records.size(), 24u);
  EXPECT_THROW(sandwich_check(cyclotomic(7), 10), std::domain_error);
}

TEST(SandwichTest, HadamardOnCorpusSampleWithDoubleOracle) {
  std::size_t i = 0;
  for (const auto& p : standard_corpus()) {
    if (i++ % 4 || !is_squarefree(p) || is_cyclotomic_product(p).is_product) continue;
    auto s = sandwich_check(p, 24);
    EXPECT_TRUE(s.hadamard_holds) << p;
    const double d = p.degree(), logM = std::log(testing_support::eigen_measure(p));
    for (const auto& r : s.records) EXPECT_LE(r.log_abs_delta, d * std::log(d) + 2 * r.n * d * logM + 1e-6) << p;
  }
}

// --- Res(P_n, Q) -------------------------------------------------------------

TEST(LimsupResultantTest, Examples) {
  auto r = limsup_resultant_estimate(golden2, P({-1, 1}), 40);
  EXPECT_GE(r.ratio, 0.9);
  EXPECT_LE(r.ratio, 1.1);
  EXPECT_NEAR(r.target, (3 + std::sqrt(5.0)) / 2, 1e-12);
  auto ld = lehmer_delta(golden2, 40);
  // Res(P_n, x - 1) = (-1)^d prod (a^n - 1) and d = 2
  EXPECT_EQ(r.values, ld.values);
  auto c = limsup_resultant_estimate(P({1, 1, 1}), P({-2, 1}), 30);
  EXPECT_NEAR(c.target, 1.0, 1e-12);
  for (const auto& v : c.values) EXPECT_LE(iabs(v), 9);
}

TEST(LimsupResultantTest, Preconditions) {
  EXPECT_THROW(limsup_resultant_estimate(golden2, P({0, 1}), 5), std::domain_error);
  EXPECT_THROW(limsup_resultant_estimate(P({-1, 1}), P({-1, 0, 1}), 5), std::domain_error);
  EXPECT_THROW(limsup_resultant_estimate(golden2, P({1, 2}), 5), std::domain_error);
  EXPECT_NO_THROW(limsup_resultant_estimate(P({-1, 1}), P({-2, 1}), 5));
}

TEST(LimsupResultantTest, ValuesMatchSylvesterOracle) {
  Gen gen(64);
  for (int i = 0; i < 20; ++i) {
    IntPoly p = gen.monic(1, 3, 3), q = gen.monic_unit_free(1, 2, 3);
    if (p.eval(Int(1)) == 0 && q.eval(Int(1)) == 0) continue;
    auto r = limsup_resultant_estimate(p, q, 5);
    for (unsigned n = 1; n <= 5; ++n)
      EXPECT_EQ(r.values[n - 1], testing_support::sylvester_resultant(testing_support::companion_power_poly(p, n), q));
  }
}

// --- equidistribution --------------------------------------------------------

TEST(EquidistributionTest, Examples) {
  auto one = equidistribution_delta({std::sqrt(2.0L) - 1}, 1);
  EXPECT_EQ(one.achieving, (std::vector<std::uint64_t>{1}));
  auto half = equidistribution_delta({0.5L}, 10);
  EXPECT_EQ(half.achieving, (std::vector<std::uint64_t>{1, 3, 5, 7, 9}));
  auto two = equidistribution_delta({std::sqrt(2.0L) - 1, std::sqrt(3.0L) - 1}, 1000);
  EXPECT_TRUE(two.nonempty);
  EXPECT_NEAR(two.delta, 1.0 / 6, 1e-15);
  EXPECT_THROW(equidistribution_delta({0.25L, 1.25L}, 5), std::domain_error);
  EXPECT_THROW(equidistribution_delta({}, 5), std::domain_error);
  auto none = equidistribution_delta({0.0L}, 200);
  EXPECT_TRUE(none.flagged);
}

TEST(EquidistributionTest, AchievingSetMatchesDirectDistance) {
  Gen gen(65);
  std::uniform_real_distribution<long double> unit(0, 1);
  for (int i = 0; i < 30; ++i) {
    std::vector<long double> xs;
    for (int k = 0; k < gen.uniform(1, 4); ++k) xs.push_back(unit(gen.engine()));
    auto r = equidistribution_delta(xs, 300);
    const long double delta = 1.0L / (3 * xs.size());
    std::vector<std::uint64_t> expected;
    for (std::uint64_t n = 1; n <= 300; ++n) {
      long double worst = 1;
      for (long double x : xs) {
        long double y = n * x;
        worst = std::min(worst, std::fabs(y - std::nearbyint(y)));
      }
      if (worst > delta) expected.push_back(n);
    }
    EXPECT_EQ(r.achieving, expected);
  }
}
