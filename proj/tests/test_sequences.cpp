#include <gtest/gtest.h>

#include "lehmer/corpus.hpp"
#include "lehmer/measure.hpp"
#include "lehmer/polyfactor.hpp"
#include "lehmer/quotient_order.hpp"
#include "lehmer/sequences.hpp"
#include "support.hpp"

using namespace lehmer;
using testing_support::Gen;

namespace {

IntPoly P(std::initializer_list<long> c) { return IntPoly(c); }

const IntPoly golden2 = P({1, -3, 1});
const IntPoly fib2 = P({-1, -1, 1});
const IntPoly cubic = P({-1, -1, 0, 1});
const IntPoly quartic = P({1, 1, -1, 1, 1});

Int ipw(long b, unsigned long e) { return ipow(Int(b), e); }

/// Discriminant from the Sylvester determinant of P and P'.
Int oracle_disc(const IntPoly& p) {
  const int d = p.degree();
  Int r = testing_support::sylvester_resultant(p, derivative(p));
  if ((d * (d - 1) / 2) % 2) r = -r;
  return divexact(r, p.leading());
}

/// Delta(P_n) through companion-matrix powers and Sylvester determinants.
Int oracle_disc_n(const IntPoly& p, unsigned n) { return oracle_disc(testing_support::companion_power_poly(p, n)); }

Int isqrt_exact(const Int& v, bool& ok) {
  if (v < 0) {
    ok = false;
    return 0;
  }
  Int r;
  mpz_sqrt(r.get_mpz_t(), v.get_mpz_t());
  ok = r * r == v;
  return r;
}

/// Sample of the standard corpus with squarefree members.
std::vector<IntPoly> corpus_sample(std::size_t stride) {
  std::vector<IntPoly> out;
  auto all = standard_corpus();
  for (std::size_t i = 0; i < all.size(); i += stride) out.push_back(all[i]);
  return out;
}

}  // namespace

// --- delta_seq ---------------------------------------------------------------

TEST(DeltaSeqTest, Examples) {
  auto s = delta_seq(golden2, 3);
  EXPECT_EQ(s.disc(1), 5);
  EXPECT_EQ(s.disc(2), 45);
  EXPECT_EQ(s.disc(3), ipw(2, 6) * 5);
  EXPECT_EQ(delta_seq(cubic, 7).disc(7), -ipw(2, 6) * 23);
  auto q = delta_seq(quartic, 5);
  EXPECT_EQ(q.disc(1), -3 * ipw(13, 2));
  EXPECT_EQ(q.disc(5), -ipw(2, 16) * 3 * ipw(13, 2));
  EXPECT_THROW(delta_seq(P({1, 1}), 3), std::domain_error);
  EXPECT_THROW(delta_seq(golden2, 0), std::domain_error);
}

TEST(DeltaSeqTest, AgreesWithCompanionOracle) {
  Gen gen(41);
  for (int i = 0; i < 30; ++i) {
    IntPoly p = gen.monic(2, 4, 3);
    auto s = delta_seq(p, 8);
    for (unsigned n = 1; n <= 8; ++n) EXPECT_EQ(s.disc(n), oracle_disc_n(p, n)) << p << " n=" << n;
  }
}

TEST(DeltaSeqTest, MobiusInversionAndPsiProduct) {
  for (const auto& p : corpus_sample(7)) {
    auto s = delta_seq(p, 24);
    for (unsigned n = 1; n <= 24; ++n) {
      EXPECT_EQ(s.delta(n), testing_support::mobius_transform(s.discs, n)) << p;
      Int sum = 0, prod = 1;
      bool known = true;
      for (unsigned m = 1; m <= n; ++m)
        if (n % m == 0) {
          sum += s.delta(m);
          if (s.psi(m))
            prod *= *s.psi(m);
          else
            known = false;
        }
      EXPECT_EQ(sum, s.disc(n));
      if (known) {
        EXPECT_EQ(prod, s.disc(n)) << p << " n=" << n;
      }
    }
  }
}

// --- Gauss-type congruences --------------------------------------------------

TEST(GaussCoefficientsTest, Examples) {
  auto rep = gauss_check_coefficients(golden2, 2);
  EXPECT_TRUE(rep.pass);
  // P_2 - P_1 = -4x
  EXPECT_EQ(power_map(golden2, 2) - golden2, P({0, -4}));
  for (std::uint64_t n : {1, 2, 3, 5, 6, 12})
    EXPECT_TRUE(gauss_check_coefficients(cyclotomic(n), 30).pass) << n;
  EXPECT_EQ(rep.family, "coefficients");
}

TEST(GaussCoefficientsTest, RandomPolynomialsWithDirectSums) {
  Gen gen(42);
  for (int i = 0; i < 25; ++i) {
    IntPoly p = gen.monic(1, 5, 4);
    EXPECT_TRUE(gauss_check_coefficients(p, 24).pass) << p;
    // direct oracle on every coefficient for small n
    for (unsigned n = 2; n <= 12; ++n) {
      std::vector<std::vector<Int>> coeffs;
      for (unsigned m = 1; m <= n; ++m) {
        IntPoly pm = testing_support::companion_power_poly(p, m);
        std::vector<Int> c(p.degree() + 1);
        for (int k = 0; k <= p.degree(); ++k) c[k] = pm[k];
        coeffs.push_back(c);
      }
      for (int k = 0; k <= p.degree(); ++k) {
        std::vector<Int> seq;
        for (unsigned m = 0; m < n; ++m) seq.push_back(coeffs[m][k]);
        EXPECT_TRUE(divides(Int(n), testing_support::mobius_transform(seq, n))) << p << " n=" << n << " k=" << k;
      }
    }
  }
}

TEST(GaussDeltaTest, Examples) {
  auto rep = gauss_check_delta(golden2, 3);
  ASSERT_EQ(rep.records.size(), 3u);
  EXPECT_EQ(rep.records[0].lhs, 5);
  EXPECT_EQ(rep.records[1].lhs, 40);
  EXPECT_EQ(*rep.records[1].quotient, 20);
  EXPECT_EQ(rep.records[2].lhs, 315);
  EXPECT_EQ(*rep.records[2].quotient, 105);
  EXPECT_TRUE(rep.pass);
  EXPECT_EQ(rep.first, 1u);
  EXPECT_EQ(rep.last, 3u);
}

TEST(GaussDeltaTest, HoldsOnCorpusSample) {
  for (const auto& p : corpus_sample(3)) {
    auto rep = gauss_check_delta(p, 24);
    EXPECT_TRUE(rep.pass) << p;
    EXPECT_EQ(rep.records.size(), 24u);
    for (const auto& r : rep.records) EXPECT_EQ(r.pass, divides(Int(r.n), r.lhs));
  }
}

TEST(GaussResultantTest, Examples) {
  auto lehmer = gauss_check_resultant(golden2, P({-1, 1}), 12);
  auto ld = lehmer_delta(golden2, 12);
  for (unsigned n = 1; n <= 12; ++n)
    EXPECT_EQ(lehmer.records[n - 1].lhs, testing_support::mobius_transform(ld.values, n));
  EXPECT_TRUE(lehmer.pass);
  auto self = gauss_check_resultant(golden2, golden2, 10);
  EXPECT_TRUE(self.pass);
  EXPECT_TRUE(gauss_check_resultant(golden2, P({-2, 1}), 20).pass);
  EXPECT_EQ(self.family, "resultant");
}

TEST(GaussResultantTest, RandomPairs) {
  Gen gen(43);
  for (int i = 0; i < 100; ++i) {
    IntPoly p = gen.monic(1, 4, 3), q = gen.monic(1, 3, 3);
    auto rep = gauss_check_resultant(p, q, 20);
    EXPECT_TRUE(rep.pass) << p << " / " << q;
    // Res(P_n, Q) through the Sylvester oracle for the first few n
    for (unsigned n = 1; n <= 4; ++n) {
      std::vector<Int> seq;
      for (unsigned m = 1; m <= n; ++m)
        seq.push_back(testing_support::sylvester_resultant(testing_support::companion_power_poly(p, m), q));
      EXPECT_EQ(rep.records[n - 1].lhs, testing_support::mobius_transform(seq, n));
    }
  }
}

TEST(DobrowolskiCheckTest, Examples) {
  auto rep = dobrowolski_check(golden2, {2, 7});
  EXPECT_EQ(rep.records[0].lhs, 16);
  EXPECT_EQ(rep.records[1].lhs, 705600);
  EXPECT_TRUE(rep.pass);
  auto c = dobrowolski_check(cubic, {2});
  EXPECT_TRUE(divides(Int(8), c.records[0].lhs));
  EXPECT_TRUE(c.pass);
  EXPECT_THROW(dobrowolski_check(golden2, {4}), std::domain_error);
  // cyclotomic input: the resultant vanishes and the verdict fails
  EXPECT_FALSE(dobrowolski_check(cyclotomic(3), {2}).pass);
}

TEST(DobrowolskiCheckTest, PrimePowersDivideOnCorpusSample) {
  const std::vector<std::uint64_t> primes{2, 3, 5, 7, 11, 13};
  for (const auto& p : corpus_sample(5)) {
    const unsigned long d = p.degree();
    for (auto pr : primes) {
      Int r = resultant(power_map(p, pr), p);
      EXPECT_TRUE(divides(ipow(Int(static_cast<unsigned long>(pr)), d), r)) << p << " p=" << pr;
    }
    auto fac = factor_monic_squarefree(squarefree_part(p));
    if (fac.factors.size() == 1 && fac.factors[0] == p && !is_cyclotomic_product(p).is_product && p[0] != 0) {
      EXPECT_TRUE(dobrowolski_check(p, primes).pass) << p;
    }
  }
}

// --- U(n) --------------------------------------------------------------------

TEST(UOfNTest, Examples) {
  EXPECT_EQ(u_of_n(golden2, 7), ipw(2, 6) * ipw(3, 2) * ipw(5, 2) * ipw(7, 2));
  EXPECT_EQ(u_of_n(golden2, 2), 16);
  EXPECT_EQ(u_of_n(P({-1, 0, 1}), 6), 0);
  EXPECT_EQ(u_of_n(P({-2, 1, 1}), 5), 0);
  for (std::uint64_t p : {2, 3, 5, 7, 11}) EXPECT_EQ(u_of_n(cubic, p), resultant(power_map(cubic, p), cubic));
  EXPECT_THROW(u_of_n(golden2, 1), std::domain_error);
  EXPECT_THROW(u_of_n(P({1, 0, 0, 0, 0, 0, 0, 0, 0, 1}), 30), resource_error);
}

TEST(UOfNTest, MatchesRootProductOracle) {
  // U(n) = prod over tuples of (prod_{D+} a^m - prod_{D-} a^m); for l = 1
  // this is Res(P_{n}, P_{n/p}) and is checked through companion powers
  for (std::uint64_t n : {2, 3, 4, 8, 9, 25}) {
    std::uint64_t p = 2;
    while (n % p) ++p;
    IntPoly hi = testing_support::companion_power_poly(golden2, n);
    IntPoly lo = testing_support::companion_power_poly(golden2, n / p);
    EXPECT_EQ(u_of_n(golden2, n), testing_support::sylvester_resultant(hi, lo)) << n;
  }
}

TEST(UDivisibilityTest, Examples) {
  auto r7 = u_divisibility_check(golden2, 7);
  EXPECT_EQ(r7.main.divisor, 49);
  EXPECT_EQ(divexact(r7.U, Int(49)), 14400);
  EXPECT_TRUE(r7.pass);
  auto r2 = u_divisibility_check(golden2, 2);
  EXPECT_EQ(r2.main.divisor, 4);
  EXPECT_TRUE(r2.pass);
  auto r6 = u_divisibility_check(golden2, 6);
  EXPECT_EQ(r6.exponent, 4u);
  EXPECT_EQ(r6.main.divisor, 1296);
  EXPECT_TRUE(r6.pass);
  EXPECT_EQ(r6.coprime.size(), 3u);
}

TEST(UDivisibilityTest, HoldsOnCorpusSample) {
  for (const auto& p : corpus_sample(11))
    for (std::uint64_t n = 2; n <= 12; ++n) {
      if (u_degree(p.degree(), n) > 64) continue;
      EXPECT_TRUE(u_divisibility_check(p, n).pass) << p << " n=" << n;
    }
}

TEST(A0DivisibilityTest, Examples) {
  auto unit = a0_power_divisibility(golden2, 6);
  EXPECT_TRUE(unit.trivial);
  EXPECT_TRUE(unit.pass);
  auto six = a0_power_divisibility(P({2, -3, 1}), 6);
  EXPECT_EQ(six.exponent, 16);
  EXPECT_TRUE(six.pass);
  auto four = a0_power_divisibility(P({-2, 0, 1}), 4);
  EXPECT_EQ(four.exponent, 2);
  EXPECT_TRUE(four.pass);
}

TEST(A0DivisibilityTest, HoldsOnNonUnitConstantTerms) {
  int checked = 0;
  for (const auto& p : standard_corpus()) {
    if (iabs(p[0]) < 2 || checked >= 20) continue;
    for (std::uint64_t n : {2, 3, 4, 6}) {
      if (u_degree(p.degree(), n) > 64) continue;
      auto r = a0_power_divisibility(p, n);
      EXPECT_TRUE(r.pass) << p << " n=" << n;
      EXPECT_TRUE(divides(ipow(p[0], to_u64(r.exponent)), r.U) == r.pass);
    }
    ++checked;
  }
  EXPECT_EQ(checked, 20);
}

TEST(UUpperBoundTest, Examples) {
  auto b2 = u_upper_bound_check(golden2, 2);
  EXPECT_TRUE(b2.pass);
  const double M = (3 + std::sqrt(5.0)) / 2;
  EXPECT_NEAR(b2.log_rhs.to_double(), 4 * std::log(2.0) + 8 * std::log(M), 1e-9);
  EXPECT_NEAR(b2.log_lhs.to_double(), std::log(16.0), 1e-12);
  auto b7 = u_upper_bound_check(golden2, 7);
  EXPECT_TRUE(b7.pass);
  EXPECT_NEAR(b7.log_rhs.to_double(), 4 * std::log(2.0) + 28 * std::log(M), 1e-9);
  auto cyc = u_upper_bound_check(cyclotomic(5), 3);
  EXPECT_TRUE(cyc.pass);
  EXPECT_NEAR(cyc.log_rhs.to_double(), 16 * std::log(2.0), 1e-9);
}

// --- delta_n -----------------------------------------------------------------

TEST(SmallDeltaTest, Examples) {
  auto g = small_delta(golden2, 3);
  EXPECT_EQ(g.deltas, (std::vector<Int>{5, 40, 315}));
  EXPECT_TRUE(g.divisible_by_n);
  EXPECT_EQ(g.sign, SignVerdict::consistent);
  EXPECT_FALSE(g.range_limited);
  auto sq = small_delta(P({-2, 0, 1}), 4);
  EXPECT_EQ(sq.sign, SignVerdict::inapplicable);
  ASSERT_TRUE(sq.zero_witness);
  EXPECT_EQ(*sq.zero_witness, 2u);
  EXPECT_EQ(sq.vanishing, (std::vector<std::uint64_t>{2}));
}

TEST(SmallDeltaTest, VanishingOrdersPredictZeros) {
  for (const auto& p : corpus_sample(2)) {
    auto orders = vanishing_orders(p);
    auto s = delta_seq(p, 24);
    for (unsigned n = 1; n <= 24; ++n) {
      bool predicted = std::any_of(orders.begin(), orders.end(), [&](std::uint64_t m) { return n % m == 0; });
      EXPECT_EQ(s.disc(n) == 0, predicted) << p << " n=" << n;
    }
  }
}

TEST(SmallDeltaTest, SignsAndDivisibilityOnCorpusSample) {
  int with_threshold = 0;
  for (const auto& p : corpus_sample(3)) {
    auto rep = small_delta(p, 24);
    EXPECT_TRUE(rep.divisible_by_n) << p;
    if (!rep.vanishing.empty()) continue;
    EXPECT_EQ(rep.sign, SignVerdict::consistent) << p;
    auto s = delta_seq(p, 24);
    for (unsigned n = 1; n <= 24; ++n) {
      Int abs_sum = 0;
      for (unsigned m = 1; m <= n; ++m)
        if (n % m == 0) abs_sum += iabs(s.delta(m));
      EXPECT_EQ(iabs(s.disc(n)), abs_sum) << p << " n=" << n;
    }
    if (rep.div12_threshold) {
      ++with_threshold;
      for (unsigned n = *rep.div12_threshold + 1; n <= 24; ++n) EXPECT_TRUE(divides(Int(12), s.delta(n)));
    }
  }
  EXPECT_GT(with_threshold, 0);
}

TEST(MonotonicityTest, Examples) {
  auto r = delta_pk_monotonicity(golden2, 2, 1, 1);
  ASSERT_EQ(r.records.size(), 1u);
  EXPECT_EQ(r.records[0].upper, 45);
  EXPECT_EQ(r.records[0].lower, 5);
  EXPECT_TRUE(r.pass);
  auto r3 = delta_pk_monotonicity(golden2, 3, 1, 2);
  ASSERT_EQ(r3.records.size(), 2u);
  // delta_2(P_3) = Delta(P_6) - Delta(P_3), delta_2(P) = Delta(P_2) - Delta(P)
  auto s = delta_seq(golden2, 6);
  EXPECT_EQ(r3.records[1].upper, s.disc(6) - s.disc(3));
  EXPECT_EQ(r3.records[1].lower, s.disc(2) - s.disc(1));
  EXPECT_TRUE(r3.pass);
  EXPECT_FALSE(delta_pk_monotonicity(P({-2, 0, 1}), 3, 1, 4).applicable);
  EXPECT_THROW(delta_pk_monotonicity(golden2, 4, 1, 3), std::domain_error);
}

TEST(MonotonicityTest, HoldsWithIdentityOnCorpusSample) {
  for (const auto& p : corpus_sample(13)) {
    auto r = delta_pk_monotonicity(p, 2, 2, 5);
    if (!r.applicable) continue;
    EXPECT_TRUE(r.pass) << p;
    for (const auto& rec : r.records) EXPECT_TRUE(rec.identity);
  }
}

// --- essential factors and characteristic primes -----------------------------

TEST(EssentialFactorsTest, Examples) {
  auto g = essential_factors(golden2, 3);
  ASSERT_EQ(g.records.size(), 3u);
  EXPECT_EQ(*g.records[0].psi, 5);
  EXPECT_EQ(*g.records[1].psi, 9);
  EXPECT_EQ(*g.records[1].root, 3);
  EXPECT_EQ(*g.records[2].psi, 64);
  EXPECT_EQ(*g.records[2].root, 8);
  EXPECT_TRUE(g.pass);
  auto q = essential_factors(quartic, 5);
  EXPECT_EQ(*q.records[4].psi, ipw(2, 16));
  EXPECT_EQ(*q.records[4].root, 256);
  EXPECT_TRUE(q.sign_shared);
  EXPECT_THROW(essential_factors(P({1, 2, 1}), 3), std::domain_error);
}

TEST(EssentialFactorsTest, SquaresOnCorpusSample) {
  for (const auto& p : corpus_sample(4)) {
    if (!is_squarefree(p)) continue;
    auto rep = essential_factors(p, 24);
    EXPECT_TRUE(rep.pass) << p;
    for (const auto& r : rep.records) {
      if (r.m < 2 || !r.psi) continue;
      bool ok = false;
      Int root = isqrt_exact(*r.psi, ok);
      EXPECT_TRUE(ok) << p << " m=" << r.m;
      EXPECT_EQ(r.square, ok);
      if (ok) {
        ASSERT_TRUE(r.root);
        EXPECT_EQ(iabs(*r.root), root);
      }
    }
  }
}

TEST(CharacteristicPrimesTest, Examples) {
  auto q = characteristic_primes(quartic, 5);
  auto two = std::find_if(q.primes.begin(), q.primes.end(), [](const auto& c) { return c.p == 2; });
  ASSERT_NE(two, q.primes.end());
  EXPECT_EQ(two->k, 16u);
  EXPECT_TRUE(two->residue_ok);
  EXPECT_EQ(ipw(2, 16) % 5, 1);
  auto c = characteristic_primes(cubic, 7);
  two = std::find_if(c.primes.begin(), c.primes.end(), [](const auto& x) { return x.p == 2; });
  ASSERT_NE(two, c.primes.end());
  EXPECT_EQ(two->k, 6u);
  EXPECT_TRUE(two->residue_ok);
  EXPECT_TRUE(two->divides_psi);
  auto base = characteristic_primes(golden2, 1);
  EXPECT_TRUE(base.degenerate);
  ASSERT_EQ(base.primes.size(), 1u);
  EXPECT_EQ(base.primes[0].p, 5);
}

TEST(CharacteristicPrimesTest, ResidueConditionOnCorpusSample) {
  for (const auto& p : corpus_sample(17)) {
    if (!is_squarefree(p) || !vanishing_orders(p).empty()) continue;
    for (std::uint64_t n = 2; n <= 12; ++n) {
      auto rep = characteristic_primes(p, n);
      EXPECT_TRUE(rep.pass) << p << " n=" << n;
    }
  }
}

// --- quotient orders ---------------------------------------------------------

TEST(QuotientOrderTest, Examples) {
  EXPECT_EQ(order_in_quotient(golden2, 2).M, 3);
  EXPECT_EQ(order_in_quotient(cubic, 2).M, 7);
  EXPECT_EQ(order_in_quotient(quartic, 2).M, 5);
  EXPECT_THROW(order_in_quotient(P({2, 0, 1}), 2), std::domain_error);
  EXPECT_THROW(order_in_quotient(P({1, 2, 1}), 3), std::domain_error);
}

TEST(QuotientOrderTest, OrderIsMinimalByDirectPowering) {
  // x^M = 1 in Z[x]/(m, P) and no proper divisor of M works
  auto x_pow_is_one = [](const IntPoly& p, std::uint64_t m, std::uint64_t e) {
    std::vector<Int> acc{1};
    const int d = p.degree();
    for (std::uint64_t k = 0; k < e; ++k) {
      std::vector<Int> next(d, Int(0));
      for (int i = 0; i < static_cast<int>(acc.size()); ++i) {
        if (i + 1 < d)
          next[i + 1] += acc[i];
        else
          for (int j = 0; j < d; ++j) next[j] -= acc[i] * p[j];
      }
      for (auto& c : next) {
        c %= Int(static_cast<unsigned long>(m));
        if (c < 0) c += static_cast<unsigned long>(m);
      }
      acc = next;
    }
    acc.resize(d, Int(0));
    for (int i = 0; i < d; ++i)
      if (acc[i] != (i == 0 ? 1 : 0)) return false;
    return true;
  };
  Gen gen(44);
  for (int i = 0; i < 40; ++i) {
    IntPoly p = gen.monic(2, 4, 4);
    std::uint64_t m = gen.uniform(2, 12);
    QuotientOrder q;
    try {
      q = order_in_quotient(p, m);
    } catch (const std::domain_error&) {
      continue;
    }
    if (q.M > 5000) continue;
    const std::uint64_t M = to_u64(q.M);
    EXPECT_TRUE(x_pow_is_one(p, m, M)) << p << " m=" << m;
    for (std::uint64_t e = 1; e < M; ++e)
      if (M % e == 0) {
        EXPECT_FALSE(x_pow_is_one(p, m, e)) << p << " m=" << m << " e=" << e;
      }
  }
}

TEST(PredictedDivisibilityTest, Examples) {
  auto g = predicted_disc_divisibility(golden2, 2);
  EXPECT_EQ(g.M, 3);
  EXPECT_EQ(g.divisor, 4);
  EXPECT_EQ(g.disc, 320);
  EXPECT_TRUE(g.pass);
  auto c = predicted_disc_divisibility(cubic, 2);
  EXPECT_EQ(c.divisor, 64);
  EXPECT_EQ(c.disc, -1472);
  EXPECT_TRUE(c.pass);
  auto q = predicted_disc_divisibility(quartic, 2);
  EXPECT_EQ(q.divisor, 4096);
  EXPECT_TRUE(q.pass);
}

// --- partitions and small-prime predictors -----------------------------------

TEST(PartitionFactorsTest, Examples) {
  auto two = u_partition_factors(golden2, 2);
  ASSERT_EQ(two.factors.size(), 2u);
  // one block: prod (a^2 - a) = a0 * (-1)^d P(1) = -1
  EXPECT_EQ(two.factors[0].partition.blocks.size(), 1u);
  EXPECT_EQ(two.factors[0].value, -1);
  EXPECT_EQ(two.factors[1].value, -16);
  EXPECT_TRUE(two.product_matches);
  for (const auto& f : two.factors) EXPECT_LT(f.half_width, 0.25);
  for (std::uint64_t n : {3, 5, 6}) {
    auto r = u_partition_factors(golden2, n);
    EXPECT_TRUE(r.product_matches) << n;
    Int prod = 1;
    for (const auto& f : r.factors) prod *= f.value;
    EXPECT_EQ(prod, u_of_n(golden2, n));
  }
  EXPECT_EQ(u_partition_factors(P({-2, -1, 0, 0, 1}), 6).factors.size(), 15u);
  EXPECT_EQ(u_partition_factors(cubic, 5).factors.size(), 2u);
  EXPECT_EQ(u_partition_factors(golden2, 6).factors.size(), 8u);
  EXPECT_THROW(u_partition_factors(golden2, 30), std::domain_error);
}

TEST(PartitionFactorsTest, SetPartitionCounts) {
  // Bell numbers and their truncations by block count
  EXPECT_EQ(set_partitions(2, 4).size(), 2u);
  EXPECT_EQ(set_partitions(4, 4).size(), 15u);
  EXPECT_EQ(set_partitions(4, 2).size(), 8u);
  EXPECT_EQ(set_partitions(5, 5).size(), 52u);
  for (const auto& part : set_partitions(4, 4)) {
    std::vector<int> seen(5, 0);
    for (const auto& b : part.blocks) {
      EXPECT_FALSE(b.empty());
      for (unsigned i : b) ++seen[i];
    }
    for (unsigned i = 1; i <= 4; ++i) EXPECT_EQ(seen[i], 1);
  }
}

TEST(SmallPrimeDivisibilityTest, Examples) {
  auto r = u_small_prime_divisibility(golden2, 2, 7);
  EXPECT_EQ(r.full, Applicability::applies);
  EXPECT_TRUE(r.full_pass);
  EXPECT_EQ(*r.group_exponent, 3);
  for (std::uint64_t n : {2, 3, 5, 7}) {
    auto q = u_small_prime_divisibility(quartic, 2, n);
    EXPECT_EQ(q.at_one, Applicability::applies);
    EXPECT_TRUE(q.at_one_pass) << n;
    EXPECT_TRUE(divides(Int(3), u_of_n(quartic, n)));
  }
  for (std::uint64_t p : {2, 3, 5, 7, 11, 13, 17, 23}) {
    const bool plus_minus_one = p % 8 == 1 || p % 8 == 7;
    EXPECT_EQ(divides(Int(7), u_of_n(golden2, p)), plus_minus_one) << p;
  }
  auto nonunit = u_small_prime_divisibility(P({3, -4, 1}), 2, 3);
  EXPECT_EQ(nonunit.full, Applicability::inapplicable);
}

// --- Lehmer's Delta_n and b_n ------------------------------------------------

TEST(LehmerDeltaTest, Examples) {
  auto g = lehmer_delta(golden2, 6);
  EXPECT_EQ(g.values[0], -1);
  auto z = lehmer_delta(P({-1, 0, 1}), 5);
  for (const auto& v : z.values) EXPECT_EQ(v, 0);
  // |Delta_n| <= 2^d M^n always, and the growth rate approaches M
  IntPoly lehmer10{1, 1, 0, -1, -1, -1, -1, -1, 0, 1, 1};
  const double logM = std::log(1.17628081825991750);
  auto l = lehmer_delta(lehmer10, 300);
  double best_late = -HUGE_VAL;
  for (unsigned n = 1; n <= 300; ++n) {
    const Int& v = l.values[n - 1];
    ASSERT_NE(v, 0);
    EXPECT_LE(log_abs(v), 10 * std::log(2.0) + n * logM + 1e-9) << n;
    if (n > 200) best_late = std::max(best_late, log_abs(v) / n);
  }
  EXPECT_GT(best_late, logM - 0.02);
}

TEST(LehmerDeltaTest, MatchesProductOverRoots) {
  Gen gen(45);
  for (int i = 0; i < 30; ++i) {
    IntPoly p = gen.monic(1, 5, 3);
    auto ld = lehmer_delta(p, 6);
    for (unsigned n = 1; n <= 6; ++n) {
      IntPoly pn = testing_support::companion_power_poly(p, n);
      // prod (a^n - 1) = (-1)^d P_n(1)
      Int v = pn.eval(Int(1));
      if (p.degree() % 2) v = -v;
      EXPECT_EQ(ld.values[n - 1], v) << p << " n=" << n;
    }
  }
}

TEST(QuadraticBTest, Examples) {
  auto g = b_seq_quadratic(golden2, 5);
  EXPECT_EQ(g.values, (std::vector<Int>{1, 3, 8, 21, 55}));
  EXPECT_TRUE(g.identity);
  EXPECT_EQ(g.values[2] * g.values[2], Int(320) / 5);
  auto f = b_seq_quadratic(fib2, 5);
  EXPECT_EQ(f.values, (std::vector<Int>{1, 1, 2, 3, 5}));
  EXPECT_THROW(b_seq_quadratic(cubic, 3), std::domain_error);
  EXPECT_THROW(b_seq_quadratic(P({1, 2, 1}), 3), std::domain_error);
}

TEST(QuadraticBTest, IdentityOnAllCorpusQuadratics) {
  for (const auto& p : family(FamilyBounds{2, 2, 3, false})) {
    if (discriminant(p) == 0) continue;
    auto b = b_seq_quadratic(p, 24);
    EXPECT_TRUE(b.identity) << p;
    EXPECT_EQ(b.values[0], 1);
  }
}

// --- report structure --------------------------------------------------------

TEST(GaussReportTest, CoversRangeWithoutGaps) {
  Gen gen(46);
  for (int i = 0; i < 10; ++i) {
    IntPoly p = gen.monic(2, 4, 3);
    auto rep = gauss_check_delta(p, 17);
    ASSERT_EQ(rep.records.size(), 17u);
    for (unsigned n = 1; n <= 17; ++n) {
      const auto& r = rep.records[n - 1];
      EXPECT_EQ(r.n, n);
      EXPECT_EQ(r.pass, divides(Int(n), r.lhs));
      if (r.quotient) {
        EXPECT_EQ(*r.quotient * n, r.lhs);
      }
    }
  }
}
