#pragma once

// Hand-rolled generators and independent oracles for the test suite. The
// oracles deliberately take different routes from the library: Sylvester
// determinants for resultants, companion-matrix powers for P_n, and
// double-precision eigenvalues for root moduli.

#include <Eigen/Eigenvalues>

#include <complex>
#include <cstdint>
#include <random>
#include <vector>

#include "lehmer/bigint.hpp"
#include "lehmer/poly.hpp"

namespace testing_support {

using lehmer::Int;
using lehmer::IntPoly;
using lehmer::Rational;

/// Seeded source of random polynomials, integers and rationals.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  long uniform(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }

  /// Monic of degree in [dmin, dmax], lower coefficients in [-height, height].
  IntPoly monic(int dmin, int dmax, long height) {
    const int d = static_cast<int>(uniform(dmin, dmax));
    std::vector<Int> c(d + 1);
    for (int k = 0; k < d; ++k) c[k] = uniform(-height, height);
    c[d] = 1;
    return IntPoly(std::move(c));
  }

  /// Monic with nonzero constant term.
  IntPoly monic_unit_free(int dmin, int dmax, long height) {
    for (;;) {
      IntPoly P = monic(dmin, dmax, height);
      if (P[0] != 0) return P;
    }
  }

  /// Uniform in [0, 2^bits).
  Int bits(unsigned b) {
    Int v = 0;
    for (unsigned done = 0; done < b; done += 32) {
      v <<= 32;
      v += static_cast<unsigned long>(rng_() & 0xffffffffu);
    }
    Int mod = 1;
    mod <<= b;
    return v % mod;
  }

  Rational rational(long num_bound, long den_bound) {
    Rational q(Int(uniform(-num_bound, num_bound)), Int(uniform(1, den_bound)));
    q.canonicalize();
    return q;
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

/// Determinant of an integer matrix by fraction-free (Bareiss) elimination.
inline Int bareiss_det(std::vector<std::vector<Int>> A) {
  const std::size_t n = A.size();
  if (n == 0) return 1;
  Int prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (A[k][k] == 0) {
      std::size_t r = k + 1;
      while (r < n && A[r][k] == 0) ++r;
      if (r == n) return 0;
      std::swap(A[r], A[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        Int v = A[i][j] * A[k][k] - A[i][k] * A[k][j];
        A[i][j] = lehmer::divexact(v, prev);
      }
    prev = A[k][k];
  }
  return sign * A[n - 1][n - 1];
}

/// Res(A, B) as the determinant of the Sylvester matrix.
inline Int sylvester_resultant(const IntPoly& A, const IntPoly& B) {
  const int m = A.degree(), n = B.degree();
  if (m == 0) return lehmer::ipow(A[0], n);
  if (n == 0) return lehmer::ipow(B[0], m);
  const int size = m + n;
  std::vector<std::vector<Int>> S(size, std::vector<Int>(size, Int(0)));
  for (int r = 0; r < n; ++r)
    for (int k = 0; k <= m; ++k) S[r][r + k] = A[m - k];
  for (int r = 0; r < m; ++r)
    for (int k = 0; k <= n; ++k) S[n + r][r + k] = B[n - k];
  return bareiss_det(std::move(S));
}

using IntMatrix = std::vector<std::vector<Int>>;

inline IntMatrix mat_mul(const IntMatrix& X, const IntMatrix& Y) {
  const std::size_t n = X.size();
  IntMatrix Z(n, std::vector<Int>(n, Int(0)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      if (X[i][k] != 0)
        for (std::size_t j = 0; j < n; ++j) Z[i][j] += X[i][k] * Y[k][j];
  return Z;
}

/// Characteristic polynomial det(xI - A) by the Faddeev-LeVerrier recursion.
inline IntPoly charpoly(const IntMatrix& A) {
  const std::size_t n = A.size();
  std::vector<Int> c(n + 1);
  c[n] = 1;
  IntMatrix Mk(n, std::vector<Int>(n, Int(0)));  // M_0 = 0
  for (std::size_t k = 1; k <= n; ++k) {
    // M_k = A M_{k-1} + c_{n-k+1} I
    IntMatrix next = mat_mul(A, Mk);
    for (std::size_t i = 0; i < n; ++i) next[i][i] += c[n - k + 1];
    Mk = std::move(next);
    IntMatrix AM = mat_mul(A, Mk);
    Int tr = 0;
    for (std::size_t i = 0; i < n; ++i) tr += AM[i][i];
    c[n - k] = lehmer::divexact(-tr, Int(static_cast<unsigned long>(k)));
  }
  return IntPoly(std::move(c));
}

/// P_n as the characteristic polynomial of C^n, C the companion matrix of P.
inline IntPoly companion_power_poly(const IntPoly& P, unsigned n) {
  const int d = P.degree();
  IntMatrix C(d, std::vector<Int>(d, Int(0)));
  for (int i = 1; i < d; ++i) C[i][i - 1] = 1;
  for (int i = 0; i < d; ++i) C[i][d - 1] = -P[i];
  IntMatrix R(d, std::vector<Int>(d, Int(0)));
  for (int i = 0; i < d; ++i) R[i][i] = 1;
  for (unsigned k = 0; k < n; ++k) R = mat_mul(R, C);
  return charpoly(R);
}

/// Roots from double-precision companion eigenvalues.
inline std::vector<std::complex<double>> eigen_roots(const IntPoly& P) {
  const int d = P.degree();
  Eigen::MatrixXd C = Eigen::MatrixXd::Zero(d, d);
  const double lead = P.leading().get_d();
  for (int i = 1; i < d; ++i) C(i, i - 1) = 1;
  for (int i = 0; i < d; ++i) C(i, d - 1) = -P[i].get_d() / lead;
  Eigen::EigenSolver<Eigen::MatrixXd> es(C, false);
  std::vector<std::complex<double>> out;
  for (int i = 0; i < d; ++i) out.push_back(es.eigenvalues()(i));
  return out;
}

/// Mahler measure from double-precision eigenvalues.
inline double eigen_measure(const IntPoly& P) {
  double m = std::fabs(P.leading().get_d());
  for (auto z : eigen_roots(P)) m *= std::max(1.0, std::abs(z));
  return m;
}

/// sum_{m | n} mu(n/m) seq[m-1] by direct divisor loop.
inline Int mobius_transform(const std::vector<Int>& seq, unsigned n) {
  auto mu = [](unsigned k) {
    int r = 1;
    for (unsigned p = 2; p * p <= k; ++p)
      if (k % p == 0) {
        k /= p;
        if (k % p == 0) return 0;
        r = -r;
      }
    return k > 1 ? -r : r;
  };
  Int s = 0;
  for (unsigned m = 1; m <= n; ++m)
    if (n % m == 0) s += mu(n / m) * seq[m - 1];
  return s;
}

}  // namespace testing_support
