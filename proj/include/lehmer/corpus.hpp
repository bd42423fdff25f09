#pragma once

// Bounded families of monic integer polynomials, enumerated by degree and
// then lexicographically on the ascending coefficient vector.

#include <cstdint>
#include <vector>

#include "lehmer/poly.hpp"

namespace lehmer {

struct FamilyBounds {
  int min_degree = 1;
  int max_degree = 4;
  long height = 2;               ///< |a_j| <= height for j < d
  bool reciprocal_only = false;  ///< a_j = a_{d-j}; forces a_0 = 1
};

namespace detail {

/// Number of free coefficients for degree d.
inline int free_slots(int d, bool reciprocal) { return reciprocal ? d / 2 : d; }

inline std::uint64_t family_count_degree(int d, const FamilyBounds& b) {
  std::uint64_t c = 1;
  for (int k = 0; k < free_slots(d, b.reciprocal_only); ++k) c *= static_cast<std::uint64_t>(2 * b.height + 1);
  return c;
}

}  // namespace detail

inline std::uint64_t family_size(const FamilyBounds& b) {
  std::uint64_t total = 0;
  for (int d = b.min_degree; d <= b.max_degree; ++d) total += detail::family_count_degree(d, b);
  return total;
}

/// The index-th member in enumeration order.
inline IntPoly family_member(const FamilyBounds& b, std::uint64_t index) {
  for (int d = b.min_degree; d <= b.max_degree; ++d) {
    const std::uint64_t count = detail::family_count_degree(d, b);
    if (index >= count) {
      index -= count;
      continue;
    }
    const int slots = detail::free_slots(d, b.reciprocal_only);
    const std::uint64_t radix = 2 * b.height + 1;
    std::vector<long> digits(slots);
    for (int k = slots - 1; k >= 0; --k) {
      digits[k] = static_cast<long>(index % radix) - b.height;
      index /= radix;
    }
    std::vector<Int> c(d + 1, Int(0));
    c[d] = 1;
    if (b.reciprocal_only) {
      c[0] = 1;
      for (int k = 0; k < slots; ++k) c[k + 1] = c[d - 1 - k] = digits[k];
    } else {
      for (int k = 0; k < d; ++k) c[k] = digits[k];
    }
    return IntPoly(std::move(c));
  }
  throw std::out_of_range("family_member: index past the end");
}

inline std::vector<IntPoly> family(const FamilyBounds& b) {
  std::vector<IntPoly> out;
  const std::uint64_t n = family_size(b);
  out.reserve(n);
  for (std::uint64_t i = 0; i < n; ++i) out.push_back(family_member(b, i));
  return out;
}

/// Monic, degree 2..4, height <= 2.
inline std::vector<IntPoly> standard_corpus() { return family(FamilyBounds{2, 4, 2, false}); }

/// Monic, degree 1..5, height <= 3: the exhaustive congruence family.
inline std::vector<IntPoly> congruence_corpus() { return family(FamilyBounds{1, 5, 3, false}); }

}  // namespace lehmer
