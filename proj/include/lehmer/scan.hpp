#pragma once

// Search a bounded family of monic polynomials for small Mahler measure.

#include <algorithm>
#include <thread>
#include <vector>

#include "lehmer/corpus.hpp"
#include "lehmer/measure.hpp"

namespace lehmer {

struct ScanOptions {
  int max_degree = 10;
  long max_height = 1;
  double threshold = 1.3;
  bool reciprocal_only = false;
  unsigned threads = 1;
  std::uint64_t budget = 50'000'000;  ///< cap on enumerated polynomials
  double precision = 1e-12;           ///< measure half-width
};

struct ScanRecord {
  IntPoly polynomial;
  MeasureResult measure;
  bool reciprocal = false;
  bool cyclotomic = false;
  std::uint64_t index = 0;  ///< position in enumeration order
};

struct ScanReport {
  ScanOptions options;
  std::uint64_t enumerated = 0;
  std::uint64_t pruned = 0;      ///< a_0 = 0 or |a_0| >= threshold
  std::uint64_t cyclotomic = 0;  ///< excluded cyclotomic products
  std::vector<ScanRecord> records;  ///< noncyclotomic, measure upper end < threshold, ascending
  bool smyth_holds = true;          ///< every record with upper end < 1.3247 is reciprocal
  std::vector<IntPoly> smyth_violations;
};

inline constexpr double smyth_constant = 1.3247;

/// Monic polynomials of degree 1..max_degree with coefficients bounded by
/// max_height. Members with a_0 = 0 are skipped, since x Q has the measure
/// of Q, which is enumerated at lower degree.
inline ScanReport scan(const ScanOptions& opt) {
  if (opt.max_degree < 1 || opt.max_height < 0) throw std::domain_error("scan: need max_degree >= 1 and max_height >= 0");
  FamilyBounds bounds{1, opt.max_degree, opt.max_height, opt.reciprocal_only};
  ScanReport rep;
  rep.options = opt;
  rep.enumerated = family_size(bounds);
  if (rep.enumerated > opt.budget)
    throw resource_error("scan: " + std::to_string(rep.enumerated) + " polynomials exceed the budget of " +
                         std::to_string(opt.budget));

  struct Slice {
    std::vector<ScanRecord> records;
    std::uint64_t pruned = 0, cyclotomic = 0;
  };
  const unsigned workers = std::max(1u, opt.threads);
  std::vector<Slice> slices(workers);
  auto work = [&](unsigned w) {
    Slice& s = slices[w];
    for (std::uint64_t i = w; i < rep.enumerated; i += workers) {
      IntPoly P = family_member(bounds, i);
      if (P[0] == 0 || iabs(P[0]) >= opt.threshold) {
        ++s.pruned;
        continue;
      }
      if (is_cyclotomic_product(P).is_product) {
        ++s.cyclotomic;
        continue;
      }
      MeasureResult M = mahler_measure(P, opt.precision);
      if (!(M.upper < opt.threshold)) continue;
      s.records.push_back(ScanRecord{P, M, is_reciprocal(P), false, i});
    }
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work, w);
    for (auto& t : pool) t.join();
  }
  for (auto& s : slices) {
    rep.pruned += s.pruned;
    rep.cyclotomic += s.cyclotomic;
    for (auto& r : s.records) rep.records.push_back(std::move(r));
  }
  std::sort(rep.records.begin(), rep.records.end(), [](const ScanRecord& a, const ScanRecord& b) {
    if (a.measure.upper < b.measure.upper) return true;
    if (b.measure.upper < a.measure.upper) return false;
    return a.index < b.index;
  });
  for (const auto& r : rep.records)
    if (r.measure.upper < smyth_constant && !r.reciprocal) {
      rep.smyth_holds = false;
      rep.smyth_violations.push_back(r.polynomial);
    }
  return rep;
}

}  // namespace lehmer
