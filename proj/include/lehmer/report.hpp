#pragma once

// JSON serialization of reports. Every number that is not a small count is
// written as a decimal string so reports compare byte for byte.

#include <cstdio>
#include <cstdlib>
#include <sstream>
#include <string>

#include <json.hpp>

#include "lehmer/estimates.hpp"
#include "lehmer/factorize.hpp"
#include "lehmer/genfun.hpp"
#include "lehmer/measure.hpp"
#include "lehmer/scan.hpp"
#include "lehmer/sequences.hpp"

namespace lehmer {

using Json = nlohmann::ordered_json;

namespace report {

inline std::string decimal(const Int& v) { return to_string(v); }

inline std::string decimal(const Real& v, int digits = 20) { return v.to_string(digits); }

/// Shortest of 15 or 17 significant digits that reads back as v.
inline std::string decimal(double v) {
  if (std::isinf(v)) return v < 0 ? "-inf" : "inf";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.15g", v);
  if (std::strtod(buf, nullptr) != v) std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

/// Rounded up so the printed error never understates the enclosure.
inline std::string error_bound(double e) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3e", std::nextafter(e, HUGE_VAL));
  return buf;
}

/// {sign, factors: [[p, e], ...], cofactor, complete}; null for zero.
inline Json factorization(const Int& v, const FactorBudget& budget = {}) {
  if (v == 0) return nullptr;
  Factorization f = factorize(v, budget);
  Json pe = Json::array();
  for (const auto& p : f.factors) pe.push_back(Json::array({decimal(p.prime), std::to_string(p.exponent)}));
  return Json{{"sign", f.sign < 0 ? "-1" : "1"}, {"factors", pe}, {"cofactor", decimal(f.cofactor)},
              {"complete", f.complete()}};
}

inline Json measure(const MeasureResult& M) {
  return Json{{"value", decimal(M.value())},
              {"error", error_bound(M.error())},
              {"lower", decimal(M.lower)},
              {"upper", decimal(M.upper)},
              {"method", M.method == MeasureMethod::roots ? "roots" : "graeffe"}};
}

inline Json gauss(const GaussReport& r, bool with_factorizations = true) {
  Json records = Json::array();
  for (const auto& rec : r.records) {
    Json j{{"n", rec.n}};
    if (rec.index >= 0) j["index"] = rec.index;
    j["value"] = decimal(rec.lhs);
    if (with_factorizations) j["factorization"] = factorization(rec.lhs);
    j["verdict"] = rec.pass ? "pass" : "fail";
    records.push_back(std::move(j));
  }
  Json out{{"polynomial", to_coeff_string(r.P)}, {"family", r.family}};
  if (r.Q) out["q"] = to_coeff_string(*r.Q);
  out["range"] = Json::array({r.first, r.last});
  out["records"] = std::move(records);
  out["pass"] = r.pass;
  return out;
}

inline Json rational_fn(const RationalFn& F) {
  return Json{{"num", to_coeff_string(F.num)}, {"den", to_coeff_string(F.den)}};
}

inline Json minton(const MintonDecomposition& dec) {
  Json out = Json::array();
  for (const auto& t : dec.terms) {
    Json j{{"u", to_coeff_string(t.u)}, {"c", decimal(t.c)}};
    if (!t.irreducible) j["irreducible"] = false;
    out.push_back(std::move(j));
  }
  return out;
}

inline Json scan_record(const ScanRecord& r) {
  return Json{{"polynomial", to_coeff_string(r.polynomial)},
              {"measure", measure(r.measure)},
              {"reciprocal", r.reciprocal},
              {"cyclotomic", r.cyclotomic}};
}

inline Json scan(const ScanReport& r) {
  Json records = Json::array();
  for (const auto& rec : r.records) records.push_back(scan_record(rec));
  Json viol = Json::array();
  for (const auto& p : r.smyth_violations) viol.push_back(to_coeff_string(p));
  return Json{{"max_degree", r.options.max_degree},
              {"max_height", r.options.max_height},
              {"threshold", decimal(r.options.threshold)},
              {"reciprocal_only", r.options.reciprocal_only},
              {"enumerated", r.enumerated},
              {"pruned", r.pruned},
              {"cyclotomic_excluded", r.cyclotomic},
              {"records", std::move(records)},
              {"smyth_holds", r.smyth_holds},
              {"smyth_violations", std::move(viol)}};
}

// ---------------------------------------------------------------------------
// aligned plain text

namespace detail {

inline std::string scalar_text(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_null()) return "-";
  if (v.is_boolean()) return v.get<bool>() ? "yes" : "no";
  if (v.is_object() && v.contains("factors")) {
    // factorization: sign p^e * ...
    std::string s = v["sign"] == "-1" ? "-" : "";
    bool first = true;
    for (const auto& pe : v["factors"]) {
      if (!first) s += "*";
      s += pe[0].get<std::string>();
      if (pe[1] != "1") s += "^" + pe[1].get<std::string>();
      first = false;
    }
    if (v["cofactor"] != "1") s += (first ? "" : "*") + ("[" + v["cofactor"].get<std::string>() + "]");
    if (first && v["cofactor"] == "1") s += "1";
    return s;
  }
  if (v.is_array() && std::all_of(v.begin(), v.end(), [](const Json& e) { return e.is_primitive(); })) {
    std::string s = "[";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + scalar_text(v[i]);
    return s + "]";
  }
  return v.dump();
}

inline bool is_scalar_like(const Json& v) {
  if (v.is_primitive()) return true;
  if (v.is_object() && v.contains("factors")) return true;
  return v.is_array() && std::all_of(v.begin(), v.end(), [](const Json& e) { return e.is_primitive(); });
}

inline bool is_table(const Json& v) {
  if (!v.is_array() || v.empty()) return false;
  for (const auto& row : v) {
    if (!row.is_object()) return false;
    for (const auto& [k, cell] : row.items())
      if (!is_scalar_like(cell)) return false;
  }
  return true;
}

inline void render(const Json& v, std::ostringstream& os, const std::string& indent) {
  std::size_t width = 0;
  for (const auto& [k, _] : v.items()) width = std::max(width, k.size());
  for (const auto& [k, item] : v.items()) {
    if (is_scalar_like(item)) {
      os << indent << k << std::string(width - k.size(), ' ') << "  " << scalar_text(item) << "\n";
    } else if (is_table(item)) {
      os << indent << k << ":\n";
      std::vector<std::string> cols;
      for (const auto& row : item)
        for (const auto& [c, _] : row.items())
          if (std::find(cols.begin(), cols.end(), c) == cols.end()) cols.push_back(c);
      std::vector<std::size_t> w(cols.size());
      for (std::size_t i = 0; i < cols.size(); ++i) w[i] = cols[i].size();
      std::vector<std::vector<std::string>> cells;
      for (const auto& row : item) {
        std::vector<std::string> line;
        for (std::size_t i = 0; i < cols.size(); ++i) {
          line.push_back(row.contains(cols[i]) ? scalar_text(row[cols[i]]) : "");
          w[i] = std::max(w[i], line.back().size());
        }
        cells.push_back(std::move(line));
      }
      auto emit = [&](const std::vector<std::string>& line) {
        os << indent << "  ";
        for (std::size_t i = 0; i < line.size(); ++i)
          os << line[i] << (i + 1 < line.size() ? std::string(w[i] - line[i].size() + 2, ' ') : "");
        os << "\n";
      };
      emit(cols);
      for (const auto& line : cells) emit(line);
    } else if (item.is_object()) {
      os << indent << k << ":\n";
      render(item, os, indent + "  ");
    } else if (item.is_array()) {
      os << indent << k << ":\n";
      for (std::size_t i = 0; i < item.size(); ++i) {
        os << indent << "  [" << i << "]\n";
        if (item[i].is_object())
          render(item[i], os, indent + "    ");
        else
          os << indent << "    " << scalar_text(item[i]) << "\n";
      }
    }
  }
}

}  // namespace detail

/// Objects as aligned key/value lines; arrays of flat objects as tables.
inline std::string plain_text(const Json& v) {
  std::ostringstream os;
  if (v.is_object())
    detail::render(v, os, "");
  else
    os << detail::scalar_text(v) << "\n";
  return os.str();
}

}  // namespace report
}  // namespace lehmer
