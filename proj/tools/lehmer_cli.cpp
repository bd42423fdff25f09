// lehmer: command-line front end to the library.
//
// Exit codes: 0 every verification passed, 1 a verification failed,
// 2 input error, 3 resource cap reached.

#include <CLI11.hpp>

#include <iostream>
#include <string>

#include "lehmer/cyclotomic.hpp"
#include "lehmer/estimates.hpp"
#include "lehmer/genfun.hpp"
#include "lehmer/measure.hpp"
#include "lehmer/report.hpp"
#include "lehmer/scan.hpp"
#include "lehmer/sequences.hpp"

using namespace lehmer;
namespace rep = lehmer::report;

namespace {

enum Exit { ok = 0, verification_failed = 1, input_error = 2, resource_cap = 3 };

struct Options {
  std::string poly;
  std::string q;
  u64 n = 0;
  u64 range = 0;
  std::string precision = "1e-12";
  bool json = false;
  u64 degree_cap = 64;
  unsigned threads = 1;
  std::vector<u64> moduli{2, 3};
  bool g = false;
  std::string points;
  std::vector<unsigned> multiplicities;
  int max_degree = 10;
  long height = 1;
  double threshold = 1.3;
  bool reciprocal = false;
  std::uint64_t budget = 50'000'000;
};

double parse_precision(const std::string& s) {
  std::size_t used = 0;
  double v = 0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    throw parse_error("bad precision '" + s + "'");
  }
  if (used != s.size() || !(v > 0) || !std::isfinite(v)) throw parse_error("precision must be a positive decimal, got '" + s + "'");
  return v;
}

IntPoly require_poly(const Options& o) {
  if (o.poly.empty()) throw parse_error("--poly is required");
  IntPoly P = parse_poly(o.poly);
  if (P.is_zero()) throw parse_error("the zero polynomial is not accepted");
  return P;
}

IntPoly require_monic_poly(const Options& o) {
  IntPoly P = require_poly(o);
  if (!P.is_monic() || P.degree() < 1) throw std::domain_error("P must be monic of degree >= 1");
  return P;
}

Json header(const IntPoly& P) {
  return Json{{"polynomial", to_coeff_string(P)}, {"expression", to_expr_string(P)}, {"degree", P.degree()}};
}

Json cmd_analyze(const Options& o) {
  IntPoly P = require_monic_poly(o);
  const u64 N = o.range ? o.range : 12;
  const double precision = parse_precision(o.precision);
  Json out = header(P);
  MeasureResult M = mahler_measure(P, precision);
  out["measure"] = rep::measure(M);
  out["log_measure"] = Json{{"lower", rep::decimal(log(M.lower))}, {"upper", rep::decimal(log(M.upper))}};
  const bool cyclotomic = is_cyclotomic_product(P).is_product;
  out["reciprocal"] = is_reciprocal(P);
  out["cyclotomic"] = cyclotomic;
  out["squarefree"] = is_squarefree(P);
  bool pass = true;
  if (P.degree() >= 2) {
    DeltaSequence s = delta_seq(P, N);
    Json table = Json::array();
    for (u64 n = 1; n <= N; ++n) {
      Json row{{"n", n}, {"disc", rep::decimal(s.disc(n))}, {"factorization", rep::factorization(s.disc(n))},
               {"delta", rep::decimal(s.delta(n))}};
      row["psi"] = s.psi(n) ? Json(rep::decimal(*s.psi(n))) : Json(nullptr);
      table.push_back(std::move(row));
    }
    out["range"] = Json::array({1, N});
    out["sequence"] = std::move(table);

    GaussReport gc = gauss_check_coefficients(P, N);
    GaussReport gd = gauss_check_delta(P, N);
    SmallDeltaReport sd = small_delta(P, N);
    Json checks{{"gauss_coefficients", gc.pass}, {"gauss_discriminant", gd.pass}, {"delta_divisible_by_n", sd.divisible_by_n},
                {"delta_sign", to_string(sd.sign)}};
    checks["div12_threshold"] = sd.div12_threshold ? Json(*sd.div12_threshold) : Json(nullptr);
    pass = gc.pass && gd.pass && sd.divisible_by_n && sd.sign != SignVerdict::violated;
    if (is_squarefree(P)) {
      EssentialReport er = essential_factors(P, N);
      checks["psi_product_identity"] = er.product_identity;
      checks["psi_squares"] = er.squares;
      pass = pass && er.pass;
      if (!cyclotomic) {
        SandwichReport sw = sandwich_check(P, N);
        Json sandwich{{"hadamard_holds", sw.hadamard_holds}, {"max_growth", rep::decimal(sw.max_growth)},
                      {"threshold", rep::decimal(sw.threshold)}, {"exceeded", sw.exceeded}};
        sandwich["first_exceeding"] = sw.first_exceeding ? Json(*sw.first_exceeding) : Json(nullptr);
        out["sandwich"] = std::move(sandwich);
        pass = pass && sw.hadamard_holds;
      }
    }
    out["checks"] = std::move(checks);
  }
  out["pass"] = pass;
  return out;
}

Json cmd_gauss(const Options& o) {
  IntPoly P = require_monic_poly(o);
  const u64 N = o.range ? o.range : (o.n ? o.n : 24);
  Json reports = Json::array();
  bool pass = true;
  auto add = [&](const GaussReport& r) {
    pass = pass && r.pass;
    reports.push_back(rep::gauss(r));
  };
  add(gauss_check_coefficients(P, N));
  if (P.degree() >= 2) add(gauss_check_delta(P, N));
  if (!o.q.empty()) add(gauss_check_resultant(P, parse_poly(o.q), N));
  std::vector<u64> primes;
  for (u64 p : primes_up_to(N)) primes.push_back(p);
  if (!primes.empty()) add(dobrowolski_check(P, primes));
  Json out = header(P);
  out["reports"] = std::move(reports);
  out["pass"] = pass;
  return out;
}

Json cmd_u(const Options& o) {
  IntPoly P = require_monic_poly(o);
  if (o.n < 2) throw parse_error("--n must be at least 2");
  const u64 n = o.n;
  UOptions uopt{o.degree_cap};
  Json out = header(P);
  UDivisibility div = u_divisibility_check(P, n, uopt);
  out["n"] = n;
  out["U"] = rep::decimal(div.U);
  out["factorization"] = rep::factorization(div.U);
  if (P.eval(1) == 0) out["note"] = "P(1) = 0, so every P_m has the root 1 and U(n) = 0";
  out["exponent"] = std::to_string(div.exponent);
  Json checks = Json::array();
  checks.push_back(Json{{"check", "n^(d^r) | U(n)"}, {"divisor", rep::decimal(div.main.divisor)}, {"pass", div.main.pass}});
  for (const auto& [m, c] : div.coprime)
    if (m != n)
      checks.push_back(Json{{"check", std::to_string(m) + "^(d^r) | U(n)"}, {"divisor", rep::decimal(c.divisor)}, {"pass", c.pass}});
  A0Divisibility a0 = a0_power_divisibility(P, n, uopt);
  checks.push_back(Json{{"check", "a0 power"}, {"divisor", "a0^" + rep::decimal(a0.exponent)}, {"pass", a0.pass}});
  UBound ub = u_upper_bound_check(P, n, uopt);
  checks.push_back(Json{{"check", "log|U(n)| <= upper bound"}, {"divisor", rep::decimal(ub.log_rhs, 12)}, {"pass", ub.pass}});
  out["checks"] = std::move(checks);
  bool pass = div.pass && a0.pass && ub.pass;

  Json small = Json::array();
  for (u64 k : o.moduli) {
    SmallPrimeDivisibility sp = u_small_prime_divisibility(P, k, n, uopt);
    Json row{{"k", k}};
    row["group_exponent"] = sp.group_exponent ? Json(rep::decimal(*sp.group_exponent)) : Json(nullptr);
    row["k^d"] = std::string(to_string(sp.full)) + (sp.full == Applicability::applies ? (sp.full_pass ? ": pass" : ": fail") : "");
    row["k | U"] = std::string(to_string(sp.partial)) + (sp.partial == Applicability::applies ? (sp.partial_pass ? ": pass" : ": fail") : "");
    row["P(1) | U"] = std::string(to_string(sp.at_one)) + (sp.at_one == Applicability::applies ? (sp.at_one_pass ? ": pass" : ": fail") : "");
    small.push_back(std::move(row));
    pass = pass && sp.pass;
  }
  out["small_moduli"] = std::move(small);

  if (divisor_table(n).distinct_primes <= 2 && is_squarefree(P)) {
    PartitionReport pr = u_partition_factors(P, n, 1e-30, uopt);
    Json parts = Json::array();
    for (const auto& f : pr.factors) {
      std::string label;
      for (const auto& b : f.partition.blocks) {
        label += "{";
        for (std::size_t i = 0; i < b.size(); ++i) label += (i ? "," : "") + std::to_string(b[i]);
        label += "}";
      }
      parts.push_back(Json{{"partition", label}, {"value", rep::decimal(f.value)}});
    }
    out["partitions"] = std::move(parts);
    out["partition_product_matches"] = pr.product_matches;
    pass = pass && pr.product_matches;
  }
  out["pass"] = pass;
  return out;
}

Json cmd_genfun(const Options& o) {
  IntPoly P = require_monic_poly(o);
  Json out = header(P);
  if (o.g) {
    RationalFn g = quadratic_g(P);
    out["g"] = rep::rational_fn(g);
    const u64 N = o.range ? o.range : 24;
    auto t = taylor(g, N);
    std::vector<Int> b(t.begin() + 1, t.end());
    auto w = gauss_property_witness(b, N);
    out["gauss_witness"] = w ? Json(*w) : Json(nullptr);
    out["pass"] = true;
    return out;
  }
  DeltaGenerating gen = rational_fn_of_delta(P, o.n);
  out["f"] = rep::rational_fn(gen.f);
  out["order"] = gen.order;
  out["terms"] = gen.terms;
  out["verified_through"] = gen.verified_through;
  MintonDecomposition dec = minton_decompose(gen.f);
  out["minton"] = rep::minton(dec);
  const u64 order = o.range ? o.range : 16;
  ProductIdentity pi = product_identity_check(P, order, dec);
  out["product_identity"] = Json{{"order", order}, {"pass", pi.pass}};
  out["pass"] = pi.pass;
  return out;
}

Json cmd_vandermonde(const Options& o) {
  Json out;
  bool pass = true;
  if (!o.points.empty()) {
    ConfluentSpec spec = parse_confluent_spec(o.points);
    ConfluentOptions copt;
    copt.size_cap = static_cast<unsigned>(std::min<u64>(o.degree_cap, 1000));
    ConfluentReport r = confluent_vandermonde(spec, copt);
    out["n"] = r.n;
    out["exact"] = r.exact;
    if (r.exact) {
      out["determinant"] = r.determinant.get_str();
      out["closed_form"] = r.closed_form.get_str();
    } else {
      auto enc = [](const ComplexEnclosure& e) {
        return Json{{"re", e.re}, {"im", e.im}, {"radius", rep::error_bound(e.radius)}};
      };
      out["determinant"] = enc(r.determinant_ball);
      out["closed_form"] = enc(r.closed_form_ball);
      out["precision_bits"] = r.precision_bits;
    }
    out["equal"] = r.equal;
    pass = r.equal;
  }
  if (!o.multiplicities.empty()) {
    SymbolicConfluent s = confluent_symbolic_check(o.multiplicities);
    out["symbolic"] = Json{{"n", s.n}, {"terms", s.terms}, {"equal", s.equal}};
    pass = pass && s.equal;
  }
  if (out.empty()) throw parse_error("give --points and/or --multiplicities");
  out["pass"] = pass;
  return out;
}

Json cmd_scan(const Options& o) {
  ScanOptions s;
  s.max_degree = o.max_degree;
  s.max_height = o.height;
  s.threshold = o.threshold;
  s.reciprocal_only = o.reciprocal;
  s.threads = o.threads;
  s.budget = o.budget;
  s.precision = parse_precision(o.precision);
  ScanReport r = scan(s);
  Json out = rep::scan(r);
  out["pass"] = r.smyth_holds;
  return out;
}

Json cmd_estimate(const Options& o) {
  IntPoly P = require_monic_poly(o);
  const u64 N = o.range ? o.range : 24;
  Json out = header(P);
  LimsupDeltaEstimate e = limsup_delta_estimate(P, N);
  Json est{{"N", N}, {"E", rep::decimal(e.E)}, {"T", rep::decimal(e.T)}, {"T_lower", rep::decimal(e.T_lower)},
           {"T_upper", rep::decimal(e.T_upper)}, {"ratio", rep::decimal(e.ratio)}, {"product_bound_holds", e.bound_holds}};
  bool pass = e.bound_holds;
  if (e.chain_lower) {
    est["chain_lower"] = rep::decimal(*e.chain_lower);
    est["chain_holds"] = e.chain_holds;
    pass = pass && e.chain_holds;
  }
  out["delta_growth"] = std::move(est);
  if (!is_cyclotomic_product(P).is_product) {
    SandwichReport sw = sandwich_check(P, N);
    Json sandwich{{"measure", rep::measure(sw.M)}, {"hadamard_holds", sw.hadamard_holds},
                  {"max_growth", rep::decimal(sw.max_growth)}, {"threshold", rep::decimal(sw.threshold)},
                  {"exceeded", sw.exceeded}};
    sandwich["first_exceeding"] = sw.first_exceeding ? Json(*sw.first_exceeding) : Json(nullptr);
    out["sandwich"] = std::move(sandwich);
    pass = pass && sw.hadamard_holds;
  }
  if (!o.q.empty()) {
    LimsupResultantEstimate r = limsup_resultant_estimate(P, parse_poly(o.q), N);
    out["resultant_growth"] = Json{{"q", o.q}, {"E", rep::decimal(r.E)}, {"target", rep::decimal(r.target)},
                                   {"ratio", rep::decimal(r.ratio)}};
  }
  out["pass"] = pass;
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Integer sequences attached to a monic integer polynomial"};
  app.require_subcommand(1);
  Options o;

  auto add_common = [&](CLI::App* c) {
    c->add_flag("--json", o.json, "emit JSON");
  };
  auto add_poly = [&](CLI::App* c) {
    c->add_option("--poly", o.poly, "ascending coefficients \"1,-3,1\" or an expression \"x^2-3x+1\"")->required();
  };

  auto* analyze = app.add_subcommand("analyze", "measure, discriminant table and verdicts");
  add_poly(analyze);
  analyze->add_option("--range", o.range, "table length N (default 12)");
  analyze->add_option("--precision", o.precision, "measure half-width");
  add_common(analyze);

  auto* gauss = app.add_subcommand("gauss", "Gauss congruences for coefficients, discriminants and resultants");
  add_poly(gauss);
  gauss->add_option("--range,--n", o.range, "last index N (default 24)");
  gauss->add_option("--q", o.q, "second polynomial for Res(P_n, Q)");
  add_common(gauss);

  auto* u = app.add_subcommand("u", "U(n) with its divisibility checks and partition factors");
  add_poly(u);
  u->add_option("--n", o.n, "index n >= 2")->required();
  u->add_option("--degree-cap", o.degree_cap, "largest allowed degree d^r");
  u->add_option("--moduli", o.moduli, "small moduli k for the k-divisibility checks")->delimiter(',');
  add_common(u);

  auto* genfun = app.add_subcommand("genfun", "rational generating function of Delta(P_n) and its decomposition");
  add_poly(genfun);
  genfun->add_option("--n", o.n, "terms used to find the recurrence (default from the degree)");
  genfun->add_option("--range", o.range, "product identity order (default 16)");
  genfun->add_flag("--g", o.g, "quadratic b_n generating function instead");
  add_common(genfun);

  auto* vdm = app.add_subcommand("vandermonde", "confluent Vandermonde determinant against the product formula");
  vdm->add_option("--points", o.points, "points \"x:m;y;a+bi:k\" with rational coordinates");
  vdm->add_option("--multiplicities", o.multiplicities, "symbolic check for these multiplicities")->delimiter(',');
  vdm->add_option("--degree-cap", o.degree_cap, "largest allowed matrix size");
  add_common(vdm);

  auto* sc = app.add_subcommand("scan", "search monic polynomials of bounded height for small measure");
  sc->add_option("--max-degree", o.max_degree, "largest degree");
  sc->add_option("--height", o.height, "coefficient bound");
  sc->add_option("--threshold", o.threshold, "report measures below this");
  sc->add_flag("--reciprocal", o.reciprocal, "reciprocal polynomials only");
  sc->add_option("--threads", o.threads, "worker threads");
  sc->add_option("--budget", o.budget, "cap on enumerated polynomials");
  sc->add_option("--precision", o.precision, "measure half-width");
  add_common(sc);

  auto* est = app.add_subcommand("estimate", "finite-N growth bounds for Delta(P_n) and Res(P_n, Q)");
  add_poly(est);
  est->add_option("--range,--n", o.range, "N (default 24)");
  est->add_option("--q", o.q, "second polynomial for Res(P_n, Q)");
  add_common(est);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return input_error;
  }

  Json out;
  try {
    if (*analyze) out = cmd_analyze(o);
    else if (*gauss) out = cmd_gauss(o);
    else if (*u) out = cmd_u(o);
    else if (*genfun) out = cmd_genfun(o);
    else if (*vdm) out = cmd_vandermonde(o);
    else if (*sc) out = cmd_scan(o);
    else out = cmd_estimate(o);
  } catch (const resource_error& e) {
    std::cerr << "resource cap: " << e.what() << "\n";
    return resource_cap;
  } catch (const consistency_error& e) {
    std::cerr << "verification failed: " << e.what() << "\n";
    if (*genfun) std::cerr << "pass a larger --n to use more terms\n";
    return verification_failed;
  } catch (const decomposition_error& e) {
    std::cerr << "verification failed: " << e.what() << "\n";
    return verification_failed;
  } catch (const std::exception& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return input_error;
  }

  if (o.json)
    std::cout << out.dump(2) << "\n";
  else
    std::cout << rep::plain_text(out);
  return out["pass"].get<bool>() ? ok : verification_failed;
}
