#pragma once

#include <algorithm>
#include <cctype>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "lehmer/bigint.hpp"

namespace lehmer {

/// Dense univariate polynomial over Z, coefficients in ascending order.
///
/// The stored vector never has a zero leading entry, so the zero polynomial
/// is the empty vector. `degree()` refuses the zero polynomial.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<Int> c) : c_(std::move(c)) { trim(); }
  IntPoly(std::initializer_list<long> c) {
    for (long v : c) c_.emplace_back(v);
    trim();
  }

  static IntPoly constant(const Int& v) { return IntPoly(std::vector<Int>{v}); }
  static IntPoly monomial(const Int& coef, std::size_t k) {
    std::vector<Int> c(k + 1);
    c[k] = coef;
    return IntPoly(std::move(c));
  }
  static IntPoly x() { return monomial(1, 1); }

  bool is_zero() const { return c_.empty(); }
  int degree() const {
    if (c_.empty()) throw std::domain_error("degree of the zero polynomial");
    return static_cast<int>(c_.size()) - 1;
  }
  std::size_t size() const { return c_.size(); }

  /// Coefficient of x^k; zero beyond the degree.
  const Int& operator[](std::size_t k) const { return k < c_.size() ? c_[k] : zero(); }
  const Int& leading() const {
    if (c_.empty()) throw std::domain_error("leading coefficient of the zero polynomial");
    return c_.back();
  }
  bool is_monic() const { return !c_.empty() && c_.back() == 1; }
  const std::vector<Int>& coeffs() const { return c_; }

  Int eval(const Int& x) const {
    Int r = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
    return r;
  }

  IntPoly operator-() const {
    IntPoly r = *this;
    for (auto& v : r.c_) v = -v;
    return r;
  }
  IntPoly& operator+=(const IntPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }
  IntPoly& operator-=(const IntPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
  }
  IntPoly& operator*=(const Int& s) {
    if (s == 0) c_.clear();
    for (auto& v : c_) v *= s;
    return *this;
  }
  friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
  friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
  friend IntPoly operator*(IntPoly a, const Int& s) { return a *= s; }
  friend IntPoly operator*(const Int& s, IntPoly a) { return a *= s; }
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Int> r(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i] == 0) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j)
        mpz_addmul(r[i + j].get_mpz_t(), a.c_[i].get_mpz_t(), b.c_[j].get_mpz_t());
    }
    return IntPoly(std::move(r));
  }
  IntPoly& operator*=(const IntPoly& o) { return *this = *this * o; }
  friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.c_ == b.c_; }

 private:
  static const Int& zero() {
    static const Int z = 0;
    return z;
  }
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<Int> c_;
};

inline IntPoly derivative(const IntPoly& p) {
  if (p.size() <= 1) return {};
  std::vector<Int> c(p.size() - 1);
  for (std::size_t i = 1; i < p.size(); ++i) c[i - 1] = p[i] * static_cast<unsigned long>(i);
  return IntPoly(std::move(c));
}

inline Int content(const IntPoly& p) {
  Int g = 0;
  for (const auto& v : p.coeffs()) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
  return g;
}

/// Content removed, leading coefficient made positive.
inline IntPoly primitive_part(const IntPoly& p) {
  if (p.is_zero()) return p;
  Int g = content(p);
  if (p.leading() < 0) g = -g;
  std::vector<Int> c = p.coeffs();
  for (auto& v : c) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
  return IntPoly(std::move(c));
}

/// lc(b)^(deg a - deg b + 1) * a = q*b + r with deg r < deg b.
inline IntPoly pseudo_remainder(const IntPoly& a, const IntPoly& b) {
  if (b.is_zero()) throw std::domain_error("pseudo_remainder by zero");
  if (a.is_zero() || a.degree() < b.degree()) return a;
  std::vector<Int> r = a.coeffs();
  const int db = b.degree();
  const Int& lb = b.leading();
  int delta = a.degree() - db + 1;
  for (int k = a.degree(); k >= db; --k) {
    Int f = r[k];
    for (int i = 0; i < k; ++i) r[i] *= lb;
    r[k] = 0;
    if (f != 0)
      for (int i = 0; i < db; ++i) mpz_submul(r[k - db + i].get_mpz_t(), f.get_mpz_t(), b[i].get_mpz_t());
    --delta;
  }
  // leftover power of lb so that the multiplier is exactly lb^(da-db+1)
  Int extra = ipow(lb, static_cast<unsigned long>(delta));
  r.resize(db);
  for (auto& v : r) v *= extra;
  return IntPoly(std::move(r));
}

/// Exact division over Z; nullopt when b does not divide a in Z[x].
inline std::optional<IntPoly> exact_quotient(const IntPoly& a, const IntPoly& b) {
  if (b.is_zero()) throw std::domain_error("division by the zero polynomial");
  if (a.is_zero()) return IntPoly{};
  if (a.degree() < b.degree()) return std::nullopt;
  std::vector<Int> r = a.coeffs();
  const int db = b.degree();
  std::vector<Int> q(a.degree() - db + 1);
  for (int k = a.degree(); k >= db; --k) {
    if (r[k] == 0) continue;
    if (!divides(b.leading(), r[k])) return std::nullopt;
    Int f = divexact(r[k], b.leading());
    q[k - db] = f;
    for (int i = 0; i <= db; ++i) mpz_submul(r[k - db + i].get_mpz_t(), f.get_mpz_t(), b[i].get_mpz_t());
  }
  for (int i = 0; i < db; ++i)
    if (r[i] != 0) return std::nullopt;
  return IntPoly(std::move(q));
}

/// Primitive gcd with positive leading coefficient (primitive remainder sequence).
inline IntPoly gcd(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero()) return primitive_part(b);
  if (b.is_zero()) return primitive_part(a);
  Int cg;
  mpz_gcd(cg.get_mpz_t(), content(a).get_mpz_t(), content(b).get_mpz_t());
  IntPoly u = primitive_part(a), v = primitive_part(b);
  if (u.degree() < v.degree()) std::swap(u, v);
  while (!v.is_zero()) {
    IntPoly r = pseudo_remainder(u, v);
    u = std::move(v);
    v = primitive_part(r);
  }
  return primitive_part(u) * cg;
}

/// Yun's algorithm: pairs (f_i, i) with p = c * prod f_i^i, each f_i primitive squarefree.
inline std::vector<std::pair<IntPoly, unsigned>> squarefree_factorization(const IntPoly& p) {
  if (p.is_zero()) throw std::domain_error("squarefree_factorization of zero");
  std::vector<std::pair<IntPoly, unsigned>> out;
  IntPoly f = primitive_part(p);
  if (f.degree() == 0) return out;
  IntPoly fd = derivative(f);
  IntPoly a = gcd(f, fd);
  IntPoly b = *exact_quotient(f, a);
  IntPoly c = *exact_quotient(fd, a);
  IntPoly d = c - derivative(b);
  unsigned i = 1;
  while (b.degree() > 0) {
    IntPoly g = gcd(b, d);
    IntPoly bn = *exact_quotient(b, g);
    if (g.degree() > 0) out.emplace_back(g, i);
    c = *exact_quotient(d, g);
    b = std::move(bn);
    d = c - derivative(b);
    ++i;
  }
  return out;
}

inline bool is_squarefree(const IntPoly& p) {
  if (p.is_zero()) throw std::domain_error("is_squarefree of zero");
  if (p.degree() <= 1) return true;
  return gcd(p, derivative(p)).degree() == 0;
}

inline IntPoly squarefree_part(const IntPoly& p) {
  IntPoly r = IntPoly::constant(1);
  for (auto& [f, m] : squarefree_factorization(p)) r *= f;
  return r;
}

/// x^deg * p(1/x).
inline IntPoly reversal(const IntPoly& p) {
  std::vector<Int> c = p.coeffs();
  std::reverse(c.begin(), c.end());
  return IntPoly(std::move(c));
}

/// p(-x).
inline IntPoly negate_variable(const IntPoly& p) {
  std::vector<Int> c = p.coeffs();
  for (std::size_t i = 1; i < c.size(); i += 2) c[i] = -c[i];
  return IntPoly(std::move(c));
}

/// Coefficient list, ascending, comma separated: x^2-3x+1 -> "1,-3,1".
inline std::string to_coeff_string(const IntPoly& p) {
  if (p.is_zero()) return "0";
  std::string s;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) s += ',';
    s += to_string(p[i]);
  }
  return s;
}

/// Human-readable form, descending: "x^2 - 3x + 1".
inline std::string to_expr_string(const IntPoly& p) {
  if (p.is_zero()) return "0";
  std::string s;
  for (int k = p.degree(); k >= 0; --k) {
    Int c = p[k];
    if (c == 0) continue;
    bool neg = c < 0;
    Int a = neg ? Int(-c) : c;
    if (s.empty())
      s += neg ? "-" : "";
    else
      s += neg ? " - " : " + ";
    if (a != 1 || k == 0) s += to_string(a);
    if (k >= 1) s += 'x';
    if (k >= 2) s += '^' + std::to_string(k);
  }
  return s;
}

inline std::ostream& operator<<(std::ostream& os, const IntPoly& p) { return os << to_expr_string(p); }

namespace detail {

inline IntPoly parse_expression(const std::string& text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  if (s.empty()) throw parse_error("empty polynomial");
  std::vector<Int> c;
  std::size_t i = 0;
  auto digits = [&](std::size_t& j) {
    std::size_t st = j;
    while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
    return s.substr(st, j - st);
  };
  while (i < s.size()) {
    int sign = 1;
    if (s[i] == '+' || s[i] == '-') {
      sign = s[i] == '-' ? -1 : 1;
      ++i;
    } else if (i != 0) {
      throw parse_error("expected '+' or '-' at position " + std::to_string(i) + " in '" + text + "'");
    }
    std::string num = digits(i);
    Int coef = num.empty() ? Int(1) : Int(num);
    std::size_t power = 0;
    if (i < s.size() && s[i] == '*') {
      if (num.empty()) throw parse_error("dangling '*' in '" + text + "'");
      ++i;
    }
    if (i < s.size() && s[i] == 'x') {
      ++i;
      power = 1;
      if (i < s.size() && s[i] == '^') {
        ++i;
        std::string e = digits(i);
        if (e.empty()) throw parse_error("missing exponent in '" + text + "'");
        power = std::stoul(e);
      }
    } else if (num.empty()) {
      throw parse_error("expected a term at position " + std::to_string(i) + " in '" + text + "'");
    }
    if (c.size() <= power) c.resize(power + 1);
    c[power] += sign * coef;
  }
  return IntPoly(std::move(c));
}

inline IntPoly parse_coeff_list(const std::string& text) {
  std::vector<Int> c;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::string t;
    for (char ch : item)
      if (!std::isspace(static_cast<unsigned char>(ch))) t += ch;
    c.push_back(parse_int(t));
  }
  if (c.empty()) throw parse_error("empty coefficient list");
  return IntPoly(std::move(c));
}

}  // namespace detail

/// Accepts either an ascending coefficient list ("1,-3,1") or an
/// expression in x ("x^2-3x+1", "2*x^3 - x + 5").
inline IntPoly parse_poly(const std::string& text) {
  if (text.find('x') != std::string::npos) return detail::parse_expression(text);
  return detail::parse_coeff_list(text);
}

}  // namespace lehmer
