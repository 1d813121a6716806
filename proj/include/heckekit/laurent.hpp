#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdlib>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>

namespace heckekit {

/// Exact arbitrary-precision integer and rational scalars used throughout.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

/// Thrown when exact_div is asked for a quotient that does not exist in
/// Z[v,v^-1].
class NonDivisibleError : public std::runtime_error {
 public:
  explicit NonDivisibleError(const std::string& what)
      : std::runtime_error(what) {}
};

/// An element of Z[v,v^-1], stored as a map exponent -> coefficient.
///
/// Canonical form: no zero coefficient is ever stored, so the zero
/// polynomial is the empty map and equality is plain map equality.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(int c) { set(0, Int(c)); }              // NOLINT(runtime/explicit)
  LaurentPoly(const Int& c) { set(0, c); }            // NOLINT(runtime/explicit)

  /// c * v^e
  static LaurentPoly monomial(const Int& c, int e) {
    LaurentPoly p;
    p.set(e, c);
    return p;
  }

  /// v^e (default the generator v itself)
  static LaurentPoly v(int e = 1) { return monomial(1, e); }

  bool is_zero() const { return coeffs_.empty(); }
  bool is_one() const {
    return coeffs_.size() == 1 && coeffs_.begin()->first == 0 &&
           coeffs_.begin()->second == 1;
  }

  /// True iff the polynomial is +-v^k for some k (a unit of the ring).
  bool is_unit_monomial() const {
    if (coeffs_.size() != 1) return false;
    const Int& c = coeffs_.begin()->second;
    return c == 1 || c == -1;
  }

  const std::map<int, Int>& terms() const { return coeffs_; }

  Int coeff(int e) const {
    auto it = coeffs_.find(e);
    return it == coeffs_.end() ? Int(0) : it->second;
  }

  int min_exp() const { require_nonzero("min_exp"); return coeffs_.begin()->first; }
  int max_exp() const { require_nonzero("max_exp"); return coeffs_.rbegin()->first; }

  LaurentPoly& operator+=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.coeffs_) add(e, c);
    return *this;
  }
  LaurentPoly& operator-=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.coeffs_) add(e, -c);
    return *this;
  }
  LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }
  LaurentPoly& operator*=(const Int& s) {
    if (s == 0) { coeffs_.clear(); return *this; }
    for (auto& [e, c] : coeffs_) c *= s;
    return *this;
  }

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { a += b; return a; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { a -= b; return a; }
  friend LaurentPoly operator-(const LaurentPoly& a) {
    LaurentPoly r;
    for (const auto& [e, c] : a.coeffs_) r.coeffs_[e] = -c;
    return r;
  }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly r;
    for (const auto& [ea, ca] : a.coeffs_)
      for (const auto& [eb, cb] : b.coeffs_) r.add(ea + eb, ca * cb);
    return r;
  }
  friend LaurentPoly operator*(const Int& s, LaurentPoly a) { a *= s; return a; }
  friend LaurentPoly operator*(LaurentPoly a, const Int& s) { a *= s; return a; }

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.coeffs_ == b.coeffs_;
  }
  friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) {
    return !(a == b);
  }
  /// Ordering for use as a container key; no algebraic meaning.
  friend bool operator<(const LaurentPoly& a, const LaurentPoly& b) {
    return a.coeffs_ < b.coeffs_;
  }

  LaurentPoly pow(unsigned k) const {
    LaurentPoly r(1), base = *this;
    while (k) {
      if (k & 1u) r *= base;
      base *= base;
      k >>= 1u;
    }
    return r;
  }

  /// The bar involution v -> v^-1.
  LaurentPoly bar() const {
    LaurentPoly r;
    for (const auto& [e, c] : coeffs_) r.coeffs_[-e] = c;
    return r;
  }

  /// The automorphism psi: v -> -v^-1  (sign flips on odd exponents).
  LaurentPoly psi() const {
    LaurentPoly r;
    for (const auto& [e, c] : coeffs_) r.coeffs_[-e] = (e % 2 != 0) ? Int(-c) : c;
    return r;
  }

  /// Sum of all coefficients, i.e. the specialization v = 1.
  Int eval_at_one() const {
    Int s = 0;
    for (const auto& [e, c] : coeffs_) { (void)e; s += c; }
    return s;
  }

  /// Exact quotient *this / q, or nullopt when q does not divide *this.
  std::optional<LaurentPoly> try_div(const LaurentPoly& q) const {
    if (q.is_zero()) throw std::invalid_argument("LaurentPoly: division by zero");
    if (is_zero()) return LaurentPoly();
    LaurentPoly r = *this, quot;
    const int qdeg = q.max_exp();
    const Int& qlead = q.coeffs_.rbegin()->second;
    // Long division from the top; exponents may be negative throughout.
    while (!r.is_zero() && r.max_exp() - r.min_exp() >= qdeg - q.min_exp()) {
      Int lead = r.coeffs_.rbegin()->second;
      if (lead % qlead != 0) return std::nullopt;
      int shift = r.max_exp() - qdeg;
      Int c = lead / qlead;
      quot.add(shift, c);
      r -= monomial(c, shift) * q;
    }
    if (!r.is_zero()) return std::nullopt;
    return quot;
  }

  /// Exact quotient; throws NonDivisibleError when none exists.
  LaurentPoly exact_div(const LaurentPoly& q) const {
    auto r = try_div(q);
    if (!r) throw NonDivisibleError("LaurentPoly: " + str() + " is not divisible by " + q.str());
    return *r;
  }

  /// Signed monomial list, exponents ascending, e.g. "v^-2 + 1 + v^2 + v^4".
  std::string str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : coeffs_) {
      Int a = c;
      if (first) {
        if (a < 0) { os << "-"; a = -a; }
      } else {
        os << (a < 0 ? " - " : " + ");
        if (a < 0) a = -a;
      }
      if (e == 0) {
        os << a;
      } else {
        if (a != 1) os << a;
        os << "v";
        if (e != 1) os << "^" << e;
      }
      first = false;
    }
    return os.str();
  }

  /// Inverse of str(); accepts exactly the shapes str() produces.
  static LaurentPoly parse(const std::string& text) {
    LaurentPoly out;
    std::size_t i = 0;
    auto skip_ws = [&] { while (i < text.size() && text[i] == ' ') ++i; };
    skip_ws();
    if (i == text.size()) throw std::invalid_argument("LaurentPoly::parse: empty input");
    bool neg = false;
    if (text[i] == '-') { neg = true; ++i; }
    while (true) {
      skip_ws();
      Int coeff = 1;
      bool saw_digits = false;
      std::string digits;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) digits += text[i++];
      if (!digits.empty()) { coeff = Int(digits); saw_digits = true; }
      int exp = 0;
      if (i < text.size() && text[i] == 'v') {
        ++i;
        exp = 1;
        if (i < text.size() && text[i] == '^') {
          ++i;
          bool eneg = false;
          if (i < text.size() && (text[i] == '-' || text[i] == '+')) eneg = (text[i++] == '-');
          std::string ed;
          while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ed += text[i++];
          if (ed.empty()) throw std::invalid_argument("LaurentPoly::parse: bad exponent in '" + text + "'");
          exp = std::atoi(ed.c_str());
          if (eneg) exp = -exp;
        }
      } else if (!saw_digits) {
        throw std::invalid_argument("LaurentPoly::parse: bad monomial in '" + text + "'");
      }
      out.add(exp, neg ? Int(-coeff) : coeff);
      skip_ws();
      if (i == text.size()) break;
      if (text[i] == '+') neg = false;
      else if (text[i] == '-') neg = true;
      else throw std::invalid_argument("LaurentPoly::parse: unexpected '" + std::string(1, text[i]) + "'");
      ++i;
    }
    return out;
  }

 private:
  void set(int e, const Int& c) {
    if (c != 0) coeffs_[e] = c;
  }
  void add(int e, const Int& c) {
    auto it = coeffs_.find(e);
    if (it == coeffs_.end()) {
      if (c != 0) coeffs_.emplace(e, c);
    } else {
      it->second += c;
      if (it->second == 0) coeffs_.erase(it);
    }
  }
  void require_nonzero(const char* who) const {
    if (is_zero()) throw std::logic_error(std::string("LaurentPoly::") + who + " on zero polynomial");
  }

  std::map<int, Int> coeffs_;
};

/// Quantum integer [a] = (v^a - v^-a)/(v - v^-1), computed as the closed
/// geometric sum v^{a-1} + v^{a-3} + ... + v^{1-a}; [0] = 0, [-a] = -[a].
inline LaurentPoly quantum_integer(int a) {
  if (a == 0) return LaurentPoly();
  if (a < 0) return -quantum_integer(-a);
  LaurentPoly r;
  for (int e = a - 1; e >= 1 - a; e -= 2) r += LaurentPoly::v(e);
  return r;
}

/// Quantum binomial [a; n] = [a][a-1]...[a-n+1] / [n]!, built by sequential
/// exact division so the whole computation stays fraction-free.  Every
/// intermediate quotient is itself a quantum binomial, so the divisions are
/// exact; a failure signals a bug rather than bad input.
inline LaurentPoly quantum_binomial(int a, int n) {
  if (n < 0) throw std::invalid_argument("quantum_binomial: n must be >= 0");
  LaurentPoly r(1);
  for (int i = 1; i <= n; ++i) {
    r = (r * quantum_integer(a - i + 1)).exact_div(quantum_integer(i));
  }
  return r;
}

}  // namespace heckekit
