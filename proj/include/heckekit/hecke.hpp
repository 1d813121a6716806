#pragma once

#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "heckekit/laurent.hpp"
#include "heckekit/permutations.hpp"

namespace heckekit {

/// Element of the Hecke algebra H_n in the standard basis {H_x}: a finite
/// formal sum of permutations with LaurentPoly coefficients.  Zero
/// coefficients are never stored.
class HeckeElt {
 public:
  explicit HeckeElt(int n) : n_(n) {
    if (n < 1) throw std::invalid_argument("HeckeElt: n must be >= 1");
  }

  static HeckeElt basis(const Permutation& w, LaurentPoly c = LaurentPoly(1)) {
    HeckeElt a(w.size());
    a.add_term(w, std::move(c));
    return a;
  }
  static HeckeElt unit(int n) { return basis(Permutation::identity(n)); }

  int group_size() const { return n_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<Permutation, LaurentPoly>& terms() const { return terms_; }

  LaurentPoly coeff(const Permutation& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? LaurentPoly() : it->second;
  }

  /// tau: the coefficient of H_e.
  LaurentPoly tau() const { return coeff(Permutation::identity(n_)); }

  void add_term(const Permutation& w, const LaurentPoly& c) {
    if (w.size() != n_) throw std::invalid_argument("HeckeElt: permutation size mismatch");
    if (c.is_zero()) return;
    auto it = terms_.find(w);
    if (it == terms_.end()) {
      terms_.emplace(w, c);
    } else {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  HeckeElt& operator+=(const HeckeElt& o) {
    check_same(o);
    for (const auto& [w, c] : o.terms_) add_term(w, c);
    return *this;
  }
  HeckeElt& operator-=(const HeckeElt& o) {
    check_same(o);
    for (const auto& [w, c] : o.terms_) add_term(w, -c);
    return *this;
  }
  HeckeElt& operator*=(const LaurentPoly& s) {
    if (s.is_zero()) { terms_.clear(); return *this; }
    for (auto& [w, c] : terms_) c *= s;
    return *this;
  }

  friend HeckeElt operator+(HeckeElt a, const HeckeElt& b) { a += b; return a; }
  friend HeckeElt operator-(HeckeElt a, const HeckeElt& b) { a -= b; return a; }
  friend HeckeElt operator*(HeckeElt a, const LaurentPoly& s) { a *= s; return a; }
  friend HeckeElt operator*(const LaurentPoly& s, HeckeElt a) { a *= s; return a; }

  /// Standard-basis product.  H_x H_y is computed by peeling a reduced word
  /// of y one generator at a time: H_x H_s = H_{xs} when xs > x, and
  /// H_{xs} + (v^-1 - v) H_x otherwise.
  friend HeckeElt operator*(const HeckeElt& a, const HeckeElt& b) {
    a.check_same(b);
    HeckeElt out(a.n_);
    const LaurentPoly corr = LaurentPoly::v(-1) - LaurentPoly::v(1);
    for (const auto& [y, cy] : b.terms_) {
      auto word = y.reduced_word();
      HeckeElt cur(a.n_);
      for (const auto& [x, cx] : a.terms_) cur.add_term(x, cx * cy);
      for (int i : word) {
        HeckeElt next(a.n_);
        Permutation s = Permutation::simple(a.n_, i);
        for (const auto& [z, c] : cur.terms_) {
          Permutation zs = z * s;
          if (zs.length() > z.length()) {
            next.add_term(zs, c);
          } else {
            next.add_term(zs, c);
            next.add_term(z, c * corr);
          }
        }
        cur = std::move(next);
      }
      out += cur;
    }
    return out;
  }

  friend bool operator==(const HeckeElt& a, const HeckeElt& b) {
    return a.n_ == b.n_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const HeckeElt& a, const HeckeElt& b) { return !(a == b); }

  /// Specialization v = 1, landing in the group algebra Z[S_n].
  std::map<Permutation, Int> specialize_v1() const {
    std::map<Permutation, Int> out;
    for (const auto& [w, c] : terms_) {
      Int s = c.eval_at_one();
      if (s != 0) out.emplace(w, s);
    }
    return out;
  }

  std::string str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& w : by_length_lex_keys()) {
      const LaurentPoly& c = terms_.at(w);
      if (!first) os << " + ";
      os << "(" << c.str() << ")H" << w.str();
      first = false;
    }
    return os.str();
  }

 private:
  std::vector<Permutation> by_length_lex_keys() const {
    std::vector<Permutation> ks;
    ks.reserve(terms_.size());
    for (const auto& [w, c] : terms_) { (void)c; ks.push_back(w); }
    return by_length_lex(std::move(ks));
  }
  void check_same(const HeckeElt& o) const {
    if (n_ != o.n_) throw std::invalid_argument("HeckeElt: size mismatch");
  }

  int n_;
  std::map<Permutation, LaurentPoly> terms_;
};

/// The bar involution: the ring automorphism with v -> v^-1 and
/// H_s -> H_s^-1 = H_s + (v - v^-1) H_e, evaluated on H_x via a reduced word.
inline HeckeElt bar(const HeckeElt& a) {
  const int n = a.group_size();
  std::map<Permutation, HeckeElt> cache;
  const LaurentPoly vmvi = LaurentPoly::v(1) - LaurentPoly::v(-1);
  auto bar_basis = [&](auto&& self, const Permutation& x) -> const HeckeElt& {
    auto it = cache.find(x);
    if (it != cache.end()) return it->second;
    HeckeElt r(n);
    if (x.is_identity()) {
      r = HeckeElt::unit(n);
    } else {
      int i = x.right_descents().front();
      Permutation s = Permutation::simple(n, i);
      HeckeElt bar_s = HeckeElt::basis(s);
      bar_s.add_term(Permutation::identity(n), vmvi);
      r = self(self, x * s) * bar_s;
    }
    return cache.emplace(x, std::move(r)).first->second;
  };
  HeckeElt out(n);
  for (const auto& [x, c] : a.terms()) {
    HeckeElt t = bar_basis(bar_basis, x);
    t *= c.bar();
    out += t;
  }
  return out;
}

/// Thrown when the dual-basis linear system cannot be solved with unit
/// pivots; the tau-pairing is unimodular, so this signals a bug.
class SingularSystemError : public std::runtime_error {
 public:
  explicit SingularSystemError(const std::string& what) : std::runtime_error(what) {}
};

/// Kazhdan-Lusztig data for S_n: the elements KL_x, the
/// polynomials h_{y,x}, the mu-function, and (on demand) the dual basis.
///
/// Built by length induction on generator products:
/// for xs > x,  KL_{xs} = KL_x KL_s
///              - sum_{y <= x, ys < y} mu(y,x) KL_y.
/// The descent s is the smallest-index right descent of the target; by
/// uniqueness of the bar-invariant basis, any choice gives the same result
/// (bar-invariance is covered by the test suite).
class KLTable {
 public:
  explicit KLTable(int n) : n_(n) {
    if (n < 1) throw std::invalid_argument("KLTable: n must be >= 1");
    elements_ = by_length_lex(symmetric_group(n));
    for (const auto& x : elements_) {
      if (x.is_identity()) {
        kl_.emplace(x, HeckeElt::unit(n_));
        continue;
      }
      int i = x.right_descents().front();
      Permutation s = Permutation::simple(n_, i);
      Permutation xp = x * s;  // xp s = x with length increasing
      HeckeElt kl_s = HeckeElt::basis(s);
      kl_s.add_term(Permutation::identity(n_), LaurentPoly::v(1));
      HeckeElt elt = kl_.at(xp) * kl_s;
      for (const auto& [y, hy] : kl_.at(xp).terms()) {
        (void)hy;
        if (y == xp) continue;
        Int m = mu_from(kl_.at(xp), y);
        if (m == 0) continue;
        Permutation ys = y * s;
        if (ys.length() < y.length()) elt -= kl_.at(y) * LaurentPoly(m);
      }
      validate_kl(x, elt);
      kl_.emplace(x, std::move(elt));
    }
  }

  /// Rebuild a table from serialized KL elements (e.g. a cache file); the
  /// basis invariants are revalidated, so a corrupt cache is rejected.
  static KLTable from_precomputed(int n, std::map<Permutation, HeckeElt> kl) {
    KLTable t(n, private_tag{});
    t.elements_ = by_length_lex(symmetric_group(n));
    if (kl.size() != t.elements_.size())
      throw std::invalid_argument("KLTable::from_precomputed: wrong number of rows");
    for (const auto& x : t.elements_) {
      auto it = kl.find(x);
      if (it == kl.end()) throw std::invalid_argument("KLTable::from_precomputed: missing row " + x.str());
      t.validate_kl(x, it->second);
    }
    t.kl_ = std::move(kl);
    return t;
  }

  int n() const { return n_; }

  /// Elements of S_n sorted by (length, one-line lex); the canonical row order.
  const std::vector<Permutation>& elements() const { return elements_; }

  const HeckeElt& kl_elt(const Permutation& x) const { return kl_.at(x); }

  /// h_{y,x}: coefficient of H_y in KL_x.
  LaurentPoly h(const Permutation& y, const Permutation& x) const {
    return kl_.at(x).coeff(y);
  }

  /// mu(y,x): the coefficient of v in h_{y,x} (0 when y = x).
  Int mu(const Permutation& y, const Permutation& x) const {
    if (y == x) return 0;
    return mu_from(kl_.at(x), y);
  }

  /// Expand an element in the KL basis; returns permutation -> coefficient.
  std::map<Permutation, LaurentPoly> kl_expand(HeckeElt a) const {
    std::map<Permutation, LaurentPoly> out;
    while (!a.is_zero()) {
      // Strip a term of maximal length; kl_elt(w) = H_w + lower terms.
      const Permutation* wmax = nullptr;
      int lmax = -1;
      for (const auto& [w, c] : a.terms()) {
        (void)c;
        int l = w.length();
        if (l > lmax) { lmax = l; wmax = &w; }
      }
      Permutation w = *wmax;
      LaurentPoly c = a.coeff(w);
      a -= kl_.at(w) * c;
      out.emplace(std::move(w), std::move(c));
    }
    return out;
  }

  /// Structure constants: KL_x KL_y in the KL basis.
  std::map<Permutation, LaurentPoly> kl_multiply(const Permutation& x, const Permutation& y) const {
    return kl_expand(kl_.at(x) * kl_.at(y));
  }

  /// Dual KL basis KLdual_x, defined by
  /// tau(KLdual_x KL_{y^-1}) = delta_{x,y}.  The
  /// pairing matrix is computed honestly (no closed form assumed) and the
  /// linear system is solved by sparse elimination over Z[v,v^-1] with unit
  /// monomial pivots.  Built lazily on first call; call it once before
  /// sharing the table across threads.
  const std::map<Permutation, HeckeElt>& dual_table() const {
    if (!dual_.empty()) return dual_;
    const std::size_t N = elements_.size();
    std::map<Permutation, int> index;
    for (std::size_t i = 0; i < N; ++i) index.emplace(elements_[i], static_cast<int>(i));

    // tau-functionals: F_z[w] = tau(H_z H_w), built by peeling a reduced
    // word of z from the left.
    const LaurentPoly corr = LaurentPoly::v(-1) - LaurentPoly::v(1);
    std::vector<std::map<int, LaurentPoly>> tau_fn(N);
    for (std::size_t zi = 0; zi < N; ++zi) {
      std::map<Permutation, LaurentPoly> F;
      F.emplace(Permutation::identity(n_), LaurentPoly(1));
      for (int i : elements_[zi].reduced_word()) {
        Permutation s = Permutation::simple(n_, i);
        std::map<Permutation, LaurentPoly> G;
        for (const auto& [k, c] : F) {
          Permutation sk = s * k;
          auto add = [&G](const Permutation& w, const LaurentPoly& c2) {
            auto it = G.find(w);
            if (it == G.end()) G.emplace(w, c2);
            else { it->second += c2; if (it->second.is_zero()) G.erase(it); }
          };
          add(sk, c);
          if (sk.length() < k.length()) add(k, c * corr);
        }
        F = std::move(G);
      }
      for (const auto& [w, c] : F) tau_fn[zi].emplace(index.at(w), c);
    }

    // Pairing Q[z][y] = tau(H_z KL_{y^-1}).
    std::vector<std::map<int, LaurentPoly>> rows(N), aug(N);
    for (std::size_t zi = 0; zi < N; ++zi) {
      aug[zi].emplace(static_cast<int>(zi), LaurentPoly(1));
      for (std::size_t yi = 0; yi < N; ++yi) {
        const HeckeElt& b = kl_.at(elements_[yi].inverse());
        LaurentPoly q;
        for (const auto& [wi, c] : tau_fn[zi]) q += c * b.coeff(elements_[wi]);
        if (!q.is_zero()) rows[zi].emplace(static_cast<int>(yi), std::move(q));
      }
    }

    // Sparse Gauss-Jordan with unit monomial pivots; [Q | I] -> [I | Q^-1].
    std::vector<std::set<int>> col_rows(N);
    for (std::size_t r = 0; r < N; ++r)
      for (const auto& [j, c] : rows[r]) { (void)c; col_rows[j].insert(static_cast<int>(r)); }
    std::vector<bool> used(N, false);
    std::vector<int> pivot_row(N, -1);
    auto set_entry = [&](std::size_t r, int j, LaurentPoly val) {
      auto it = rows[r].find(j);
      if (val.is_zero()) {
        if (it != rows[r].end()) { rows[r].erase(it); col_rows[j].erase(static_cast<int>(r)); }
      } else if (it == rows[r].end()) {
        rows[r].emplace(j, std::move(val));
        col_rows[j].insert(static_cast<int>(r));
      } else {
        it->second = std::move(val);
      }
    };
    for (std::size_t j = 0; j < N; ++j) {
      int piv = -1;
      for (int r : col_rows[j]) {
        if (!used[r] && rows[r].at(static_cast<int>(j)).is_unit_monomial()) { piv = r; break; }
      }
      if (piv < 0) throw SingularSystemError("dual_table: no unit pivot in column " + std::to_string(j));
      used[piv] = true;
      pivot_row[j] = piv;
      // Normalize the pivot row: entry is +-v^k, multiply by its inverse.
      LaurentPoly p = rows[piv].at(static_cast<int>(j));
      Int sign = p.terms().begin()->second;
      LaurentPoly inv = LaurentPoly::monomial(sign, -p.terms().begin()->first);  // (+-v^k)^-1
      if (!(p * inv).is_one()) throw SingularSystemError("dual_table: pivot normalization failed");
      if (!inv.is_one()) {
        for (auto& [c2, val] : rows[piv]) { (void)c2; val *= inv; }
        for (auto& [c2, val] : aug[piv]) { (void)c2; val *= inv; }
      }
      // Eliminate column j everywhere else.
      std::vector<int> touched(col_rows[j].begin(), col_rows[j].end());
      for (int r : touched) {
        if (r == piv) continue;
        LaurentPoly f = rows[r].at(static_cast<int>(j));
        for (const auto& [c2, val] : rows[piv]) set_entry(r, c2, rows[r].count(c2) ? rows[r].at(c2) - f * val : -(f * val));
        for (const auto& [c2, val] : aug[piv]) {
          auto it = aug[r].find(c2);
          if (it == aug[r].end()) {
            LaurentPoly nv = -(f * val);
            if (!nv.is_zero()) aug[r].emplace(c2, std::move(nv));
          } else {
            it->second -= f * val;
            if (it->second.is_zero()) aug[r].erase(it);
          }
        }
      }
    }

    for (std::size_t x = 0; x < N; ++x) {
      HeckeElt d(n_);
      for (const auto& [zi, c] : aug[pivot_row[x]]) d.add_term(elements_[zi], c);
      dual_.emplace(elements_[x], std::move(d));
    }

    // Post-hoc delta check against honest Hecke multiplication (cheap sizes
    // only; the full sweep lives in the test suite).
    if (n_ <= 3) {
      for (const auto& x : elements_)
        for (const auto& y : elements_) {
          LaurentPoly t = (dual_.at(x) * kl_.at(y.inverse())).tau();
          bool expect_one = (x == y);
          if ((expect_one && !t.is_one()) || (!expect_one && !t.is_zero()))
            throw SingularSystemError("dual_table: delta property failed");
        }
    }
    return dual_;
  }

 private:
  struct private_tag {};
  KLTable(int n, private_tag) : n_(n) {}

  static Int mu_from(const HeckeElt& kl_x, const Permutation& y) {
    return kl_x.coeff(y).coeff(1);
  }

  void validate_kl(const Permutation& x, const HeckeElt& elt) const {
    for (const auto& [y, hy] : elt.terms()) {
      if (y == x) {
        if (!hy.is_one()) throw std::logic_error("KLTable: h_{x,x} != 1");
      } else {
        if (hy.min_exp() < 1) throw std::logic_error("KLTable: h_{y,x} not in vZ[v]");
        if (!bruhat_leq(y, x)) throw std::logic_error("KLTable: support above x in Bruhat order");
      }
    }
  }

  int n_;
  std::vector<Permutation> elements_;
  std::map<Permutation, HeckeElt> kl_;
  mutable std::map<Permutation, HeckeElt> dual_;
};

}  // namespace heckekit
