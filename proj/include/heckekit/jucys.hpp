#pragma once

#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "heckekit/laurent.hpp"
#include "heckekit/matrix.hpp"
#include "heckekit/permutations.hpp"

namespace heckekit {

/// Prime field F_p with runtime modulus.
class Zmod {
 public:
  Zmod(long long p, long long value) : p_(p) {
    if (p < 2) throw std::invalid_argument("Zmod: modulus must be >= 2");
    a_ = value % p;
    if (a_ < 0) a_ += p;
  }

  long long modulus() const { return p_; }
  long long value() const { return a_; }
  bool is_zero() const { return a_ == 0; }

  friend Zmod operator+(const Zmod& x, const Zmod& y) { x.check(y); return Zmod(x.p_, x.a_ + y.a_); }
  friend Zmod operator-(const Zmod& x, const Zmod& y) { x.check(y); return Zmod(x.p_, x.a_ - y.a_); }
  friend Zmod operator*(const Zmod& x, const Zmod& y) { x.check(y); return Zmod(x.p_, x.a_ * y.a_); }
  friend Zmod operator/(const Zmod& x, const Zmod& y) {
    x.check(y);
    if (y.is_zero()) throw std::invalid_argument("Zmod: division by zero");
    return x * y.inverse();
  }
  Zmod operator-() const { return Zmod(p_, -a_); }
  Zmod& operator+=(const Zmod& y) { return *this = *this + y; }
  Zmod& operator-=(const Zmod& y) { return *this = *this - y; }
  Zmod& operator*=(const Zmod& y) { return *this = *this * y; }

  Zmod inverse() const {
    // extended Euclid; p is prime in all uses
    long long t = 0, newt = 1, r = p_, newr = a_;
    while (newr != 0) {
      long long q = r / newr;
      long long tmp = t - q * newt;
      t = newt;
      newt = tmp;
      tmp = r - q * newr;
      r = newr;
      newr = tmp;
    }
    if (r != 1) throw std::invalid_argument("Zmod: not invertible");
    return Zmod(p_, t);
  }

  friend bool operator==(const Zmod& x, const Zmod& y) { return x.p_ == y.p_ && x.a_ == y.a_; }
  friend bool operator!=(const Zmod& x, const Zmod& y) { return !(x == y); }

 private:
  void check(const Zmod& y) const {
    if (p_ != y.p_) throw std::invalid_argument("Zmod: modulus mismatch");
  }
  long long p_, a_;
};

inline bool is_prime(long long p) {
  if (p < 2) return false;
  for (long long d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

/// Element of F[S_n] for a field F (Rat or Zmod); sparse, canonical.
template <class F>
class GroupAlgebraElt {
 public:
  explicit GroupAlgebraElt(int n) : n_(n) {}

  static GroupAlgebraElt basis(const Permutation& w, const F& c) {
    GroupAlgebraElt a(w.size());
    a.add_term(w, c);
    return a;
  }

  int group_size() const { return n_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<Permutation, F>& terms() const { return terms_; }

  void add_term(const Permutation& w, const F& c) {
    if (detail::entry_is_zero(c)) return;
    auto it = terms_.find(w);
    if (it == terms_.end()) {
      terms_.emplace(w, c);
    } else {
      it->second += c;
      if (detail::entry_is_zero(it->second)) terms_.erase(it);
    }
  }

  GroupAlgebraElt& operator+=(const GroupAlgebraElt& o) {
    for (const auto& [w, c] : o.terms_) add_term(w, c);
    return *this;
  }
  GroupAlgebraElt& operator-=(const GroupAlgebraElt& o) {
    for (const auto& [w, c] : o.terms_) add_term(w, -c);
    return *this;
  }
  friend GroupAlgebraElt operator+(GroupAlgebraElt a, const GroupAlgebraElt& b) { a += b; return a; }
  friend GroupAlgebraElt operator-(GroupAlgebraElt a, const GroupAlgebraElt& b) { a -= b; return a; }
  friend GroupAlgebraElt operator*(const GroupAlgebraElt& a, const GroupAlgebraElt& b) {
    if (a.n_ != b.n_) throw std::invalid_argument("GroupAlgebraElt: size mismatch");
    GroupAlgebraElt out(a.n_);
    for (const auto& [u, cu] : a.terms_)
      for (const auto& [w, cw] : b.terms_) out.add_term(u * w, cu * cw);
    return out;
  }
  friend bool operator==(const GroupAlgebraElt& a, const GroupAlgebraElt& b) {
    return a.n_ == b.n_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const GroupAlgebraElt& a, const GroupAlgebraElt& b) { return !(a == b); }

 private:
  int n_;
  std::map<Permutation, F> terms_;
};

/// Jucys-Murphy element x_k = (1,k) + (2,k) + ... + (k-1,k); x_1 = 0.
template <class F>
GroupAlgebraElt<F> jucys_murphy(int k, int n, const F& one) {
  if (k < 1 || k > n) throw std::invalid_argument("jucys_murphy: k out of range");
  GroupAlgebraElt<F> x(n);
  for (int i = 1; i < k; ++i) x.add_term(Permutation::transposition(n, i, k), one);
  return x;
}

/// Pairwise commutativity of the x_k, and centrality of the elementary
/// symmetric polynomials e_1, e_2 in them (checked against every generator;
/// full symmetric-polynomial centrality follows since e_1, e_2, ... generate).
template <class F>
bool verify_jm_center(int n, const F& one) {
  std::vector<GroupAlgebraElt<F>> x;
  for (int k = 1; k <= n; ++k) x.push_back(jucys_murphy(k, n, one));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (x[i] * x[j] != x[j] * x[i]) return false;
  GroupAlgebraElt<F> e1(n), e2(n);
  for (int i = 0; i < n; ++i) {
    e1 += x[i];
    for (int j = i + 1; j < n; ++j) e2 += x[i] * x[j];
  }
  for (int g = 1; g < n; ++g) {
    auto s = GroupAlgebraElt<F>::basis(Permutation::simple(n, g), one);
    if (e1 * s != s * e1 || e2 * s != s * e2) return false;
  }
  return true;
}

/// Degenerate affine Hecke relations with T_i -> s_i and X_k -> x_k inside
/// the group algebra: T_i^2 = 1, braid and far commutation for the T's,
/// commuting X's, X_{i+1} T_i = T_i X_i + 1, and X_i T_j = T_j X_i whenever
/// i - j is neither 0 nor 1.
template <class F>
bool verify_daha(int n, const F& one) {
  auto unit = GroupAlgebraElt<F>::basis(Permutation::identity(n), one);
  std::vector<GroupAlgebraElt<F>> T(1, unit), X(1, GroupAlgebraElt<F>(n));  // 1-based below
  for (int i = 1; i < n; ++i) T.push_back(GroupAlgebraElt<F>::basis(Permutation::simple(n, i), one));
  for (int k = 1; k <= n; ++k) X.push_back(jucys_murphy(k, n, one));
  for (int i = 1; i < n; ++i) {
    if (T[i] * T[i] != unit) return false;
    for (int j = i + 1; j < n; ++j) {
      if (j - i > 1 && T[i] * T[j] != T[j] * T[i]) return false;
      if (j - i == 1 && T[i] * T[j] * T[i] != T[j] * T[i] * T[j]) return false;
    }
  }
  for (int i = 1; i <= n; ++i)
    for (int k = i + 1; k <= n; ++k)
      if (X[i] * X[k] != X[k] * X[i]) return false;
  for (int i = 1; i < n; ++i)
    if (X[i + 1] * T[i] != T[i] * X[i] + unit) return false;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j < n; ++j) {
      if (i - j == 0 || i - j == 1) continue;
      if (X[i] * T[j] != T[j] * X[i]) return false;
    }
  return true;
}

/// A simultaneous generalized eigenspace of the Jucys-Murphy action:
/// content vector (canonical residue/integer entries) plus a basis of the
/// subspace, as columns in regular-module coordinates.
template <class F>
struct JMLeaf {
  std::vector<int> content;
  Matrix<F> basis;  // n! rows, dim(subspace) columns
  std::size_t dim() const { return basis.empty() ? 0 : basis[0].size(); }
};

template <class F>
struct JMDecomposition {
  int n = 0;
  long long p = 0;  // 0 means rationals
  std::vector<Permutation> module_basis;
  std::vector<JMLeaf<F>> leaves;
};

namespace detail {

/// Left-multiplication matrix of a group element on F[S_n].
template <class F>
Matrix<F> left_mult_matrix(const std::vector<Permutation>& basis, const Permutation& g,
                           const F& zero, const F& one) {
  std::map<Permutation, std::size_t> index;
  for (std::size_t i = 0; i < basis.size(); ++i) index.emplace(basis[i], i);
  Matrix<F> m = zero_matrix(basis.size(), basis.size(), zero);
  for (std::size_t j = 0; j < basis.size(); ++j) m[index.at(g * basis[j])][j] = one;
  return m;
}

template <class F>
Matrix<F> jm_matrix(const std::vector<Permutation>& basis, int k, int n, const F& zero, const F& one) {
  Matrix<F> m = zero_matrix(basis.size(), basis.size(), zero);
  for (int i = 1; i < k; ++i) {
    auto t = left_mult_matrix(basis, Permutation::transposition(n, i, k), zero, one);
    m = mat_add(m, t);
  }
  return m;
}

/// Matrix of the restriction of op to the column span of basis; throws if
/// the subspace is not invariant.
template <class F>
Matrix<F> restrict_operator(const Matrix<F>& op, const Matrix<F>& basis, const F& zero) {
  const std::size_t dim = basis.empty() ? 0 : basis[0].size();
  Matrix<F> a = zero_matrix(dim, dim, zero);
  for (std::size_t j = 0; j < dim; ++j) {
    std::vector<F> col(basis.size(), zero);
    for (std::size_t r = 0; r < basis.size(); ++r) col[r] = basis[r][j];
    auto image = mat_apply(op, col);
    auto sol = solve_linear(basis, image, zero);
    if (!sol) throw std::logic_error("restrict_operator: subspace not invariant");
    for (std::size_t i = 0; i < dim; ++i) a[i][j] = (*sol)[i];
  }
  return a;
}

template <class F>
Matrix<F> mat_pow(Matrix<F> a, std::size_t e, const F& zero, const F& one) {
  Matrix<F> r = identity_matrix(a.size(), zero, one);
  while (e) {
    if (e & 1u) r = mat_mul(r, a);
    a = mat_mul(a, a);
    e >>= 1u;
  }
  return r;
}

}  // namespace detail

/// Simultaneous generalized eigenspace decomposition of F[S_n] under the
/// Jucys-Murphy elements.  The space is split one x_k at a time: inside
/// each current subspace the restricted operator's generalized eigenspace
/// for eigenvalue c is ker (A - c)^dim, with the exponent capped by the
/// subspace dimension (<= n!).
template <class F>
JMDecomposition<F> jm_decompose(int n, long long p, const F& zero, const F& one,
                                const std::vector<F>& candidates, const std::vector<int>& labels) {
  JMDecomposition<F> out;
  out.n = n;
  out.p = p;
  out.module_basis = symmetric_group(n);
  const std::size_t N = out.module_basis.size();
  out.leaves.push_back({{}, identity_matrix(N, zero, one)});
  for (int k = 1; k <= n; ++k) {
    auto mk = detail::jm_matrix(out.module_basis, k, n, zero, one);
    std::vector<JMLeaf<F>> next;
    for (const auto& leaf : out.leaves) {
      auto a = detail::restrict_operator(mk, leaf.basis, zero);
      std::size_t found = 0;
      for (std::size_t ci = 0; ci < candidates.size(); ++ci) {
        Matrix<F> shifted = a;
        for (std::size_t i = 0; i < shifted.size(); ++i) shifted[i][i] -= candidates[ci];
        auto power = detail::mat_pow(shifted, leaf.dim(), zero, one);
        auto ker = kernel_basis(power, zero, one);
        if (ker.empty()) continue;
        JMLeaf<F> child;
        child.content = leaf.content;
        child.content.push_back(labels[ci]);
        child.basis = zero_matrix(N, ker.size(), zero);
        for (std::size_t j = 0; j < ker.size(); ++j)
          for (std::size_t r = 0; r < N; ++r) {
            F acc = zero;
            for (std::size_t t = 0; t < leaf.dim(); ++t) acc += leaf.basis[r][t] * ker[j][t];
            child.basis[r][j] = acc;
          }
        found += ker.size();
        next.push_back(std::move(child));
      }
      if (found != leaf.dim())
        throw std::logic_error("jm_decompose: generalized eigenspaces do not fill the space");
    }
    out.leaves = std::move(next);
  }
  return out;
}

inline JMDecomposition<Zmod> jm_decompose_modular(int n, long long p) {
  if (!is_prime(p)) throw std::invalid_argument("jm_decompose_modular: p must be prime");
  std::vector<Zmod> candidates;
  std::vector<int> labels;
  for (long long c = 0; c < p; ++c) { candidates.emplace_back(p, c); labels.push_back(static_cast<int>(c)); }
  return jm_decompose(n, p, Zmod(p, 0), Zmod(p, 1), candidates, labels);
}

inline JMDecomposition<Rat> jm_decompose_rational(int n) {
  std::vector<Rat> candidates;
  std::vector<int> labels;
  for (int c = -(n - 1); c <= n - 1; ++c) { candidates.emplace_back(c); labels.push_back(c); }
  return jm_decompose(n, 0, Rat(0), Rat(1), candidates, labels);
}

/// Block weights: gamma_r = #{ j : i_j = r }, as a length-p vector.
inline std::vector<int> weight_of_content(const std::vector<int>& content, long long p) {
  std::vector<int> gamma(static_cast<std::size_t>(p), 0);
  for (int c : content) ++gamma[static_cast<std::size_t>(c)];
  return gamma;
}

/// Block dimensions over F_p, keyed by gamma; dimensions sum to n!.
inline std::map<std::vector<int>, Int> block_dimensions(const JMDecomposition<Zmod>& dec) {
  std::map<std::vector<int>, Int> out;
  for (const auto& leaf : dec.leaves) out[weight_of_content(leaf.content, dec.p)] += leaf.dim();
  return out;
}

/// Every M(gamma) must be stable under the whole group action; checked by
/// applying each generator matrix to a basis of M(gamma).
template <class F>
bool verify_block_invariance(const JMDecomposition<F>& dec, const F& zero, const F& one,
                             long long p_for_weights) {
  std::map<std::vector<int>, std::vector<std::size_t>> groups;
  for (std::size_t i = 0; i < dec.leaves.size(); ++i) {
    std::vector<int> gamma = p_for_weights > 0 ? weight_of_content(dec.leaves[i].content, p_for_weights)
                                               : [&] {
                                                   auto c = dec.leaves[i].content;
                                                   std::sort(c.begin(), c.end());
                                                   return c;
                                                 }();
    groups[gamma].push_back(i);
  }
  const std::size_t N = dec.module_basis.size();
  for (const auto& [gamma, idxs] : groups) {
    (void)gamma;
    std::size_t dim = 0;
    for (auto i : idxs) dim += dec.leaves[i].dim();
    Matrix<F> basis = zero_matrix(N, dim, zero);
    std::size_t col = 0;
    for (auto i : idxs)
      for (std::size_t j = 0; j < dec.leaves[i].dim(); ++j, ++col)
        for (std::size_t r = 0; r < N; ++r) basis[r][col] = dec.leaves[i].basis[r][j];
    for (int g = 1; g < dec.n; ++g) {
      auto s = detail::left_mult_matrix(dec.module_basis, Permutation::simple(dec.n, g), zero, one);
      for (std::size_t j = 0; j < dim; ++j) {
        std::vector<F> v(N, zero);
        for (std::size_t r = 0; r < N; ++r) v[r] = basis[r][j];
        auto image = mat_apply(s, v);
        if (!solve_linear(basis, image, zero)) return false;
      }
    }
  }
  return true;
}

/// Formal character: multiset of content vectors with multiplicities.
struct FormalCharacter {
  long long p = 0;  // 0 = rationals
  int n = 0;
  std::map<std::vector<int>, Int> weights;

  Int total() const {
    Int t = 0;
    for (const auto& [c, m] : weights) { (void)c; t += m; }
    return t;
  }
};

template <class F>
FormalCharacter formal_character(const JMDecomposition<F>& dec) {
  FormalCharacter ch;
  ch.p = dec.p;
  ch.n = dec.n;
  for (const auto& leaf : dec.leaves)
    if (leaf.dim() > 0) ch.weights[leaf.content] += leaf.dim();
  return ch;
}

/// Character of E_i: keep the weights whose last coordinate is i, drop it.
inline FormalCharacter restrict_character(const FormalCharacter& ch, int i) {
  if (ch.n < 1) return FormalCharacter{ch.p, 0, {}};
  FormalCharacter out;
  out.p = ch.p;
  out.n = ch.n - 1;
  for (const auto& [content, mult] : ch.weights) {
    if (content.empty() || content.back() != i) continue;
    std::vector<int> rest(content.begin(), content.end() - 1);
    out.weights[rest] += mult;
  }
  return out;
}

/// Character of F_i: append the residue i to every weight.
inline FormalCharacter induce_character(const FormalCharacter& ch, int i) {
  FormalCharacter out;
  out.p = ch.p;
  out.n = ch.n + 1;
  for (const auto& [content, mult] : ch.weights) {
    std::vector<int> ext = content;
    ext.push_back(i);
    out.weights[ext] += mult;
  }
  return out;
}

}  // namespace heckekit
