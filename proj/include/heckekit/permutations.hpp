#pragma once

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "heckekit/laurent.hpp"

namespace heckekit {

/// An element of S_n in one-line notation: images[i] = w(i+1), values 1..n.
class Permutation {
 public:
  explicit Permutation(std::vector<int> images) : img_(std::move(images)) {
    std::vector<bool> seen(img_.size(), false);
    for (int x : img_) {
      if (x < 1 || x > static_cast<int>(img_.size()) || seen[x - 1])
        throw std::invalid_argument("Permutation: not a bijection of {1..n}");
      seen[x - 1] = true;
    }
  }

  static Permutation identity(int n) {
    std::vector<int> v(n);
    std::iota(v.begin(), v.end(), 1);
    return Permutation(std::move(v));
  }

  /// Simple reflection s_i = (i, i+1), 1 <= i <= n-1.
  static Permutation simple(int n, int i) {
    if (i < 1 || i >= n) throw std::invalid_argument("Permutation::simple: index out of range");
    auto w = identity(n);
    std::swap(w.img_[i - 1], w.img_[i]);
    return w;
  }

  /// Transposition (a, b).
  static Permutation transposition(int n, int a, int b) {
    if (a < 1 || b < 1 || a > n || b > n || a == b)
      throw std::invalid_argument("Permutation::transposition: bad indices");
    auto w = identity(n);
    std::swap(w.img_[a - 1], w.img_[b - 1]);
    return w;
  }

  int size() const { return static_cast<int>(img_.size()); }
  int operator()(int i) const { return img_.at(i - 1); }
  const std::vector<int>& images() const { return img_; }

  bool is_identity() const {
    for (int i = 1; i <= size(); ++i)
      if (img_[i - 1] != i) return false;
    return true;
  }

  /// Function composition: (a*b)(i) = a(b(i)).
  Permutation compose(const Permutation& b) const {
    check_same_n(b);
    std::vector<int> v(img_.size());
    for (int i = 1; i <= size(); ++i) v[i - 1] = img_[b(i) - 1];
    return Permutation(std::move(v));
  }

  Permutation inverse() const {
    std::vector<int> v(img_.size());
    for (int i = 1; i <= size(); ++i) v[img_[i - 1] - 1] = i;
    return Permutation(std::move(v));
  }

  /// Coxeter length = number of inversions.
  int length() const {
    int inv = 0;
    for (int i = 0; i < size(); ++i)
      for (int j = i + 1; j < size(); ++j)
        if (img_[i] > img_[j]) ++inv;
    return inv;
  }

  /// Indices i with w(i) > w(i+1), i.e. l(w s_i) < l(w).
  std::vector<int> right_descents() const {
    std::vector<int> d;
    for (int i = 1; i < size(); ++i)
      if (img_[i - 1] > img_[i]) d.push_back(i);
    return d;
  }

  /// Indices i with l(s_i w) < l(w), i.e. i appears after i+1 in one-line form.
  std::vector<int> left_descents() const {
    std::vector<int> pos(size() + 1);
    for (int i = 1; i <= size(); ++i) pos[img_[i - 1]] = i;
    std::vector<int> d;
    for (int i = 1; i < size(); ++i)
      if (pos[i] > pos[i + 1]) d.push_back(i);
    return d;
  }

  /// The lexicographically smallest reduced word, as generator indices whose
  /// ordered product (left to right) equals this permutation.  Built by
  /// repeatedly stripping the smallest left descent.
  std::vector<int> reduced_word() const {
    std::vector<int> word;
    Permutation w = *this;
    while (!w.is_identity()) {
      auto d = w.left_descents();
      int i = d.front();
      word.push_back(i);
      w = simple(w.size(), i).compose(w);
    }
    return word;
  }

  std::string str() const {
    std::ostringstream os;
    os << "[";
    for (int i = 0; i < size(); ++i) os << (i ? "," : "") << img_[i];
    os << "]";
    return os.str();
  }

  static Permutation parse(const std::string& text) {
    std::vector<int> v;
    std::string cur;
    for (char ch : text) {
      if (std::isdigit(static_cast<unsigned char>(ch))) cur += ch;
      else {
        if (!cur.empty()) { v.push_back(std::atoi(cur.c_str())); cur.clear(); }
      }
    }
    if (!cur.empty()) v.push_back(std::atoi(cur.c_str()));
    if (v.empty()) throw std::invalid_argument("Permutation::parse: no entries in '" + text + "'");
    return Permutation(std::move(v));
  }

  friend bool operator==(const Permutation& a, const Permutation& b) { return a.img_ == b.img_; }
  friend bool operator!=(const Permutation& a, const Permutation& b) { return a.img_ != b.img_; }
  friend bool operator<(const Permutation& a, const Permutation& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.img_ < b.img_;
  }

 private:
  void check_same_n(const Permutation& o) const {
    if (size() != o.size()) throw std::invalid_argument("Permutation: size mismatch");
  }
  std::vector<int> img_;
};

inline Permutation operator*(const Permutation& a, const Permutation& b) { return a.compose(b); }

inline Permutation longest_element(int n) {
  std::vector<int> v(n);
  for (int i = 0; i < n; ++i) v[i] = n - i;
  return Permutation(std::move(v));
}

/// All of S_n in lexicographic one-line order (deterministic).
inline std::vector<Permutation> symmetric_group(int n) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 1);
  std::vector<Permutation> all;
  do {
    all.emplace_back(v);
  } while (std::next_permutation(v.begin(), v.end()));
  return all;
}

/// Sort key (length, one-line lex) used for stable table output.
inline std::vector<Permutation> by_length_lex(std::vector<Permutation> ws) {
  std::sort(ws.begin(), ws.end(), [](const Permutation& a, const Permutation& b) {
    int la = a.length(), lb = b.length();
    if (la != lb) return la < lb;
    return a.images() < b.images();
  });
  return ws;
}

/// Bruhat order via the dot criterion: x <= y iff for every k the increasing
/// rearrangement of {x(1),...,x(k)} is entrywise <= that of {y(1),...,y(k)}.
inline bool bruhat_leq(const Permutation& x, const Permutation& y) {
  if (x.size() != y.size()) throw std::invalid_argument("bruhat_leq: size mismatch");
  const int n = x.size();
  std::vector<int> px, py;
  px.reserve(n);
  py.reserve(n);
  for (int k = 1; k <= n - 1; ++k) {
    px.insert(std::upper_bound(px.begin(), px.end(), x(k)), x(k));
    py.insert(std::upper_bound(py.begin(), py.end(), y(k)), y(k));
    for (int j = 0; j < k; ++j)
      if (px[j] > py[j]) return false;
  }
  return true;
}

/// Standard Young tableau; rows weakly decrease in length, entries increase
/// along rows and down columns.
class Tableau {
 public:
  Tableau() = default;
  explicit Tableau(std::vector<std::vector<int>> rows) : rows_(std::move(rows)) {}

  const std::vector<std::vector<int>>& rows() const { return rows_; }
  std::vector<int> shape() const {
    std::vector<int> s;
    s.reserve(rows_.size());
    for (const auto& r : rows_) s.push_back(static_cast<int>(r.size()));
    return s;
  }
  int entries() const {
    int t = 0;
    for (const auto& r : rows_) t += static_cast<int>(r.size());
    return t;
  }

  /// Entry contents c - r (column minus row, zero-based), listed in the order
  /// of the values 1..n; used for Jucys-Murphy spectra.
  std::vector<int> content_vector() const {
    std::vector<int> c(entries());
    for (int r = 0; r < static_cast<int>(rows_.size()); ++r)
      for (int col = 0; col < static_cast<int>(rows_[r].size()); ++col)
        c[rows_[r][col] - 1] = col - r;
    return c;
  }

  std::string str() const {
    std::ostringstream os;
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      if (r) os << "/";
      for (std::size_t c = 0; c < rows_[r].size(); ++c) os << (c ? "," : "") << rows_[r][c];
    }
    return os.str();
  }

  friend bool operator==(const Tableau& a, const Tableau& b) { return a.rows_ == b.rows_; }
  friend bool operator!=(const Tableau& a, const Tableau& b) { return !(a == b); }
  friend bool operator<(const Tableau& a, const Tableau& b) { return a.rows_ < b.rows_; }

 private:
  std::vector<std::vector<int>> rows_;
};

/// Robinson-Schensted row insertion; returns (insertion tableau p, recording
/// tableau q).  rsk(w^-1) is the swapped pair.
inline std::pair<Tableau, Tableau> rsk(const Permutation& w) {
  std::vector<std::vector<int>> p, q;
  for (int step = 1; step <= w.size(); ++step) {
    int x = w(step);
    std::size_t row = 0;
    while (true) {
      if (row == p.size()) {
        p.emplace_back();
        q.emplace_back();
      }
      auto it = std::upper_bound(p[row].begin(), p[row].end(), x);
      if (it == p[row].end()) {
        p[row].push_back(x);
        q[row].push_back(step);
        break;
      }
      std::swap(x, *it);
      ++row;
    }
  }
  return {Tableau(std::move(p)), Tableau(std::move(q))};
}

/// All partitions of n, parts weakly decreasing, in descending lex order.
inline std::vector<std::vector<int>> partitions(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int rest, int maxpart) -> void {
    if (rest == 0) {
      out.push_back(cur);
      return;
    }
    for (int p = std::min(rest, maxpart); p >= 1; --p) {
      cur.push_back(p);
      self(self, rest - p, p);
      cur.pop_back();
    }
  };
  rec(rec, n, n);
  return out;
}

inline bool is_partition_of(const std::vector<int>& shape, int n) {
  int sum = 0;
  for (std::size_t i = 0; i < shape.size(); ++i) {
    if (shape[i] < 1) return false;
    if (i && shape[i] > shape[i - 1]) return false;
    sum += shape[i];
  }
  return sum == n;
}

/// All standard Young tableaux of the given shape, by backtracking.
inline std::vector<Tableau> standard_tableaux(const std::vector<int>& shape) {
  int n = 0;
  for (int p : shape) n += p;
  if (!is_partition_of(shape, n)) throw std::invalid_argument("standard_tableaux: invalid partition");
  if (n == 0) return {Tableau()};
  std::vector<std::vector<int>> rows(shape.size());
  std::vector<int> fill(shape.size(), 0);
  std::vector<Tableau> out;
  auto rec = [&](auto&& self, int next) -> void {
    if (next > n) {
      std::vector<std::vector<int>> snap(rows.size());
      for (std::size_t r = 0; r < rows.size(); ++r) snap[r] = rows[r];
      out.emplace_back(std::move(snap));
      return;
    }
    for (std::size_t r = 0; r < shape.size(); ++r) {
      if (fill[r] >= shape[r]) continue;
      if (r > 0 && fill[r] >= fill[r - 1]) continue;  // column must grow downwards
      rows[r].push_back(next);
      ++fill[r];
      self(self, next + 1);
      --fill[r];
      rows[r].pop_back();
    }
  };
  rec(rec, 1);
  return out;
}

/// Number of standard Young tableaux: exhaustive enumeration for n <= 8,
/// hook-length formula beyond (the two agree wherever both run; tested).
inline Int syt_count(const std::vector<int>& shape) {
  int n = 0;
  for (int p : shape) n += p;
  if (!is_partition_of(shape, n)) throw std::invalid_argument("syt_count: invalid partition");
  if (n == 0) return 1;
  if (n <= 8) return static_cast<Int>(standard_tableaux(shape).size());
  Int fact = 1;
  for (int i = 2; i <= n; ++i) fact *= i;
  Int hooks = 1;
  std::vector<int> conj(shape[0], 0);
  for (int p : shape)
    for (int c = 0; c < p; ++c) ++conj[c];
  for (std::size_t r = 0; r < shape.size(); ++r)
    for (int c = 0; c < shape[r]; ++c)
      hooks *= (shape[r] - c) + (conj[c] - static_cast<int>(r)) - 1;
  if (fact % hooks != 0) throw std::logic_error("syt_count: hook product does not divide n!");
  return fact / hooks;
}

enum class CosetKind { Shortest, Longest };

/// Order of the parabolic subgroup generated by {s_i : i in J}.
inline Int parabolic_order(int n, const std::set<int>& J) {
  for (int i : J)
    if (i < 1 || i >= n) throw std::invalid_argument("parabolic_order: generator index out of range");
  Int order = 1;
  int run = 0;
  for (int i = 1; i <= n - 1; ++i) {
    if (J.count(i)) {
      ++run;
    } else {
      for (int k = 2; k <= run + 1; ++k) order *= k;
      run = 0;
    }
  }
  for (int k = 2; k <= run + 1; ++k) order *= k;
  return order;
}

/// Representatives of the cosets W_J \ W: the unique shortest (resp. longest)
/// element of each coset, characterized by having no (resp. every) left
/// descent inside J.  Returned in (length, lex) order.
inline std::vector<Permutation> coset_representatives(int n, const std::set<int>& J, CosetKind kind) {
  std::vector<Permutation> reps;
  for (const auto& w : symmetric_group(n)) {
    auto ld = w.left_descents();
    std::set<int> lds(ld.begin(), ld.end());
    bool ok = true;
    for (int i : J) {
      bool desc = lds.count(i) > 0;
      if (kind == CosetKind::Shortest ? desc : !desc) { ok = false; break; }
    }
    if (ok) reps.push_back(w);
  }
  reps = by_length_lex(std::move(reps));
  Int expected = 1;
  for (int k = 2; k <= n; ++k) expected *= k;
  expected /= parabolic_order(n, J);
  if (Int(reps.size()) != expected)
    throw std::logic_error("coset_representatives: wrong count (internal error)");
  return reps;
}

/// Word rendering "s1 s2 s1" for generator index sequences.
inline std::string word_str(const std::vector<int>& word) {
  std::ostringstream os;
  for (std::size_t i = 0; i < word.size(); ++i) os << (i ? " " : "") << "s" << word[i];
  return os.str();
}

inline std::vector<int> word_parse(const std::string& text) {
  std::vector<int> word;
  std::istringstream in(text);
  std::string tok;
  while (in >> tok) {
    if (tok.size() < 2 || tok[0] != 's')
      throw std::invalid_argument("word_parse: bad generator token '" + tok + "'");
    word.push_back(std::atoi(tok.c_str() + 1));
  }
  return word;
}

/// Cycle type as a partition of n.
inline std::vector<int> cycle_type(const Permutation& w) {
  std::vector<bool> seen(w.size(), false);
  std::vector<int> type;
  for (int i = 1; i <= w.size(); ++i) {
    if (seen[i - 1]) continue;
    int len = 0, j = i;
    do {
      seen[j - 1] = true;
      ++len;
      j = w(j);
    } while (j != i);
    type.push_back(len);
  }
  std::sort(type.rbegin(), type.rend());
  return type;
}

}  // namespace heckekit
