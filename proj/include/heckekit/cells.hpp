#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "heckekit/hecke.hpp"
#include "heckekit/laurent.hpp"
#include "heckekit/matrix.hpp"
#include "heckekit/permutations.hpp"

namespace heckekit {

enum class CellKind { Left, Right, TwoSided };

/// A cell partition of S_n together with the induced partial order on
/// classes.  Classes are sorted internally by (length, lex) and listed in
/// (length, lex) order of their minimal elements, so output is stable.
struct CellPartition {
  CellKind kind;
  int n = 0;
  std::vector<std::vector<Permutation>> classes;
  /// leq[i][j): class i is below class j in the cell preorder.
  std::vector<std::vector<bool>> leq;

  int class_of(const Permutation& w) const {
    for (std::size_t i = 0; i < classes.size(); ++i)
      if (std::binary_search(classes[i].begin(), classes[i].end(), w,
                             [](const Permutation& a, const Permutation& b) {
                               if (a.length() != b.length()) return a.length() < b.length();
                               return a.images() < b.images();
                             }))
        return static_cast<int>(i);
    throw std::invalid_argument("CellPartition::class_of: element not found");
  }
};

/// Cells from KL structure constants.  Edges x -> y whenever
/// KL_y occurs in KL_s KL_x (left) or
/// KL_x KL_s (right), over all simple reflections s;
/// cells are the strongly connected components of the transitive closure,
/// and the two-sided preorder uses both edge sets.  Restricting the
/// multipliers to the generators is enough because they generate the
/// algebra (validated against the all-z definition in the test suite).
inline CellPartition cells(const KLTable& table, CellKind kind) {
  const int n = table.n();
  const auto& elems = table.elements();
  const std::size_t N = elems.size();
  std::map<Permutation, std::size_t> index;
  for (std::size_t i = 0; i < N; ++i) index.emplace(elems[i], i);

  std::vector<std::set<std::size_t>> adj(N);
  for (std::size_t i = 0; i < N; ++i) {
    for (int g = 1; g < n; ++g) {
      Permutation s = Permutation::simple(n, g);
      if (kind == CellKind::Left || kind == CellKind::TwoSided)
        for (const auto& [y, c] : table.kl_multiply(s, elems[i])) { (void)c; adj[i].insert(index.at(y)); }
      if (kind == CellKind::Right || kind == CellKind::TwoSided)
        for (const auto& [y, c] : table.kl_multiply(elems[i], s)) { (void)c; adj[i].insert(index.at(y)); }
    }
  }

  // Reachability closure by BFS from every node.
  std::vector<std::vector<bool>> reach(N, std::vector<bool>(N, false));
  for (std::size_t i = 0; i < N; ++i) {
    std::vector<std::size_t> stack{i};
    reach[i][i] = true;
    while (!stack.empty()) {
      std::size_t u = stack.back();
      stack.pop_back();
      for (std::size_t v : adj[u])
        if (!reach[i][v]) { reach[i][v] = true; stack.push_back(v); }
    }
  }

  std::vector<int> cls(N, -1);
  std::vector<std::vector<Permutation>> classes;
  for (std::size_t i = 0; i < N; ++i) {
    if (cls[i] >= 0) continue;
    int id = static_cast<int>(classes.size());
    classes.emplace_back();
    for (std::size_t j = i; j < N; ++j)
      if (cls[j] < 0 && reach[i][j] && reach[j][i]) {
        cls[j] = id;
        classes[id].push_back(elems[j]);
      }
  }
  for (auto& c : classes) c = by_length_lex(std::move(c));
  // Order classes by their minimal element (elements are already in
  // (length, lex) order globally, so first-seen order is already canonical).
  CellPartition part;
  part.kind = kind;
  part.n = n;
  part.classes = std::move(classes);
  part.leq.assign(part.classes.size(), std::vector<bool>(part.classes.size(), false));
  for (std::size_t a = 0; a < part.classes.size(); ++a)
    for (std::size_t b = 0; b < part.classes.size(); ++b) {
      std::size_t ia = index.at(part.classes[a][0]);
      std::size_t ib = index.at(part.classes[b][0]);
      part.leq[a][b] = reach[ia][ib];
    }
  return part;
}

namespace detail {
inline std::set<std::set<Permutation>> as_set_of_sets(const std::vector<std::vector<Permutation>>& classes) {
  std::set<std::set<Permutation>> out;
  for (const auto& c : classes) out.emplace(c.begin(), c.end());
  return out;
}
}  // namespace detail

/// Robinson-Schensted cross-check: right cells are fibers of the insertion
/// tableau p, left cells fibers of the recording tableau q, two-sided cells
/// fibers of the shape.
inline bool check_rsk_cells(const KLTable& table) {
  std::map<Tableau, std::set<Permutation>> by_p, by_q;
  std::map<std::vector<int>, std::set<Permutation>> by_shape;
  for (const auto& w : table.elements()) {
    auto [p, q] = rsk(w);
    by_p[p].insert(w);
    by_q[q].insert(w);
    by_shape[p.shape()].insert(w);
  }
  auto collect = [](const auto& m) {
    std::set<std::set<Permutation>> out;
    for (const auto& [k, v] : m) { (void)k; out.insert(v); }
    return out;
  };
  return detail::as_set_of_sets(cells(table, CellKind::Right).classes) == collect(by_p) &&
         detail::as_set_of_sets(cells(table, CellKind::Left).classes) == collect(by_q) &&
         detail::as_set_of_sets(cells(table, CellKind::TwoSided).classes) == collect(by_shape);
}

using LaurentMatrix = Matrix<LaurentPoly>;

/// A representation of H_n by matrices for the generators KL_s.
/// The defining relations are checked at construction time by the factory
/// functions below.
struct LinearRep {
  int n = 0;    // H_n acting
  int dim = 0;
  std::vector<std::string> basis_labels;
  std::map<int, LaurentMatrix> gens;  // generator index -> matrix
};

/// Quadratic, commuting and braid relations as exact matrix identities.
inline void verify_hecke_relations(const LinearRep& rep) {
  const LaurentPoly loop = LaurentPoly::v(1) + LaurentPoly::v(-1);
  for (int i = 1; i < rep.n; ++i) {
    const auto& a = rep.gens.at(i);
    if (!mat_eq(mat_mul(a, a), mat_scale(a, loop)))
      throw std::logic_error("LinearRep: quadratic relation fails at generator " + std::to_string(i));
    for (int j = i + 1; j < rep.n; ++j) {
      const auto& b = rep.gens.at(j);
      if (j - i > 1) {
        if (!mat_eq(mat_mul(a, b), mat_mul(b, a)))
          throw std::logic_error("LinearRep: commuting relation fails");
      } else {
        auto lhs = mat_add(mat_mul(mat_mul(a, b), a), b);
        auto rhs = mat_add(mat_mul(mat_mul(b, a), b), a);
        if (!mat_eq(lhs, rhs)) throw std::logic_error("LinearRep: braid relation fails");
      }
    }
  }
}

/// Cell module: span of the KL basis elements in one cell, with the product
/// truncated to the cell.  Left cells are acted on by left multiplication,
/// right cells by right multiplication.
inline LinearRep cell_module(const KLTable& table, const std::vector<Permutation>& cell, CellKind side,
                             const CellPartition* known_partition = nullptr) {
  if (side == CellKind::TwoSided) throw std::invalid_argument("cell_module: side must be Left or Right");
  auto basis = by_length_lex(cell);
  {
    std::set<Permutation> in(basis.begin(), basis.end());
    const CellPartition part = known_partition ? *known_partition : cells(table, side);
    bool found = false;
    for (const auto& c : part.classes)
      if (std::set<Permutation>(c.begin(), c.end()) == in) { found = true; break; }
    if (!found) throw std::invalid_argument("cell_module: input is not a cell");
  }
  std::map<Permutation, int> pos;
  for (std::size_t i = 0; i < basis.size(); ++i) pos.emplace(basis[i], static_cast<int>(i));

  LinearRep rep;
  rep.n = table.n();
  rep.dim = static_cast<int>(basis.size());
  for (const auto& w : basis) rep.basis_labels.push_back(w.str());
  for (int g = 1; g < table.n(); ++g) {
    Permutation s = Permutation::simple(table.n(), g);
    LaurentMatrix m = zero_matrix(basis.size(), basis.size(), LaurentPoly());
    for (std::size_t j = 0; j < basis.size(); ++j) {
      auto expansion = side == CellKind::Left ? table.kl_multiply(s, basis[j])
                                              : table.kl_multiply(basis[j], s);
      for (const auto& [y, c] : expansion) {
        auto it = pos.find(y);
        if (it != pos.end()) m[it->second][j] = c;  // out-of-cell terms dropped
      }
    }
    rep.gens.emplace(g, std::move(m));
  }
  verify_hecke_relations(rep);
  return rep;
}

/// Result of specializing a module at v = 1 and testing it as a W-module.
struct SpechtReport {
  int dimension = 0;
  std::map<std::vector<int>, Int> character;  // cycle type -> trace
  Rat norm;                                   // (1/n!) sum_w chi(w) chi(w^-1)
};

namespace detail {

inline Matrix<Int> word_matrix(const std::map<int, Matrix<Int>>& s_mats, int n, const Permutation& w) {
  Matrix<Int> m = identity_matrix<Int>(s_mats.empty() ? 1 : s_mats.begin()->second.size(), Int(0), Int(1));
  (void)n;
  for (int i : w.reduced_word()) m = mat_mul(m, s_mats.at(i));
  return m;
}

inline Int mat_trace(const Matrix<Int>& m) {
  Int t = 0;
  for (std::size_t i = 0; i < m.size(); ++i) t += m[i][i];
  return t;
}

inline Permutation class_representative(int n, const std::vector<int>& type) {
  std::vector<int> img(n);
  int start = 0;
  for (int len : type) {
    for (int k = 0; k < len; ++k) img[start + k] = start + 1 + ((k + 1) % len);
    start += len;
  }
  return Permutation(img);
}

inline Int factorial(int n) {
  Int f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

inline Int class_size(int n, const std::vector<int>& type) {
  // n! / z_type with z = prod m_j! * j^{m_j}
  std::map<int, int> mult;
  for (int part : type) ++mult[part];
  Int z = 1;
  for (const auto& [j, m] : mult) {
    for (int k = 2; k <= m; ++k) z *= k;
    for (int k = 0; k < m; ++k) z *= j;
  }
  return factorial(n) / z;
}

}  // namespace detail

/// Specialize v = 1, sending the KL generator KL_s to e + s, so each simple
/// reflection acts by the specialized generator matrix minus the identity.
/// Verifies the group relations, then computes the character on conjugacy
/// class representatives and its norm; norm 1 certifies irreducibility.
inline SpechtReport specialize_and_test_specht(const LinearRep& rep) {
  const int n = rep.n;
  std::map<int, Matrix<Int>> s_mats;
  for (const auto& [g, m] : rep.gens) {
    Matrix<Int> e(m.size(), std::vector<Int>(m.size(), 0));
    for (std::size_t i = 0; i < m.size(); ++i)
      for (std::size_t j = 0; j < m.size(); ++j) e[i][j] = m[i][j].eval_at_one();
    for (std::size_t i = 0; i < m.size(); ++i) e[i][i] -= 1;  // s = (e+s) - e
    s_mats.emplace(g, std::move(e));
  }
  // group relations
  auto id = identity_matrix<Int>(rep.dim, Int(0), Int(1));
  for (const auto& [g, s] : s_mats) {
    if (!mat_eq(mat_mul(s, s), id))
      throw std::logic_error("specialize_and_test_specht: s^2 != e after specialization");
    for (const auto& [h, t] : s_mats) {
      if (h <= g) continue;
      if (h - g > 1) {
        if (!mat_eq(mat_mul(s, t), mat_mul(t, s)))
          throw std::logic_error("specialize_and_test_specht: commuting relation fails");
      } else {
        if (!mat_eq(mat_mul(mat_mul(s, t), s), mat_mul(mat_mul(t, s), t)))
          throw std::logic_error("specialize_and_test_specht: braid relation fails");
      }
    }
  }

  SpechtReport report;
  report.dimension = rep.dim;
  Rat norm_sum = 0;
  for (const auto& type : partitions(n)) {
    Permutation w = detail::class_representative(n, type);
    Int chi = detail::mat_trace(detail::word_matrix(s_mats, n, w));
    Int chi_inv = detail::mat_trace(detail::word_matrix(s_mats, n, w.inverse()));
    report.character.emplace(type, chi);
    norm_sum += Rat(detail::class_size(n, type) * chi * chi_inv);
  }
  report.norm = norm_sum / Rat(detail::factorial(n));
  return report;
}

enum class ParabolicVariant { MinusV, VInverse };

/// Parabolic module M_u on the shortest coset representatives W(p), with
/// the right action of KL_s given by the four-case rule:
///   M_{xs} + v M_x          xs in W(p), xs > x
///   M_{xs} + v^-1 M_x       xs in W(p), xs < x
///   (v + v^-1) M_x          xs not in W(p), u = v^-1
///   0                       xs not in W(p), u = -v
inline LinearRep parabolic_module(int n, const std::set<int>& parabolic, ParabolicVariant u) {
  auto reps = coset_representatives(n, parabolic, CosetKind::Shortest);
  std::map<Permutation, int> pos;
  for (std::size_t i = 0; i < reps.size(); ++i) pos.emplace(reps[i], static_cast<int>(i));

  LinearRep rep;
  rep.n = n;
  rep.dim = static_cast<int>(reps.size());
  for (const auto& x : reps) rep.basis_labels.push_back(x.str());
  for (int g = 1; g < n; ++g) {
    Permutation s = Permutation::simple(n, g);
    LaurentMatrix m = zero_matrix(reps.size(), reps.size(), LaurentPoly());
    for (std::size_t j = 0; j < reps.size(); ++j) {
      Permutation xs = reps[j] * s;
      auto it = pos.find(xs);
      if (it != pos.end()) {
        m[it->second][j] += LaurentPoly(1);
        m[j][j] += xs.length() > reps[j].length() ? LaurentPoly::v(1) : LaurentPoly::v(-1);
      } else if (u == ParabolicVariant::VInverse) {
        m[j][j] += LaurentPoly::v(1) + LaurentPoly::v(-1);
      }
      // u = -v: the action is zero
    }
    rep.gens.emplace(g, std::move(m));
  }
  verify_hecke_relations(rep);
  return rep;
}

/// The canonical shortest representative of the coset W_J u.
inline Permutation coset_canonical(const Permutation& u, const std::set<int>& parabolic) {
  Permutation w = u;
  bool changed = true;
  while (changed) {
    changed = false;
    for (int i : parabolic) {
      Permutation sw = Permutation::simple(w.size(), i) * w;
      if (sw.length() < w.length()) { w = sw; changed = true; break; }
    }
  }
  return w;
}

/// Permutation character of S_n on the cosets W_J \ W.
inline Int permutation_character(int n, const std::set<int>& parabolic, const Permutation& w) {
  Int fixed = 0;
  for (const auto& x : coset_representatives(n, parabolic, CosetKind::Shortest))
    if (coset_canonical(x * w, parabolic) == x) ++fixed;
  return fixed;
}

/// Character of the induced sign module sign (x)_{W_J} Z[W].
inline Int induced_sign_character(int n, const std::set<int>& parabolic, const Permutation& w) {
  Int total = 0;
  for (const auto& x : coset_representatives(n, parabolic, CosetKind::Shortest)) {
    if (coset_canonical(x * w, parabolic) != x) continue;
    Permutation inner = x * w * x.inverse();  // lies in W_J when the coset is fixed
    total += inner.length() % 2 == 0 ? 1 : -1;
  }
  return total;
}

// ---------------------------------------------------------------------------
// Wedderburn basis

using GroupVector = std::map<Permutation, Int>;  // element of Z[S_n], sparse

namespace detail {

inline GroupVector convolve(const GroupVector& a, const GroupVector& b) {
  GroupVector out;
  for (const auto& [u, cu] : a)
    for (const auto& [w, cw] : b) {
      Permutation p = u * w;
      auto it = out.find(p);
      if (it == out.end()) out.emplace(p, cu * cw);
      else {
        it->second += cu * cw;
        if (it->second == 0) out.erase(it);
      }
    }
  return out;
}

inline GroupVector right_translate(const GroupVector& a, const Permutation& w) {
  GroupVector out;
  for (const auto& [u, c] : a) out.emplace(u * w, c);
  return out;
}

inline std::vector<Rat> dense(const GroupVector& a, const std::vector<Permutation>& order) {
  std::vector<Rat> v(order.size(), Rat(0));
  for (std::size_t i = 0; i < order.size(); ++i) {
    auto it = a.find(order[i]);
    if (it != a.end()) v[i] = Rat(it->second);
  }
  return v;
}

}  // namespace detail

/// The unique involution in the right cell of w: the element u with
/// p(u) = q(u) = p(w).
inline Permutation cell_involution(const Permutation& w) {
  Tableau target = rsk(w).first;
  for (const auto& u : symmetric_group(w.size())) {
    if (!(u * u).is_identity()) continue;
    if (rsk(u).first == target) return u;
  }
  throw std::logic_error("cell_involution: no involution found (impossible)");
}

/// f_w = ev(KLdual_wbar * KL_w), the image in the
/// group algebra of the dual-KL/KL product under v -> 1, H_w -> w.
inline std::map<Permutation, GroupVector> wedderburn_basis(const KLTable& table) {
  const auto& dual = table.dual_table();
  std::map<Permutation, GroupVector> out;
  for (const auto& w : table.elements()) {
    Permutation wbar = cell_involution(w);
    HeckeElt prod = dual.at(wbar) * table.kl_elt(w);
    out.emplace(w, prod.specialize_v1());
  }
  return out;
}

struct WedderburnReport {
  bool basis_invertible = false;
  bool spans_invariant = false;
  bool spans_irreducible = false;
  bool matrix_unit_pattern = false;
  std::vector<std::string> failures;
  bool all_ok() const {
    return basis_invertible && spans_invariant && spans_irreducible && matrix_unit_pattern;
  }
};

/// The full verification suite behind the Wedderburn-basis claims: the f_w
/// form a basis, right-cell spans are invariant irreducible right
/// submodules, and products f_x f_y follow the matrix-unit pattern up to
/// scalars, vanishing across different two-sided cells.
inline WedderburnReport verify_wedderburn(const KLTable& table) {
  const int n = table.n();
  const auto& elems = table.elements();
  auto basis = wedderburn_basis(table);
  auto right = cells(table, CellKind::Right);
  auto two_sided = cells(table, CellKind::TwoSided);
  WedderburnReport report;

  // (i) invertibility over Q
  Matrix<Rat> m;
  for (const auto& w : elems) m.push_back(detail::dense(basis.at(w), elems));
  report.basis_invertible = mat_rank(m) == elems.size();
  if (!report.basis_invertible) report.failures.push_back("coefficient matrix of {f_w} is singular");

  // (ii)+(iii) right-cell spans: invariance under every group element and
  // irreducibility via the character norm
  report.spans_invariant = true;
  report.spans_irreducible = true;
  for (const auto& cell : right.classes) {
    const std::size_t d = cell.size();
    Matrix<Rat> span;  // rows = equations (group elements), cols = f_y
    span.assign(elems.size(), std::vector<Rat>(d, Rat(0)));
    for (std::size_t j = 0; j < d; ++j) {
      auto col = detail::dense(basis.at(cell[j]), elems);
      for (std::size_t i = 0; i < elems.size(); ++i) span[i][j] = col[i];
    }
    // generator action matrices for the norm computation
    std::map<int, Matrix<Rat>> gen_mats;
    bool cell_ok = true;
    for (const auto& w : symmetric_group(n)) {
      Matrix<Rat> action(d, std::vector<Rat>(d, Rat(0)));
      for (std::size_t j = 0; j < d && cell_ok; ++j) {
        auto target = detail::dense(detail::right_translate(basis.at(cell[j]), w), elems);
        auto sol = solve_linear(span, target, Rat(0));
        if (!sol) {
          cell_ok = false;
          report.spans_invariant = false;
          report.failures.push_back("f_" + cell[j].str() + " * " + w.str() + " leaves its right-cell span");
          break;
        }
        for (std::size_t i = 0; i < d; ++i) action[i][j] = (*sol)[i];
      }
      if (!cell_ok) break;
      if (w.length() == 1) gen_mats.emplace(w.reduced_word()[0], std::move(action));
    }
    if (!cell_ok) continue;
    // character norm over all elements
    Rat norm = 0;
    for (const auto& w : symmetric_group(n)) {
      auto mat_of = [&](const Permutation& u) {
        Matrix<Rat> acc = identity_matrix<Rat>(d, Rat(0), Rat(1));
        for (int i : u.reduced_word()) acc = mat_mul(gen_mats.at(i), acc);
        return acc;
      };
      Rat chi = 0, chi_inv = 0;
      auto mw = mat_of(w);
      auto mwi = mat_of(w.inverse());
      for (std::size_t i = 0; i < d; ++i) { chi += mw[i][i]; chi_inv += mwi[i][i]; }
      norm += chi * chi_inv;
    }
    norm /= Rat(detail::factorial(n));
    if (norm != Rat(1)) {
      report.spans_irreducible = false;
      report.failures.push_back("right-cell span of " + cell[0].str() + " has character norm != 1");
    }
  }

  // (iv) matrix-unit pattern up to scalars
  report.matrix_unit_pattern = true;
  for (const auto& x : elems)
    for (const auto& y : elems) {
      GroupVector g = detail::convolve(basis.at(x), basis.at(y));
      bool cross_cell = two_sided.class_of(x) != two_sided.class_of(y);
      if (cross_cell) {
        if (!g.empty()) {
          report.matrix_unit_pattern = false;
          report.failures.push_back("f_" + x.str() + " f_" + y.str() + " != 0 across two-sided cells");
        }
        continue;
      }
      if (g.empty()) continue;
      bool proportional = false;
      for (const auto& z : elems) {
        const GroupVector& fz = basis.at(z);
        if (fz.empty()) continue;
        // compare supports and cross-ratios exactly
        if (fz.size() != g.size()) continue;
        auto itg = g.begin();
        auto itf = fz.begin();
        bool same_support = true;
        for (; itg != g.end(); ++itg, ++itf)
          if (itg->first != itf->first) { same_support = false; break; }
        if (!same_support) continue;
        Rat ratio(g.begin()->second, fz.begin()->second);
        bool match = true;
        for (itg = g.begin(), itf = fz.begin(); itg != g.end(); ++itg, ++itf)
          if (Rat(itg->second) != ratio * Rat(itf->second)) { match = false; break; }
        if (match) { proportional = true; break; }
      }
      if (!proportional) {
        report.matrix_unit_pattern = false;
        report.failures.push_back("f_" + x.str() + " f_" + y.str() + " is not proportional to any f_z");
      }
    }
  return report;
}

}  // namespace heckekit
