#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "heckekit/laurent.hpp"

namespace heckekit {

enum class DiagramKind { Cup, Cap, PosCross, NegCross };

/// One elementary diagram at a 1-based strand position.  PosCross is the
/// right crossing, NegCross the left crossing.
struct ElementaryDiagram {
  DiagramKind kind;
  int position;
  friend bool operator==(const ElementaryDiagram& a, const ElementaryDiagram& b) {
    return a.kind == b.kind && a.position == b.position;
  }
};

inline int arity_delta(DiagramKind k) {
  switch (k) {
    case DiagramKind::Cup: return 2;
    case DiagramKind::Cap: return -2;
    default: return 0;
  }
}

/// A vertical composition of elementary diagrams, read bottom to top.
class TangleWord {
 public:
  TangleWord(int source_arity, std::vector<ElementaryDiagram> steps)
      : source_(source_arity), steps_(std::move(steps)) {
    if (source_ < 0) throw std::invalid_argument("TangleWord: negative arity");
    int a = source_;
    for (const auto& d : steps_) {
      if (d.kind == DiagramKind::Cup) {
        if (d.position < 1 || d.position > a + 1)
          throw std::invalid_argument("TangleWord: cup position out of range");
      } else {
        if (d.position < 1 || d.position > a - 1)
          throw std::invalid_argument("TangleWord: position out of range");
      }
      a += arity_delta(d.kind);
    }
    target_ = a;
  }

  int source_arity() const { return source_; }
  int target_arity() const { return target_; }
  const std::vector<ElementaryDiagram>& steps() const { return steps_; }
  bool closed() const { return source_ == 0 && target_ == 0; }

  int n_plus() const { return count(DiagramKind::PosCross); }
  int n_minus() const { return count(DiagramKind::NegCross); }

 private:
  int count(DiagramKind k) const {
    int c = 0;
    for (const auto& d : steps_)
      if (d.kind == k) ++c;
    return c;
  }
  int source_, target_;
  std::vector<ElementaryDiagram> steps_;
};

/// Sparse linear map between tensor powers of the two-dimensional module,
/// with rows and columns indexed by 0-1 sequences.  The leftmost symbol of a
/// sequence is strand 1 and sits in the most significant bit.
class Morphism {
 public:
  Morphism(int src_arity, int tgt_arity) : src_(src_arity), tgt_(tgt_arity) {}

  static Morphism identity(int arity) {
    Morphism m(arity, arity);
    for (std::uint32_t x = 0; x < (1u << arity); ++x) m.add(x, x, LaurentPoly(1));
    return m;
  }

  int source_arity() const { return src_; }
  int target_arity() const { return tgt_; }

  void add(std::uint32_t col, std::uint32_t row, const LaurentPoly& c) {
    if (col >= (1u << src_) || row >= (1u << tgt_))
      throw std::invalid_argument("Morphism: index out of range for the declared arities");
    if (c.is_zero()) return;
    auto& column = cols_[col];
    auto it = column.find(row);
    if (it == column.end()) {
      column.emplace(row, c);
    } else {
      it->second += c;
      if (it->second.is_zero()) column.erase(it);
    }
  }

  LaurentPoly entry(std::uint32_t row, std::uint32_t col) const {
    auto itc = cols_.find(col);
    if (itc == cols_.end()) return LaurentPoly();
    auto itr = itc->second.find(row);
    return itr == itc->second.end() ? LaurentPoly() : itr->second;
  }

  const std::map<std::uint32_t, std::map<std::uint32_t, LaurentPoly>>& columns() const { return cols_; }

  /// g.after(f) = g o f.
  Morphism after(const Morphism& f) const {
    if (f.tgt_ != src_) throw std::invalid_argument("Morphism: arity mismatch in composition");
    Morphism out(f.src_, tgt_);
    for (const auto& [c, column] : f.cols_)
      for (const auto& [mid, a] : column) {
        auto itg = cols_.find(mid);
        if (itg == cols_.end()) continue;
        for (const auto& [row, b] : itg->second) out.add(c, row, a * b);
      }
    return out;
  }

  friend bool operator==(const Morphism& a, const Morphism& b) {
    return a.src_ == b.src_ && a.tgt_ == b.tgt_ && a.cols_ == b.cols_;
  }

 private:
  int src_, tgt_;
  std::map<std::uint32_t, std::map<std::uint32_t, LaurentPoly>> cols_;
};

/// The elementary morphisms at strand position i, identity elsewhere:
///   cup:  1 -> 01 + v 10
///   cap:  01 -> v^-1, 10 -> 1, 00 -> 0, 11 -> 0
///   right crossing: 00 -> -v 00, 11 -> -v 11, 01 -> 10 + (v^-1 - v) 01, 10 -> 01
///   left  crossing: 00 -> -v^-1 00, 11 -> -v^-1 11, 01 -> 10, 10 -> 01 + (v - v^-1) 10
inline Morphism eval_elementary(const ElementaryDiagram& d, int arity) {
  const LaurentPoly one(1), v = LaurentPoly::v(1), vi = LaurentPoly::v(-1);
  const int p = d.position;
  if (d.kind == DiagramKind::Cup) {
    if (p < 1 || p > arity + 1) throw std::invalid_argument("eval_elementary: cup position out of range");
    Morphism m(arity, arity + 2);
    const int tail = arity - p + 1;  // strands p..arity of the input
    for (std::uint32_t x = 0; x < (1u << arity); ++x) {
      std::uint32_t high = x >> tail, low = x & ((1u << tail) - 1);
      auto out = [&](std::uint32_t two) { return (((high << 2) | two) << tail) | low; };
      m.add(x, out(0b01), one);
      m.add(x, out(0b10), v);
    }
    return m;
  }
  if (p < 1 || p > arity - 1) throw std::invalid_argument("eval_elementary: position out of range");
  const int s1 = arity - p, s2 = arity - p - 1;  // bit shifts of strands p, p+1
  auto bits = [&](std::uint32_t x) { return std::make_pair((x >> s1) & 1u, (x >> s2) & 1u); };
  if (d.kind == DiagramKind::Cap) {
    Morphism m(arity, arity - 2);
    for (std::uint32_t x = 0; x < (1u << arity); ++x) {
      auto [b1, b2] = bits(x);
      if (b1 == b2) continue;
      std::uint32_t high = x >> (s1 + 1), low = x & ((1u << s2) - 1);
      std::uint32_t out = (high << s2) | low;
      m.add(x, out, b1 == 0 ? vi : one);
    }
    return m;
  }
  Morphism m(arity, arity);
  auto rebuild = [&](std::uint32_t x, std::uint32_t b1, std::uint32_t b2) {
    return (x & ~((1u << s1) | (1u << s2))) | (b1 << s1) | (b2 << s2);
  };
  for (std::uint32_t x = 0; x < (1u << arity); ++x) {
    auto [b1, b2] = bits(x);
    if (d.kind == DiagramKind::PosCross) {
      if (b1 == b2) m.add(x, x, -v);
      else if (b1 == 0) { m.add(x, rebuild(x, 1, 0), one); m.add(x, x, vi - v); }
      else m.add(x, rebuild(x, 0, 1), one);
    } else {
      if (b1 == b2) m.add(x, x, -vi);
      else if (b1 == 0) m.add(x, rebuild(x, 1, 0), one);
      else { m.add(x, rebuild(x, 0, 1), one); m.add(x, x, v - vi); }
    }
  }
  return m;
}

/// Ordered composition of the elementary morphisms, bottom to top.
inline Morphism eval_word(const TangleWord& w) {
  Morphism m = Morphism::identity(w.source_arity());
  int arity = w.source_arity();
  for (const auto& d : w.steps()) {
    m = eval_elementary(d, arity).after(m);
    arity += arity_delta(d.kind);
  }
  return m;
}

/// Trace closure of a braid word on k strands: nested cups pairing strand i
/// with 2k+1-i, the braid acting on strands k+1..2k, then caps.  Letter +i
/// maps to the right crossing, -i to the left crossing.
inline TangleWord braid_closure(const std::vector<int>& braid, int strands) {
  if (strands < 1) throw std::invalid_argument("braid_closure: need at least one strand");
  std::vector<ElementaryDiagram> steps;
  for (int i = 1; i <= strands; ++i) steps.push_back({DiagramKind::Cup, i});
  for (int letter : braid) {
    int i = letter > 0 ? letter : -letter;
    if (i < 1 || i >= strands) throw std::invalid_argument("braid_closure: generator index out of range");
    steps.push_back({letter > 0 ? DiagramKind::PosCross : DiagramKind::NegCross, strands + i});
  }
  for (int i = strands; i >= 1; --i) steps.push_back({DiagramKind::Cap, i});
  return TangleWord(0, std::move(steps));
}

struct RTInvariant {
  LaurentPoly phi;    // the bare evaluation phi_L(1)
  LaurentPoly j_hat;  // unnormalized Jones polynomial
  LaurentPoly j;      // Jones polynomial, j_hat / (v + v^-1)
  int n_plus = 0, n_minus = 0;
};

/// Quantum sl2 evaluation of a closed word.  The writhe normalization
/// divides out the curl factor of the cup/cap pair in use (a positive curl
/// evaluates to -v^2) and returns to the Kauffman-side variable convention
/// via the bar involution:
///   J^ = (-1)^{n+ + n-} v^{2(n+ - n-)} bar(phi).
/// On every closed word this agrees exactly with the Kauffman-bracket
/// route below, and it is invariant under Markov moves on braid closures.
inline RTInvariant rt_invariant(const TangleWord& w) {
  if (!w.closed() || w.steps().empty())
    throw std::invalid_argument("rt_invariant: word must be closed and nonempty");
  RTInvariant out;
  out.n_plus = w.n_plus();
  out.n_minus = w.n_minus();
  out.phi = eval_word(w).entry(0, 0);
  Int sign = (out.n_plus + out.n_minus) % 2 == 0 ? 1 : -1;
  out.j_hat = out.phi.bar() * LaurentPoly::monomial(sign, 2 * (out.n_plus - out.n_minus));
  out.j = out.j_hat.exact_div(LaurentPoly::v(1) + LaurentPoly::v(-1));
  return out;
}

/// Crossingless perfect matching of bottom+top boundary points with a
/// closed-loop counter; the diagram calculus behind the Kauffman state sum.
class PlanarMatching {
 public:
  PlanarMatching(int bottom, int top, std::vector<int> match, long long loops = 0)
      : bottom_(bottom), top_(top), match_(std::move(match)), loops_(loops) {
    const int total = bottom_ + top_;
    if (static_cast<int>(match_.size()) != total)
      throw std::invalid_argument("PlanarMatching: wrong match size");
    for (int i = 0; i < total; ++i) {
      if (match_[i] < 0 || match_[i] >= total || match_[i] == i || match_[match_[i]] != i)
        throw std::invalid_argument("PlanarMatching: not a perfect matching");
    }
    // planarity: chords on the disk boundary (bottom left-to-right, then top
    // right-to-left) must not cross
    auto circle = [&](int i) { return i < bottom_ ? i : bottom_ + top_ - 1 - (i - bottom_); };
    for (int i = 0; i < total; ++i)
      for (int j = 0; j < total; ++j) {
        if (i >= match_[i] || j >= match_[j] || i == j) continue;
        int a1 = circle(i), a2 = circle(match_[i]);
        int b1 = circle(j), b2 = circle(match_[j]);
        if (a1 > a2) std::swap(a1, a2);
        if (b1 > b2) std::swap(b1, b2);
        bool b1_in = a1 < b1 && b1 < a2, b2_in = a1 < b2 && b2 < a2;
        if (b1_in != b2_in) throw std::invalid_argument("PlanarMatching: chords cross");
      }
  }

  static PlanarMatching identity(int strands) {
    std::vector<int> m(2 * strands);
    for (int i = 0; i < strands; ++i) { m[i] = strands + i; m[strands + i] = i; }
    return PlanarMatching(strands, strands, std::move(m));
  }

  int bottom() const { return bottom_; }
  int top() const { return top_; }
  long long loops() const { return loops_; }
  int partner(int i) const { return match_[i]; }

  friend bool operator==(const PlanarMatching& a, const PlanarMatching& b) {
    return a.bottom_ == b.bottom_ && a.top_ == b.top_ && a.match_ == b.match_ && a.loops_ == b.loops_;
  }

 private:
  int bottom_, top_;
  std::vector<int> match_;
  long long loops_;
};

/// Stack b on top of a, trace the arcs through the shared boundary, and
/// count the closed loops that disappear.
inline PlanarMatching tl_compose(const PlanarMatching& a, const PlanarMatching& b) {
  if (a.top() != b.bottom()) throw std::invalid_argument("tl_compose: size mismatch");
  const int A = a.bottom(), M = a.top(), P = b.top();
  // Unified trace: a-points 0..A+M-1, b-points 0..M+P-1; middle j is
  // a-point A+j glued to b-point j.
  std::vector<int> result(A + P, -1);
  std::vector<bool> seen_mid(M, false);
  auto trace_from = [&](bool in_a, int pt) {
    // follow from an external point to its external partner
    bool cur_in_a = in_a;
    int cur = pt;
    while (true) {
      int q = cur_in_a ? a.partner(cur) : b.partner(cur);
      if (cur_in_a) {
        if (q < A) return std::pair<bool, int>(true, q);  // external bottom
        seen_mid[q - A] = true;
        cur_in_a = false;
        cur = q - A;  // b-bottom index
      } else {
        if (q >= M) return std::pair<bool, int>(false, q - M);  // external top
        seen_mid[q] = true;
        cur_in_a = true;
        cur = A + q;  // a-top index
      }
    }
  };
  for (int i = 0; i < A; ++i) {
    if (result[i] >= 0) continue;
    auto [at_bottom, j] = trace_from(true, i);
    int other = at_bottom ? j : A + j;
    result[i] = other;
    result[other] = i;
  }
  for (int t = 0; t < P; ++t) {
    if (result[A + t] >= 0) continue;
    auto [at_bottom, j] = trace_from(false, M + t);
    int other = at_bottom ? j : A + j;
    result[A + t] = other;
    result[other] = A + t;
  }
  long long loops = a.loops() + b.loops();
  for (int j0 = 0; j0 < M; ++j0) {
    if (seen_mid[j0]) continue;
    // closed loop: alternate a-arcs and b-arcs through the middle boundary
    ++loops;
    int cur = j0;
    bool via_a = true;
    do {
      seen_mid[cur] = true;
      cur = via_a ? a.partner(A + cur) - A : b.partner(cur);
      via_a = !via_a;
    } while (!(cur == j0 && via_a));
  }
  return PlanarMatching(A, P, std::move(result), loops);
}

namespace detail {

inline PlanarMatching straight_with(int arity_in, int arity_out, int p, bool pair_bottom, bool pair_top) {
  // helper for cup (pair_top), cap (pair_bottom) and turnback (both)
  std::vector<int> m(arity_in + arity_out, -1);
  auto bind = [&](int x, int y) { m[x] = y; m[y] = x; };
  if (pair_bottom && pair_top) {  // turnback at p on arity_in == arity_out
    bind(p - 1, p);
    bind(arity_in + p - 1, arity_in + p);
    for (int j = 0; j < arity_in; ++j) {
      if (j == p - 1 || j == p) continue;
      bind(j, arity_in + j);
    }
  } else if (pair_top) {  // cup: arity_out = arity_in + 2, new strands p, p+1
    bind(arity_in + p - 1, arity_in + p);
    for (int j = 0; j < arity_in; ++j) bind(j, arity_in + (j < p - 1 ? j : j + 2));
  } else if (pair_bottom) {  // cap: arity_out = arity_in - 2
    bind(p - 1, p);
    for (int j = 0; j < arity_in; ++j) {
      if (j == p - 1 || j == p) continue;
      bind(j, arity_in + (j < p - 1 ? j : j - 2));
    }
  }
  return PlanarMatching(arity_in, arity_out, std::move(m));
}

}  // namespace detail

/// Kauffman bracket by exhaustive resolution of the crossings.  Each
/// crossing is replaced by its two crossingless pictures; the second one
/// carries weight -v, so a state with r second-resolutions contributes
/// (-v)^r (v+v^-1)^loops.  For the right crossing the first picture is the
/// vertical (identity) smoothing, for the left crossing the turnback; this
/// pairing is what makes the normalized bracket match the quantum
/// evaluation exactly on every closed word.
inline LaurentPoly kauffman_bracket(const TangleWord& w) {
  if (!w.closed()) throw std::invalid_argument("kauffman_bracket: word must be closed");
  std::vector<std::size_t> crossing_at;
  for (std::size_t i = 0; i < w.steps().size(); ++i) {
    DiagramKind k = w.steps()[i].kind;
    if (k == DiagramKind::PosCross || k == DiagramKind::NegCross) crossing_at.push_back(i);
  }
  const std::size_t c = crossing_at.size();
  if (c > 24) throw std::invalid_argument("kauffman_bracket: too many crossings for the state sum");
  LaurentPoly total;
  const LaurentPoly loop_value = LaurentPoly::v(1) + LaurentPoly::v(-1);
  for (std::uint64_t mask = 0; mask < (1ull << c); ++mask) {
    PlanarMatching cur(0, 0, {});
    int arity = 0;
    std::size_t cross_idx = 0;
    for (const auto& d : w.steps()) {
      PlanarMatching step(0, 0, {});
      switch (d.kind) {
        case DiagramKind::Cup:
          step = detail::straight_with(arity, arity + 2, d.position, false, true);
          break;
        case DiagramKind::Cap:
          step = detail::straight_with(arity, arity - 2, d.position, true, false);
          break;
        default: {
          bool second = (mask >> cross_idx) & 1ull;
          ++cross_idx;
          bool turnback = (d.kind == DiagramKind::PosCross) == second;
          step = turnback ? detail::straight_with(arity, arity, d.position, true, true)
                          : PlanarMatching::identity(arity);
          break;
        }
      }
      cur = tl_compose(cur, step);
      arity += arity_delta(d.kind);
    }
    int seconds = static_cast<int>(__builtin_popcountll(mask));
    LaurentPoly weight = LaurentPoly::monomial(seconds % 2 == 0 ? 1 : -1, seconds);  // (-v)^seconds
    total += weight * loop_value.pow(static_cast<unsigned>(cur.loops()));
  }
  return total;
}

struct KauffmanInvariant {
  LaurentPoly bracket;
  LaurentPoly j_hat;
  LaurentPoly j;
};

/// J^ = (-1)^{n-} v^{n+ - 2 n-} <L>, J = J^ / (v + v^-1).
inline KauffmanInvariant kauffman_jones(const TangleWord& w) {
  KauffmanInvariant out;
  out.bracket = kauffman_bracket(w);
  int np = w.n_plus(), nm = w.n_minus();
  out.j_hat = out.bracket * LaurentPoly::monomial(nm % 2 == 0 ? 1 : -1, np - 2 * nm);
  out.j = out.j_hat.exact_div(LaurentPoly::v(1) + LaurentPoly::v(-1));
  return out;
}

/// Skein relation at one crossing site, with the left-crossing diagram
/// carrying v^2 and the right-crossing diagram v^-2:
///   v^2 J(left) - v^-2 J(right) = (v - v^-1) J(strands passing straight).
inline bool skein_check(const TangleWord& w, std::size_t crossing_index) {
  if (crossing_index >= w.steps().size())
    throw std::invalid_argument("skein_check: step index out of range");
  DiagramKind k = w.steps()[crossing_index].kind;
  if (k != DiagramKind::PosCross && k != DiagramKind::NegCross)
    throw std::invalid_argument("skein_check: step is not a crossing");
  auto with_kind = [&](DiagramKind nk) {
    auto steps = w.steps();
    steps[crossing_index].kind = nk;
    return TangleWord(w.source_arity(), std::move(steps));
  };
  auto deleted = [&] {
    auto steps = w.steps();
    steps.erase(steps.begin() + static_cast<std::ptrdiff_t>(crossing_index));
    return TangleWord(w.source_arity(), std::move(steps));
  }();
  LaurentPoly j_right = rt_invariant(with_kind(DiagramKind::PosCross)).j;
  LaurentPoly j_left = rt_invariant(with_kind(DiagramKind::NegCross)).j;
  LaurentPoly j_zero = rt_invariant(deleted).j;
  LaurentPoly lhs = LaurentPoly::v(2) * j_left - LaurentPoly::v(-2) * j_right;
  LaurentPoly rhs = (LaurentPoly::v(1) - LaurentPoly::v(-1)) * j_zero;
  return lhs == rhs;
}

}  // namespace heckekit
