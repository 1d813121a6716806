#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

namespace heckekit {

/// Dense row-major matrix over an arbitrary exact scalar type.
template <class T>
using Matrix = std::vector<std::vector<T>>;

namespace detail {
template <class T>
bool entry_is_zero(const T& x) {
  if constexpr (requires { x.is_zero(); }) return x.is_zero();
  else return x == 0;
}
}  // namespace detail

template <class T>
Matrix<T> zero_matrix(std::size_t r, std::size_t c, const T& zero) {
  return Matrix<T>(r, std::vector<T>(c, zero));
}

template <class T>
Matrix<T> identity_matrix(std::size_t n, const T& zero, const T& one) {
  Matrix<T> m = zero_matrix(n, n, zero);
  for (std::size_t i = 0; i < n; ++i) m[i][i] = one;
  return m;
}

template <class T>
Matrix<T> mat_add(const Matrix<T>& a, const Matrix<T>& b) {
  Matrix<T> r = a;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a[i].size(); ++j) r[i][j] = a[i][j] + b[i][j];
  return r;
}

template <class T>
Matrix<T> mat_sub(const Matrix<T>& a, const Matrix<T>& b) {
  Matrix<T> r = a;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a[i].size(); ++j) r[i][j] = a[i][j] - b[i][j];
  return r;
}

template <class T, class S>
Matrix<T> mat_scale(Matrix<T> a, const S& s) {
  for (auto& row : a)
    for (auto& x : row) x = x * s;
  return a;
}

/// Product skipping zero entries; the sparse generator matrices in this
/// toolkit make that worthwhile.
template <class T>
Matrix<T> mat_mul(const Matrix<T>& a, const Matrix<T>& b) {
  if (a.empty() || b.empty()) return {};
  const std::size_t n = a.size(), k = b.size(), m = b[0].size();
  if (a[0].size() != k) throw std::invalid_argument("mat_mul: dimension mismatch");
  Matrix<T> r = zero_matrix(n, m, T(a[0][0] - a[0][0]));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t t = 0; t < k; ++t) {
      if (detail::entry_is_zero(a[i][t])) continue;
      for (std::size_t j = 0; j < m; ++j) {
        if (detail::entry_is_zero(b[t][j])) continue;
        r[i][j] += a[i][t] * b[t][j];
      }
    }
  return r;
}

template <class T>
bool mat_eq(const Matrix<T>& a, const Matrix<T>& b) {
  return a == b;
}

template <class T>
bool mat_is_zero(const Matrix<T>& a) {
  for (const auto& row : a)
    for (const auto& x : row)
      if (!detail::entry_is_zero(x)) return false;
  return true;
}

template <class T>
std::vector<T> mat_apply(const Matrix<T>& a, const std::vector<T>& v) {
  std::vector<T> r(a.size(), T(a[0][0] - a[0][0]));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j) {
      if (detail::entry_is_zero(a[i][j]) || detail::entry_is_zero(v[j])) continue;
      r[i] += a[i][j] * v[j];
    }
  return r;
}

/// In-place reduced row echelon form over a field; returns the pivot columns.
/// Scalars must support exact +,-,*,/ and equality with zero.
template <class F>
std::vector<std::size_t> rref(Matrix<F>& m) {
  std::vector<std::size_t> pivots;
  if (m.empty()) return pivots;
  const std::size_t rows = m.size(), cols = m[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t sel = rows;
    for (std::size_t i = r; i < rows; ++i)
      if (!detail::entry_is_zero(m[i][c])) { sel = i; break; }
    if (sel == rows) continue;
    std::swap(m[r], m[sel]);
    F inv_p = m[r][c];
    for (std::size_t j = c; j < cols; ++j) m[r][j] = m[r][j] / inv_p;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || detail::entry_is_zero(m[i][c])) continue;
      F f = m[i][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] = m[i][j] - f * m[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

template <class F>
std::size_t mat_rank(Matrix<F> m) {
  return rref(m).size();
}

/// Basis of the null space of m (column vectors).
template <class F>
std::vector<std::vector<F>> kernel_basis(Matrix<F> m, const F& zero, const F& one) {
  if (m.empty()) return {};
  const std::size_t cols = m[0].size();
  auto pivots = rref(m);
  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<std::vector<F>> basis;
  for (std::size_t free_c = 0; free_c < cols; ++free_c) {
    if (is_pivot[free_c]) continue;
    std::vector<F> v(cols, zero);
    v[free_c] = one;
    for (std::size_t pr = 0; pr < pivots.size(); ++pr) {
      // Row pr has its pivot at pivots[pr]; solve for that coordinate.
      v[pivots[pr]] = zero - m[pr][free_c];
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

/// Solve A x = b exactly over a field (A given by columns stacked as a
/// matrix with rows = equations); returns nullopt when inconsistent.
template <class F>
std::optional<std::vector<F>> solve_linear(Matrix<F> a, std::vector<F> b, const F& zero) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows ? a[0].size() : 0;
  for (std::size_t i = 0; i < rows; ++i) a[i].push_back(b[i]);
  auto pivots = rref(a);
  // Inconsistent iff a pivot landed in the augmented column.
  if (!pivots.empty() && pivots.back() == cols) return std::nullopt;
  std::vector<F> x(cols, zero);
  for (std::size_t pr = 0; pr < pivots.size(); ++pr) x[pivots[pr]] = a[pr][cols];
  return x;
}

}  // namespace heckekit
