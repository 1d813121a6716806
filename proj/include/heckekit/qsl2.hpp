#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "heckekit/laurent.hpp"
#include "heckekit/matrix.hpp"

namespace heckekit {

using LaurentMatrix = Matrix<LaurentPoly>;

enum class UqVariant { Plain, Hat };

/// A U_v(sl2)-module with chosen basis: the generator matrices E, F, K,
/// K^-1 over Z[v,v^-1].  Everything stays integral; the EF relation and the
/// Casimir are checked in cleared-denominator form.
struct UqModule {
  int dim = 0;
  std::vector<std::string> basis_labels;
  LaurentMatrix E, F, K, Kinv;
};

/// Defining relations: KE = v^2 EK, KF = v^-2 FK, K K^-1 = 1, and the EF
/// relation in the fraction-free form (v - v^-1)(EF - FE) = K - K^-1.
inline bool verify_relations(const UqModule& m) {
  const LaurentPoly v2 = LaurentPoly::v(2), vm2 = LaurentPoly::v(-2);
  auto id = identity_matrix<LaurentPoly>(m.dim, LaurentPoly(), LaurentPoly(1));
  if (!mat_eq(mat_mul(m.K, m.Kinv), id) || !mat_eq(mat_mul(m.Kinv, m.K), id)) return false;
  if (!mat_eq(mat_mul(m.K, m.E), mat_scale(mat_mul(m.E, m.K), v2))) return false;
  if (!mat_eq(mat_mul(m.K, m.F), mat_scale(mat_mul(m.F, m.K), vm2))) return false;
  auto comm = mat_sub(mat_mul(m.E, m.F), mat_mul(m.F, m.E));
  auto lhs = mat_scale(comm, LaurentPoly::v(1) - LaurentPoly::v(-1));
  return mat_eq(lhs, mat_sub(m.K, m.Kinv));
}

/// The simple (n+1)-dimensional module V_n (plain) or its twist V^_n (hat):
///   E w_k = [k+1] w_{k+1},  F w_k = (+-)[n-k+1] w_{k-1},
///   K w_k = (+-) v^{2k-n} w_k,
/// with w_{-1} = w_{n+1} = 0; the hat variant carries the minus signs.
inline UqModule simple_module(int n, UqVariant variant) {
  if (n < 0) throw std::invalid_argument("simple_module: n must be >= 0");
  UqModule m;
  m.dim = n + 1;
  for (int k = 0; k <= n; ++k)
    m.basis_labels.push_back(n == 1 ? std::string(1, static_cast<char>('0' + k)) : "w" + std::to_string(k));
  m.E = zero_matrix(m.dim, m.dim, LaurentPoly());
  m.F = zero_matrix(m.dim, m.dim, LaurentPoly());
  m.K = zero_matrix(m.dim, m.dim, LaurentPoly());
  m.Kinv = zero_matrix(m.dim, m.dim, LaurentPoly());
  const bool hat = variant == UqVariant::Hat;
  for (int k = 0; k <= n; ++k) {
    if (k + 1 <= n) m.E[k + 1][k] = quantum_integer(k + 1);
    if (k - 1 >= 0) {
      LaurentPoly f = quantum_integer(n - k + 1);
      m.F[k - 1][k] = hat ? -f : f;
    }
    LaurentPoly kk = LaurentPoly::v(2 * k - n), ki = LaurentPoly::v(n - 2 * k);
    m.K[k][k] = hat ? -kk : kk;
    m.Kinv[k][k] = hat ? -ki : ki;
  }
  if (!verify_relations(m)) throw std::logic_error("simple_module: defining relations fail");
  return m;
}

/// Tensor product along the comultiplication
///   E -> 1 (x) E + E (x) K,  F -> K^-1 (x) F + F (x) 1,  K -> K (x) K.
/// The first factor varies slowest, so 0-1 sequence labels read left to
/// right with the leftmost symbol as strand 1.
inline UqModule tensor(const UqModule& a, const UqModule& b) {
  UqModule m;
  m.dim = a.dim * b.dim;
  bool bits = true;
  for (const auto& l : a.basis_labels) bits = bits && l.size() == 1 && (l[0] == '0' || l[0] == '1');
  for (const auto& l : b.basis_labels) bits = bits && l.find_first_not_of("01") == std::string::npos;
  for (int i = 0; i < a.dim; ++i)
    for (int j = 0; j < b.dim; ++j)
      m.basis_labels.push_back(bits ? a.basis_labels[i] + b.basis_labels[j]
                                    : a.basis_labels[i] + "*" + b.basis_labels[j]);
  auto at = [&](int i, int j) { return i * b.dim + j; };
  m.E = zero_matrix(m.dim, m.dim, LaurentPoly());
  m.F = zero_matrix(m.dim, m.dim, LaurentPoly());
  m.K = zero_matrix(m.dim, m.dim, LaurentPoly());
  m.Kinv = zero_matrix(m.dim, m.dim, LaurentPoly());
  for (int i = 0; i < a.dim; ++i)
    for (int ip = 0; ip < a.dim; ++ip)
      for (int j = 0; j < b.dim; ++j)
        for (int jp = 0; jp < b.dim; ++jp) {
          LaurentPoly e = (i == ip ? b.E[j][jp] : LaurentPoly()) + a.E[i][ip] * b.K[j][jp];
          LaurentPoly f = a.Kinv[i][ip] * b.F[j][jp] + (j == jp ? a.F[i][ip] : LaurentPoly());
          if (!e.is_zero()) m.E[at(i, j)][at(ip, jp)] = e;
          if (!f.is_zero()) m.F[at(i, j)][at(ip, jp)] = f;
          LaurentPoly k = a.K[i][ip] * b.K[j][jp];
          LaurentPoly ki = a.Kinv[i][ip] * b.Kinv[j][jp];
          if (!k.is_zero()) m.K[at(i, j)][at(ip, jp)] = k;
          if (!ki.is_zero()) m.Kinv[at(i, j)][at(ip, jp)] = ki;
        }
  if (!verify_relations(m)) throw std::logic_error("tensor: defining relations fail");
  return m;
}

/// n-th tensor power (n >= 1).
inline UqModule tensor_power(const UqModule& a, int n) {
  if (n < 1) throw std::invalid_argument("tensor_power: n must be >= 1");
  UqModule m = a;
  for (int i = 1; i < n; ++i) m = tensor(m, a);
  return m;
}

/// Weight multiplicities read off the diagonal of K.  All modules built
/// here have K diagonal with entries (+-) v^k for a uniform sign; mixed or
/// non-monomial diagonals are rejected.
struct UqCharacter {
  int sign = 1;                 // +1: plain family, -1: hat family
  std::map<int, int> weights;   // exponent -> multiplicity
};

inline UqCharacter character(const UqModule& m) {
  UqCharacter ch;
  int sign = 0;
  for (int i = 0; i < m.dim; ++i) {
    for (int j = 0; j < m.dim; ++j)
      if (i != j && !m.K[i][j].is_zero())
        throw std::invalid_argument("character: K is not diagonal on this basis");
    const LaurentPoly& d = m.K[i][i];
    if (!d.is_unit_monomial())
      throw std::invalid_argument("character: K eigenvalue is not a signed power of v");
    int s = d.terms().begin()->second > 0 ? 1 : -1;
    if (sign == 0) sign = s;
    else if (sign != s) throw std::invalid_argument("character: mixed K-eigenvalue signs");
    ++ch.weights[d.terms().begin()->first];
  }
  ch.sign = sign == 0 ? 1 : sign;
  return ch;
}

/// Greedy highest-weight peeling: reconstructs the multiset of simple
/// summands (n, variant) from the character alone.
inline std::map<std::pair<int, UqVariant>, int> decompose_by_character(const UqModule& m) {
  UqCharacter ch = character(m);
  std::map<std::pair<int, UqVariant>, int> out;
  UqVariant variant = ch.sign > 0 ? UqVariant::Plain : UqVariant::Hat;
  while (!ch.weights.empty()) {
    int top = ch.weights.rbegin()->first;
    if (top < 0) throw std::logic_error("decompose_by_character: negative highest weight");
    ++out[{top, variant}];
    for (int k = -top; k <= top; k += 2) {
      auto it = ch.weights.find(k);
      if (it == ch.weights.end())
        throw std::logic_error("decompose_by_character: weight string missing " + std::to_string(k));
      if (--it->second == 0) ch.weights.erase(it);
    }
  }
  return out;
}

/// Cleared-denominator Casimir (v - v^-1)^2 FE + vK + v^-1 K^-1; on a
/// simple module it acts by a scalar, which is returned.
inline LaurentPoly verify_casimir_scalar(const UqModule& m) {
  LaurentPoly factor = (LaurentPoly::v(1) - LaurentPoly::v(-1));
  auto c = mat_scale(mat_mul(m.F, m.E), factor * factor);
  c = mat_add(c, mat_scale(m.K, LaurentPoly::v(1)));
  c = mat_add(c, mat_scale(m.Kinv, LaurentPoly::v(-1)));
  const LaurentPoly scalar = c.empty() ? LaurentPoly() : c[0][0];
  for (int i = 0; i < m.dim; ++i)
    for (int j = 0; j < m.dim; ++j)
      if ((i == j && c[i][j] != scalar) || (i != j && !c[i][j].is_zero()))
        throw std::logic_error("verify_casimir_scalar: Casimir is not scalar");
  return scalar;
}

}  // namespace heckekit
