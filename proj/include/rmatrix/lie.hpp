#pragma once

#include <map>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "rmatrix/cyclotomic.hpp"

namespace rmatrix {

/// Index into the fixed basis of sl_n: the matrix units E(i,j) with
/// 1 <= i != j <= n, followed by H(k) = diag(0,..,0,1,-1,0,..,0) with the 1
/// at entry k, 1 <= k <= n-1. Basis order: all E(i,j) lexicographic in
/// (i,j), then H(1..n-1).
struct BasisIndex {
  enum class Kind : unsigned char { E = 0, H = 1 };
  Kind kind;
  int i;  // E: row; H: k
  int j;  // E: column; H: 0

  static BasisIndex E(int i, int j) { return {Kind::E, i, j}; }
  static BasisIndex H(int k) { return {Kind::H, k, 0}; }

  friend bool operator==(const BasisIndex& a, const BasisIndex& b) {
    return a.kind == b.kind && a.i == b.i && a.j == b.j;
  }
  friend bool operator<(const BasisIndex& a, const BasisIndex& b) {
    return std::tuple(a.kind, a.i, a.j) < std::tuple(b.kind, b.i, b.j);
  }

  /// "e_i_j" or "h_k".
  std::string name() const;
  static BasisIndex from_name(const std::string& s);
};

/// Sparse linear combination of basis elements with coefficients in K.
/// Zero coefficients are never stored.
template <class K>
using LieCombo = std::map<BasisIndex, K>;

/// An element of sl_n with exact cyclotomic coefficients.
struct LieElem {
  int n = 0;
  LieCombo<Cyclotomic> c;
};

/// Constant tensors in sl_n (x) sl_n and the triple product.
struct Tensor2Const {
  int n = 0;
  std::map<std::pair<BasisIndex, BasisIndex>, Cyclotomic> e;
};
struct Tensor3Const {
  int n = 0;
  std::map<std::tuple<BasisIndex, BasisIndex, BasisIndex>, Cyclotomic> e;
};

int sl_dim(int n);
std::vector<BasisIndex> sl_basis(int n);

/// Structure constants: [a, b] for basis elements, as an integer combination.
LieCombo<long> bracket_basis(int n, const BasisIndex& a, const BasisIndex& b);

/// tr(a*b) for basis elements (always a small integer).
long trace_pair(int n, const BasisIndex& a, const BasisIndex& b);

/// Inverse of the sl_n Cartan Gram matrix tr(h_i h_j):
/// entry (i,j) = min(i,j) * (n - max(i,j)) / n, 1-based.
BigRat cartan_dual_coeff(int n, int i, int j);

/// The trace-form dual of a basis element: E(i,j)* = E(j,i),
/// H(k)* = sum_l cartan_dual_coeff(n,k,l) H(l).
LieCombo<Cyclotomic> dual_basis_elem(int n, const BasisIndex& a);

// Generic sparse operations over any coefficient ring K supporting
// +, -, *, is_zero().

template <class K>
void combo_add(LieCombo<K>& acc, const BasisIndex& b, const K& v) {
  if (v.is_zero()) return;
  auto it = acc.find(b);
  if (it == acc.end()) {
    acc.emplace(b, v);
  } else {
    it->second += v;
    if (it->second.is_zero()) acc.erase(it);
  }
}

template <class K>
LieCombo<K> combo_scale(const LieCombo<K>& a, const K& s) {
  LieCombo<K> out;
  if (s.is_zero()) return out;
  for (const auto& [b, v] : a) combo_add(out, b, K(v * s));
  return out;
}

template <class K>
LieCombo<K> combo_sum(const LieCombo<K>& a, const LieCombo<K>& b) {
  LieCombo<K> out = a;
  for (const auto& [idx, v] : b) combo_add(out, idx, v);
  return out;
}

/// Lie bracket of sparse combinations, bilinear over K.
template <class K>
LieCombo<K> bracket(int n, const LieCombo<K>& a, const LieCombo<K>& b) {
  LieCombo<K> out;
  for (const auto& [ia, va] : a)
    for (const auto& [ib, vb] : b) {
      K prod = va * vb;
      if (prod.is_zero()) continue;
      for (const auto& [ic, sc] : bracket_basis(n, ia, ib))
        combo_add(out, ic, K(prod * K(Cyclotomic(BigRat(sc)))));
    }
  return out;
}

/// tr(a*b), bilinear over K.
template <class K>
K trace_form(int n, const LieCombo<K>& a, const LieCombo<K>& b) {
  K out{};
  for (const auto& [ia, va] : a)
    for (const auto& [ib, vb] : b) {
      long t = trace_pair(n, ia, ib);
      if (t == 0) continue;
      K term = va * vb;
      if (t != 1) term = term * K(Cyclotomic(BigRat(t)));
      out += term;
    }
  return out;
}

// Non-template entry points on LieElem (these check ranks).
LieElem lie_bracket(const LieElem& a, const LieElem& b);
Cyclotomic lie_trace_form(const LieElem& a, const LieElem& b);

/// The Casimir element gamma = sum_a x_a (x) x^a over trace-form dual
/// bases; tensor_to_map(casimir(n)) is the identity.
Tensor2Const casimir(int n);

/// g_j = diag(1, zeta_j, ..., zeta_j^(n-1)) expressed in the H basis,
/// for j = 1..n-1. Scalars live in Q(zeta_n).
std::vector<LieElem> g_basis(int n);
/// Trace-form duals of g_basis: g_j* = (1/n) g_(n-j).
std::vector<LieElem> g_dual(int n);

/// The linear map c |-> sum trace(a,c) b for t = sum a (x) b, as a dense
/// (n^2-1) x (n^2-1) matrix in the fixed basis (column = image of basis elem).
std::vector<std::vector<Cyclotomic>> tensor_to_map(const Tensor2Const& t);

/// Applies the map matrix to an element.
LieCombo<Cyclotomic> apply_map(int n, const std::vector<std::vector<Cyclotomic>>& m,
                               const LieCombo<Cyclotomic>& v);

/// [t, f (x) 1 + 1 (x) f] for a constant tensor and constant f.
Tensor2Const ad_invariance_bracket(const Tensor2Const& t, const LieElem& f);

Tensor2Const tconst_flip(const Tensor2Const& t);
Tensor2Const tconst_sum(const Tensor2Const& a, const Tensor2Const& b);
Tensor2Const tconst_scale(const Tensor2Const& a, const Cyclotomic& s);
bool tconst_equal(const Tensor2Const& a, const Tensor2Const& b);

/// Coordinates of an n x n traceless matrix in the fixed basis: off-diagonal
/// entries map to E(i,j), the diagonal to partial sums in the H basis.
/// Throws when the trace is nonzero.
template <class K>
LieCombo<K> matrix_to_combo(int n, const std::vector<std::vector<K>>& m) {
  LieCombo<K> out;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j) combo_add(out, BasisIndex::E(i + 1, j + 1), m[i][j]);
  K partial{};
  for (int k = 0; k < n - 1; ++k) {
    partial += m[k][k];
    combo_add(out, BasisIndex::H(k + 1), partial);
  }
  partial += m[n - 1][n - 1];
  if (!partial.is_zero()) throw DimensionMismatch("matrix_to_combo: matrix has nonzero trace");
  return out;
}

/// The dense n x n matrix of a combination (inverse of matrix_to_combo).
template <class K>
std::vector<std::vector<K>> combo_to_matrix(int n, const LieCombo<K>& v) {
  std::vector<std::vector<K>> m(static_cast<std::size_t>(n),
                                std::vector<K>(static_cast<std::size_t>(n)));
  for (const auto& [b, coef] : v) {
    if (b.kind == BasisIndex::Kind::E) {
      m[static_cast<std::size_t>(b.i - 1)][static_cast<std::size_t>(b.j - 1)] += coef;
    } else {
      m[static_cast<std::size_t>(b.i - 1)][static_cast<std::size_t>(b.i - 1)] += coef;
      m[static_cast<std::size_t>(b.i)][static_cast<std::size_t>(b.i)] -= coef;
    }
  }
  return m;
}

}  // namespace rmatrix
