#pragma once

#include <optional>
#include <vector>

#include "rmatrix/cyclotomic.hpp"

namespace rmatrix {

/// Dense univariate polynomial over a field K (coefficients low to high, no
/// trailing zeros). K must provide +, -, *, /, is_zero(), and be
/// constructible from long.
template <class K>
struct UPoly {
  std::vector<K> c;

  UPoly() = default;
  explicit UPoly(K k) {
    if (!k.is_zero()) c.push_back(std::move(k));
  }
  static UPoly monomial(int deg, K k) {
    UPoly p;
    if (k.is_zero()) return p;
    p.c.assign(static_cast<std::size_t>(deg) + 1, K(0));
    p.c.back() = std::move(k);
    return p;
  }

  bool is_zero() const { return c.empty(); }
  int degree() const { return static_cast<int>(c.size()) - 1; }
  void strip() {
    while (!c.empty() && c.back().is_zero()) c.pop_back();
  }

  friend bool operator==(const UPoly& a, const UPoly& b) { return a.c == b.c; }

  UPoly operator-() const {
    UPoly out = *this;
    for (auto& k : out.c) k = -k;
    return out;
  }
  friend UPoly operator+(UPoly a, const UPoly& b) {
    if (a.c.size() < b.c.size()) a.c.resize(b.c.size(), K(0));
    for (std::size_t i = 0; i < b.c.size(); ++i) a.c[i] += b.c[i];
    a.strip();
    return a;
  }
  friend UPoly operator-(UPoly a, const UPoly& b) { return a + (-b); }
  friend UPoly operator*(const UPoly& a, const UPoly& b) {
    UPoly out;
    if (a.is_zero() || b.is_zero()) return out;
    out.c.assign(a.c.size() + b.c.size() - 1, K(0));
    for (std::size_t i = 0; i < a.c.size(); ++i)
      for (std::size_t j = 0; j < b.c.size(); ++j) out.c[i + j] += a.c[i] * b.c[j];
    out.strip();
    return out;
  }

  static void divmod(UPoly num, const UPoly& den, UPoly& quot, UPoly& rem) {
    if (den.is_zero()) throw DivisionByZero("polynomial division by zero");
    quot = UPoly();
    if (num.c.size() >= den.c.size())
      quot.c.assign(num.c.size() - den.c.size() + 1, K(0));
    while (!num.is_zero() && num.c.size() >= den.c.size()) {
      K f = num.c.back() / den.c.back();
      std::size_t shift = num.c.size() - den.c.size();
      quot.c[shift] = f;
      for (std::size_t i = 0; i < den.c.size(); ++i) num.c[shift + i] -= f * den.c[i];
      num.strip();
    }
    quot.strip();
    rem = std::move(num);
  }

  /// Monic gcd.
  static UPoly gcd(UPoly a, UPoly b) {
    while (!b.is_zero()) {
      UPoly q, r;
      divmod(a, b, q, r);
      a = std::move(b);
      b = std::move(r);
    }
    if (!a.is_zero()) {
      K lead = a.c.back();
      for (auto& k : a.c) k = k / lead;
    }
    return a;
  }
};

/// Fraction of univariate polynomials, normalized: gcd cancelled, monic
/// denominator. Forms a field.
template <class K>
struct UFrac {
  UPoly<K> num;
  UPoly<K> den;

  UFrac() : den(UPoly<K>(K(1))) {}
  UFrac(long v) : num(UPoly<K>(K(v))), den(UPoly<K>(K(1))) {}  // NOLINT
  explicit UFrac(K k) : num(UPoly<K>(std::move(k))), den(UPoly<K>(K(1))) {}
  UFrac(UPoly<K> n, UPoly<K> d) : num(std::move(n)), den(std::move(d)) { normalize(); }

  void normalize() {
    if (den.is_zero()) throw DivisionByZero("UFrac: zero denominator");
    if (num.is_zero()) {
      den = UPoly<K>(K(1));
      return;
    }
    UPoly<K> g = UPoly<K>::gcd(num, den);
    if (g.degree() > 0) {
      UPoly<K> q, r;
      UPoly<K>::divmod(num, g, q, r);
      num = std::move(q);
      UPoly<K>::divmod(den, g, q, r);
      den = std::move(q);
    }
    K lead = den.c.back();
    if (!(lead == K(1))) {
      for (auto& k : num.c) k = k / lead;
      for (auto& k : den.c) k = k / lead;
    }
  }

  bool is_zero() const { return num.is_zero(); }

  UFrac operator-() const {
    UFrac out = *this;
    out.num = -out.num;
    return out;
  }
  friend UFrac operator+(const UFrac& a, const UFrac& b) {
    return UFrac(a.num * b.den + b.num * a.den, a.den * b.den);
  }
  friend UFrac operator-(const UFrac& a, const UFrac& b) { return a + (-b); }
  friend UFrac operator*(const UFrac& a, const UFrac& b) {
    return UFrac(a.num * b.num, a.den * b.den);
  }
  friend UFrac operator/(const UFrac& a, const UFrac& b) {
    if (b.is_zero()) throw DivisionByZero("UFrac: division by zero");
    return UFrac(a.num * b.den, a.den * b.num);
  }
  UFrac& operator+=(const UFrac& o) { return *this = *this + o; }
  UFrac& operator-=(const UFrac& o) { return *this = *this - o; }
  UFrac& operator*=(const UFrac& o) { return *this = *this * o; }

  friend bool operator==(const UFrac& a, const UFrac& b) {
    return a.num == b.num && a.den == b.den;  // canonical form
  }
};

template <class F>
using Mat = std::vector<std::vector<F>>;

/// In-place reduced row echelon form with first-nonzero pivoting; returns the
/// pivot columns in order. Deterministic for a fixed column order.
template <class F>
std::vector<std::size_t> rref(Mat<F>& m) {
  std::vector<std::size_t> pivots;
  if (m.empty()) return pivots;
  std::size_t rows = m.size(), cols = m[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t sel = rows;
    for (std::size_t i = r; i < rows; ++i)
      if (!m[i][c].is_zero()) {
        sel = i;
        break;
      }
    if (sel == rows) continue;
    std::swap(m[r], m[sel]);
    F inv_pivot = F(1) / m[r][c];
    for (std::size_t j = c; j < cols; ++j) m[r][j] = m[r][j] * inv_pivot;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c].is_zero()) continue;
      F factor = m[i][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] = m[i][j] - factor * m[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

template <class F>
std::size_t rank(Mat<F> m) {
  return rref(m).size();
}

/// Basis of the right nullspace, one vector per free column, in increasing
/// free-column order with a 1 in the free coordinate.
template <class F>
std::vector<std::vector<F>> nullspace(Mat<F> m) {
  std::vector<std::vector<F>> out;
  if (m.empty()) return out;
  std::size_t cols = m[0].size();
  std::vector<std::size_t> pivots = rref(m);
  std::vector<bool> is_pivot(cols, false);
  for (std::size_t c : pivots) is_pivot[c] = true;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<F> v(cols, F(0));
    v[f] = F(1);
    for (std::size_t p = 0; p < pivots.size(); ++p) v[pivots[p]] = -m[p][f];
    out.push_back(std::move(v));
  }
  return out;
}

/// Solves A x = b; returns nullopt when inconsistent. When the system is
/// underdetermined the free variables are set to zero.
template <class F>
std::optional<std::vector<F>> solve(Mat<F> a, const std::vector<F>& b) {
  std::size_t rows = a.size();
  if (rows != b.size()) throw Error("solve: size mismatch");
  std::size_t cols = rows == 0 ? 0 : a[0].size();
  for (std::size_t i = 0; i < rows; ++i) a[i].push_back(b[i]);
  std::vector<std::size_t> pivots = rref(a);
  // inconsistency: pivot in the augmented column
  if (!pivots.empty() && pivots.back() == cols) return std::nullopt;
  std::vector<F> x(cols, F(0));
  for (std::size_t p = 0; p < pivots.size(); ++p) x[pivots[p]] = a[p][cols];
  return x;
}

/// Exact determinant by fraction-producing Gaussian elimination.
template <class F>
F det(Mat<F> m) {
  std::size_t nrows = m.size();
  F result = F(1);
  for (std::size_t c = 0; c < nrows; ++c) {
    std::size_t sel = nrows;
    for (std::size_t i = c; i < nrows; ++i)
      if (!m[i][c].is_zero()) {
        sel = i;
        break;
      }
    if (sel == nrows) return F(0);
    if (sel != c) {
      std::swap(m[c], m[sel]);
      result = -result;
    }
    result = result * m[c][c];
    F inv_pivot = F(1) / m[c][c];
    for (std::size_t i = c + 1; i < nrows; ++i) {
      if (m[i][c].is_zero()) continue;
      F factor = m[i][c] * inv_pivot;
      for (std::size_t j = c; j < nrows; ++j) m[i][j] = m[i][j] - factor * m[c][j];
    }
  }
  return result;
}

}  // namespace rmatrix
