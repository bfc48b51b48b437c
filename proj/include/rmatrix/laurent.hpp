#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>

#include "rmatrix/cyclotomic.hpp"

namespace rmatrix {

/// The fixed variable universe. Spectral tensors use (x, y), triple-product
/// identities use (x1, x2, x3), series expansions use z.
enum class Var : int { x = 0, y = 1, z = 2, x1 = 3, x2 = 4, x3 = 5 };

constexpr int kNumVars = 6;

std::string var_name(Var v);
std::optional<Var> var_from_name(const std::string& s);

using ExpVec = std::array<int, kNumVars>;

/// Sparse multivariate Laurent polynomial over Cyclotomic. Exponents may be
/// negative; zero coefficients are never stored.
class MLaurent {
 public:
  MLaurent() = default;
  explicit MLaurent(const Cyclotomic& c);

  static MLaurent monomial(Var v, int exp, const Cyclotomic& coef = Cyclotomic(BigRat(1)));

  const std::map<ExpVec, Cyclotomic>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  /// True when the value is a constant (single term with zero exponents or 0).
  bool is_constant() const;
  Cyclotomic constant_value() const;  // throws unless is_constant()

  void add_term(const ExpVec& e, const Cyclotomic& c);

  MLaurent operator-() const;
  MLaurent& operator+=(const MLaurent& o);
  MLaurent& operator-=(const MLaurent& o);
  friend MLaurent operator+(MLaurent a, const MLaurent& b) { return a += b; }
  friend MLaurent operator-(MLaurent a, const MLaurent& b) { return a -= b; }
  friend MLaurent operator*(const MLaurent& a, const MLaurent& b);
  MLaurent& operator*=(const MLaurent& o) { return *this = *this * o; }

  friend bool operator==(const MLaurent& a, const MLaurent& b) { return a.terms_ == b.terms_; }

  MLaurent scaled(const Cyclotomic& c) const;

  /// Exponent range of a variable over all terms (0,0 when absent).
  void exponent_range(Var v, int& lo, int& hi) const;
  bool depends_on(Var v) const;

  /// Renames variables; the map must be injective on the variables present.
  MLaurent rename(const std::map<Var, Var>& m) const;
  /// Swaps two variables.
  MLaurent swapped(Var a, Var b) const;

  /// Substitutes v := v + a (binomial expansion); requires all exponents of v
  /// to be non-negative.
  MLaurent shifted(Var v, const BigRat& a) const;

  /// Substitutes v := w (collapsing exponents; w may already occur).
  MLaurent substituted_var(Var v, Var w) const;

  /// Evaluates the given variables at rational points; variables outside the
  /// map are kept. Negative exponents require a nonzero value.
  MLaurent evaluated(const std::map<Var, BigRat>& point) const;

  /// Exact division by (a - b); returns false when not divisible.
  bool divide_exact_by_diff(Var a, Var b, MLaurent& quotient) const;

  /// Multiplies by v^k (k may be negative).
  MLaurent times_power(Var v, int k) const;

  std::string to_string() const;

 private:
  std::map<ExpVec, Cyclotomic> terms_;
};

/// The Laurent polynomial (a - b).
MLaurent diff_poly(Var a, Var b);

}  // namespace rmatrix
