#pragma once

#include "rmatrix/laurent.hpp"

namespace rmatrix {

/// A designated denominator factor (a - b) with a < b in the variable order.
struct DiffFactor {
  Var a, b;
  friend bool operator==(const DiffFactor& x, const DiffFactor& y) {
    return x.a == y.a && x.b == y.b;
  }
  friend bool operator<(const DiffFactor& x, const DiffFactor& y) {
    return std::pair(x.a, x.b) < std::pair(y.a, y.b);
  }
};

/// A rational function with Laurent numerator and denominator restricted to a
/// product of designated difference factors (a - b). Poles along single
/// variables are carried as negative Laurent exponents of the numerator, so
/// the denominator map holds only difference factors. Equality is decided by
/// cross-multiplication; normalization cancels any designated factor that
/// exactly divides the numerator.
class RatFun {
 public:
  RatFun() = default;
  explicit RatFun(const Cyclotomic& c) : num_(c) {}
  explicit RatFun(MLaurent num) : num_(std::move(num)) {}
  RatFun(MLaurent num, std::map<DiffFactor, int> den);

  /// 1 / (a - b); flips sign into the numerator when a > b.
  static RatFun one_over_diff(Var a, Var b);

  const MLaurent& num() const { return num_; }
  const std::map<DiffFactor, int>& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  /// True when the denominator is trivial (the value is a Laurent polynomial).
  bool is_laurent() const { return den_.empty(); }
  bool is_constant() const { return den_.empty() && num_.is_constant(); }
  Cyclotomic constant_value() const { return num_.constant_value(); }

  RatFun operator-() const;
  RatFun& operator+=(const RatFun& o);
  RatFun& operator-=(const RatFun& o);
  friend RatFun operator+(RatFun a, const RatFun& b) { return a += b; }
  friend RatFun operator-(RatFun a, const RatFun& b) { return a -= b; }
  friend RatFun operator*(const RatFun& a, const RatFun& b);
  RatFun& operator*=(const RatFun& o) { return *this = *this * o; }

  RatFun scaled(const Cyclotomic& c) const;

  /// Exact equality of values (cross-multiplication).
  friend bool operator==(const RatFun& a, const RatFun& b);
  friend bool operator!=(const RatFun& a, const RatFun& b) { return !(a == b); }

  /// Swaps the two spectral variables x and y (used by the tensor flip).
  RatFun swapped_xy() const;
  /// Injective variable renaming.
  RatFun renamed(const std::map<Var, Var>& m) const;
  /// Substitutes v := v + a in numerator; difference factors between two
  /// shifted variables are unchanged, any other dependence on v must be
  /// polynomial.
  RatFun shifted_xy(const BigRat& a) const;
  /// Evaluates at a rational point; throws PoleAtPoint when a denominator
  /// factor vanishes. All variables the value depends on must be assigned.
  Cyclotomic evaluated(const std::map<Var, BigRat>& point) const;

  std::string to_string() const;

 private:
  void normalize();

  MLaurent num_;
  std::map<DiffFactor, int> den_;  // factor -> multiplicity >= 1
};

}  // namespace rmatrix
