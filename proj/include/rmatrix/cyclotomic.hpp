#pragma once

#include <vector>

#include "rmatrix/rational.hpp"

namespace rmatrix {

/// Dense univariate polynomial over the rationals, coefficients low to high,
/// no trailing zeros. Used for cyclotomic polynomials and field reduction.
using QPoly = std::vector<BigRat>;

unsigned euler_phi(unsigned n);

/// The n-th cyclotomic polynomial, computed by exact division of t^n - 1 by
/// the product of the lower cyclotomic polynomials over proper divisors.
QPoly cyclotomic_poly(unsigned n);

/// An element of the cyclotomic field Q(zeta_n), stored as the canonical
/// residue modulo the n-th cyclotomic polynomial. Elements that reduce to a
/// rational constant are demoted to order 1, so rational values have a single
/// representation regardless of how they were produced.
///
/// Arithmetic requires equal orders; order-1 values (plain rationals) promote
/// implicitly, any other mix throws IncompatibleOrders.
class Cyclotomic {
 public:
  Cyclotomic() : order_(1), coeffs_{} {}
  Cyclotomic(const BigRat& r);  // NOLINT: rational constants embed implicitly
  Cyclotomic(long v) : Cyclotomic(BigRat(v)) {}

  /// zeta(n, j) = exp(2*pi*i*j/n) as an element of Q(zeta_n).
  static Cyclotomic zeta(unsigned n, long j);

  /// Builds an element from polynomial coefficients in zeta_n (any length;
  /// reduced modulo the cyclotomic polynomial).
  static Cyclotomic from_poly(unsigned n, QPoly coeffs);

  unsigned order() const { return order_; }
  const std::vector<BigRat>& coeffs() const { return coeffs_; }

  bool is_zero() const { return coeffs_.empty(); }
  bool is_rational() const { return order_ == 1; }
  /// The value as a rational; throws unless is_rational().
  BigRat rational_value() const;

  Cyclotomic operator-() const;
  Cyclotomic& operator+=(const Cyclotomic& o);
  Cyclotomic& operator-=(const Cyclotomic& o);
  Cyclotomic& operator*=(const Cyclotomic& o);

  friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
  friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
  friend Cyclotomic operator*(Cyclotomic a, const Cyclotomic& b) { return a *= b; }

  /// Multiplicative inverse via the extended Euclidean algorithm with the
  /// cyclotomic polynomial. Throws DivisionByZero on zero.
  Cyclotomic inv() const;
  friend Cyclotomic operator/(const Cyclotomic& a, const Cyclotomic& b) { return a * b.inv(); }

  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);
  friend bool operator!=(const Cyclotomic& a, const Cyclotomic& b) { return !(a == b); }

  /// Total order used only for deterministic container keys.
  friend bool operator<(const Cyclotomic& a, const Cyclotomic& b);

  std::string to_string() const;

 private:
  Cyclotomic(unsigned order, std::vector<BigRat> reduced);
  void canonicalize();
  static unsigned common_order(const Cyclotomic& a, const Cyclotomic& b);

  unsigned order_;
  std::vector<BigRat> coeffs_;  // size <= phi(order_), trailing zeros stripped
};

}  // namespace rmatrix
