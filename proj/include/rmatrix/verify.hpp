#pragma once

#include "rmatrix/tensor.hpp"

namespace rmatrix {

/// g-valued polynomial in the series variable: degree -> element.
using GPoly = std::map<int, LieCombo<Cyclotomic>>;

/// [r12(x1,x2), r13(x1,x3)] + [r12(x1,x2), r23(x2,x3)] + [r32(x3,x2), r13(x1,x3)].
/// Under skew-symmetry the third term becomes [r13, r23] and the identity
/// reduces to the classical one.
Tensor3 gcybe_lhs(const Tensor2& r);

/// [r12(x1,x2), r13(x1,x3)] + [r13(x1,x3), r23(x2,x3)] + [r12(x1,x2), r23(x2,x3)].
Tensor3 cybe_lhs(const Tensor2& r);

/// flip(r) + r = 0, exactly.
bool skew_check(const Tensor2& r);

/// Evaluates r at the point and tests whether the induced map is invertible
/// (exact determinant). Throws PoleAtPoint when the point hits a designated
/// pole.
bool nondegenerate_at(const Tensor2& r, const BigRat& at_x, const BigRat& at_y);

/// Ad_G (x) Ad_G applied entrywise; G must be an invertible constant matrix.
Tensor2 transform_gauge(const Tensor2& r, const std::vector<std::vector<Cyclotomic>>& g);

/// Multiplication by a nonzero constant.
Tensor2 transform_rescale(const Tensor2& r, const Cyclotomic& c);

/// Substitutes x -> x + a, y -> y + a.
Tensor2 transform_shift(const Tensor2& r, const BigRat& a);

/// theta(f) = [f(x) (x) 1 + 1 (x) f(y), r(x,y)]; checks by exact division
/// that the (y-x) pole cancels and returns the polynomial tensor. Throws
/// NonRegularCobracket when the pole survives.
Tensor2 cobracket(const GPoly& f, const Tensor2& r);

/// The printed co-Jacobi composition is not well typed; both plausible
/// readings are implemented and the check ships disabled by default
/// (no acceptance criterion depends on it).
enum class CoJacobiReading { theta_on_first, theta_on_second };
bool cojacobi_check(const Tensor2& r, const GPoly& f, CoJacobiReading reading);

struct Verdict {
  std::string identity;
  bool pass = false;
  std::string witness;  // first offending entry when the check fails
};

/// Renders the first nonzero entry of a triple tensor for failure reports.
std::string first_witness(const Tensor3& t);
std::string first_witness(const Tensor2& t);

}  // namespace rmatrix
