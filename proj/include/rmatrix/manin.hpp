#pragma once

#include "rmatrix/sheaf.hpp"
#include "rmatrix/tensor.hpp"
#include "rmatrix/verify.hpp"

namespace rmatrix {

/// g-valued Laurent polynomial in the series variable: exponent -> element.
using GLaurent = std::map<int, LieCombo<Cyclotomic>>;

GLaurent glaurent_sum(const GLaurent& a, const GLaurent& b);
GLaurent glaurent_scale(const GLaurent& a, const Cyclotomic& s);
GLaurent glaurent_shift(const GLaurent& a, int k);  // multiply by z^k
bool glaurent_is_zero(const GLaurent& a);

/// Truncated expansion data of a two-variable solution in the region
/// |x| < |y|: the tensor decomposed as sum over k, a of
/// (x^k x_a) (x) f_(k,a)(y), with f stored as a Laurent element in the
/// series variable, exponents within [-N-1, N].
///
/// canonical records whether the input had the shape gamma/(y-x) + v with v
/// polynomial: residue exactly the Casimir element and all remaining
/// exponents non-negative. A mismatch (for instance the shifted principal
/// parts of x/(y-x) gamma) is reported through this flag, never silently
/// repaired.
struct SeriesTensor {
  int n = 0;
  int order = 0;
  bool canonical = false;
  std::map<std::pair<int, BasisIndex>, GLaurent> coeff;

  const GLaurent& at(int k, const BasisIndex& a) const;
};

/// The W-space basis candidates f_(k,a) = z^(-k-1) x^a + p_(k,a) assembled
/// from a SeriesTensor (for canonical input; otherwise the raw attachments).
struct WBasis {
  int n = 0;
  int order = 0;
  bool canonical = false;
  std::map<std::pair<int, BasisIndex>, GLaurent> f;

  const GLaurent& at(int k, const BasisIndex& a) const;
};

/// Expands r to order N. Requires at most a simple pole along (y - x);
/// throws PoleOrderError otherwise.
SeriesTensor expand(const Tensor2& r, int order);

/// res_0(trace(a,b) z^(l+k) dz) extended bilinearly: trace_form(a,b) when the
/// exponents sum to -1, else 0.
Cyclotomic residue_pairing(int n, const GLaurent& f, const GLaurent& g);

WBasis w_basis(const SeriesTensor& s);

/// True iff the series has the canonical shape and every pairing
/// determined by the truncation (k + r <= N - 1) vanishes.
bool coisotropy_check(const WBasis& w);

/// (a) the principal parts are linearly independent and
/// (b) residue_pairing(f_(k,a), z^r x_b) = delta_(k,r) delta_(a,b)
/// for all k, r <= N.
bool lagrangian_complement_check(const WBasis& w);

/// Recomputes inside span(f) the basis dual to the topological basis
/// (z^k x_a) and returns the rebuilt series; throws DualityViolated when the
/// pairing block is singular. For a series that already satisfies the
/// duality this is the identity.
SeriesTensor dual_basis_reconstruct(const WBasis& w);

/// Multiplication by z^-2 and z^-3 maps span{f_(k,a) : k <= N-3} into
/// span{f_(k,a) : k <= N}.
bool s_stability_check(const WBasis& w);

/// Scalar Laurent polynomial with cyclotomic coefficients.
using ScalarLaurent = std::map<int, Cyclotomic>;
using MatLaurent = std::vector<std::vector<ScalarLaurent>>;

/// Matrix Laurent data at the preimages of the singular point: the nodal
/// curve has two branches (expansions at 0 and at infinity, both in the
/// normalization coordinate), the cuspidal curve one (at infinity).
struct GermData {
  CurveKind curve = CurveKind::cuspidal;
  MatLaurent at_zero;  // nodal only
  MatLaurent at_inf;
};

/// res_s of trace(f g) * omega summed over the preimages of the singular
/// point, with omega = dz/z (nodal) or dz (cuspidal). All data exponents
/// must lie within [-trunc, trunc]; otherwise TruncationError.
Cyclotomic residue_at_singularity(const GermData& f, const GermData& g, int trunc);

}  // namespace rmatrix
