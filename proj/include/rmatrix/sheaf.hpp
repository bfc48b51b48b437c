#pragma once

#include "rmatrix/linalg.hpp"
#include "rmatrix/tensor.hpp"

namespace rmatrix {

/// The two singular Weierstrass cubics. Coordinate conventions are fixed:
/// the nodal curve uses the form dz/z, the cuspidal curve dz.
enum class CurveKind { nodal, cuspidal };

std::string curve_name(CurveKind k);
CurveKind curve_from_name(const std::string& s);

using RMat = std::vector<std::vector<BigRat>>;

/// Matrix data of a torsion-free sheaf near the singular point: the pair
/// (Theta_0, Theta_inf) in the nodal case, (Theta_o, Theta_eps) in the
/// cuspidal case, each n x m over the rationals.
struct MatTriple {
  int n = 0;
  int m = 0;
  CurveKind curve = CurveKind::nodal;
  RMat first;
  RMat second;
};

/// The canonical simple triple with Euler characteristic one (m = n+1):
/// nodal Theta_0 = [0 | I_n], Theta_inf = [I_n | 0];
/// cuspidal Theta_o = [I_n | 0], Theta_eps = [0 | I_n].
MatTriple canonical_triple(int n, CurveKind curve);

/// chi(F) = deg + (m - n).
long euler_characteristic(long deg, int n, int m);

/// An element A + zB of the solution space, with A, B traceless n x n
/// matrices whose entries are rational in x.
struct SolPair {
  std::vector<std::vector<RatFun>> A;
  std::vector<std::vector<RatFun>> B;
};

struct SolBasis {
  int n = 0;
  CurveKind curve = CurveKind::nodal;
  std::vector<SolPair> elems;
};

/// Solves the defining homogeneous linear constraints over Q(x) --
/// nodal: A Theta_0 = -x Theta_0 C and B Theta_inf = Theta_inf C;
/// cuspidal: B Theta_o = Theta_o D and A Theta_o + B Theta_eps =
/// (Theta_eps - x Theta_o) D -- with tr A = tr B = 0, eliminating the gluing
/// matrix first, and returns the reduced-echelon basis of the (A, B) part.
SolBasis sol_space(const MatTriple& triple);
SolBasis sol_space(int n, CurveKind curve);

/// Membership of (A + zB) in the span of the basis over Q(x).
bool sol_contains(const SolBasis& basis, const SolPair& phi);

/// nodal: (1/x)(A + xB); cuspidal: A + xB.
LieCombo<RatFun> res_map(const SolPair& phi, CurveKind curve, int n);

/// (A + yB) / (y - x).
LieCombo<RatFun> ev_map(const SolPair& phi, int n);

/// The matrix of ev o res^(-1) on the fixed basis of sl_n; entries are
/// rational in x and y. Throws SingularMatrix when the residue matrix is
/// identically singular.
Mat<RatFun> rsharp(int n, CurveKind curve);

/// The geometric r-matrix: the tensor whose induced map (pairing the first
/// slot by the trace form) is ev o res^(-1). Output is normalized so that it
/// matches the closed forms of the catalog verbatim.
Tensor2 geometric_r(int n, CurveKind curve);
Tensor2 geometric_r(const MatTriple& triple);

}  // namespace rmatrix
