#pragma once

#include <set>

#include "rmatrix/tensor.hpp"

namespace rmatrix {

enum class Flag { CYBE, GCYBEOnly, Skew, Nondegenerate };

std::string flag_name(Flag f);

struct CatalogEntry {
  std::string name;
  int n = 0;
  Tensor2 tensor;
  std::set<Flag> flags;
};

/// Yang's r-matrix gamma / (y - x).
CatalogEntry yang(int n);

/// x/(y-x) * gamma: solves the generalized equation but not the classical
/// one, and is not skew-symmetric.
CatalogEntry gcybe_only(int n);

/// The quasi-trigonometric solution attached to the nodal cubic:
/// r_st(x,y) + r_h + r_sp.
CatalogEntry nodal_closed_form(int n);

/// The rational solution attached to the cuspidal cubic:
/// gamma/(y-x) + sum h_k* ^ e_(k+1,k) + sum over k >= l+2 of
/// (sum_j e_(l-j,k-j-1)) ^ e_(k,l).
CatalogEntry cuspidal_closed_form(int n);

/// The sl_2 rational solution with cubic polynomial tail, homogenized with
/// z = y - x: gamma/(y-x) + (y-x)(f(x)h + h(x)f) - (y-x)^3 f(x)f.
CatalogEntry stolin_sl2();

// Constant building blocks of the nodal solution (exposed for the unitarity
// identity and tests).

/// gamma_hat = 1/2 sum g_j* (x) g_j + sum_(alpha>0) e_(-alpha) (x) e_alpha.
Tensor2Const nodal_standard_constant(int n);
/// r_h = 1/(2n) sum_j (1+zeta_j)/(1-zeta_j) g_(n-j) (x) g_j.
Tensor2Const nodal_cartan_correction(int n);
/// r_sp = sum_(alpha>0) e_(-alpha) ^ (sum_k e_(tau^k alpha)).
Tensor2Const nodal_spectral_part(int n);
/// The full constant part gamma_hat + r_h + r_sp: the Belavin-Drinfeld
/// constant solution, satisfying c + flip(c) = gamma.
Tensor2Const nodal_constant_part(int n);

std::vector<std::string> catalog_names();
/// Emits an entry by name; throws ParseError for unknown names or invalid n.
CatalogEntry catalog_emit(const std::string& name, int n);

}  // namespace rmatrix
