#include "rmatrix/catalog.hpp"

#include <algorithm>

namespace rmatrix {

namespace {

const Cyclotomic kOne = Cyclotomic(BigRat(1));
const Cyclotomic kHalf = Cyclotomic(BigRat(1, 2));

void tc_add(Tensor2Const& t, const BasisIndex& a, const BasisIndex& b, const Cyclotomic& v) {
  if (v.is_zero()) return;
  auto key = std::make_pair(a, b);
  auto it = t.e.find(key);
  if (it == t.e.end()) {
    t.e.emplace(key, v);
  } else {
    it->second += v;
    if (it->second.is_zero()) t.e.erase(it);
  }
}

/// outer(u, v) accumulated into t with an overall scalar.
void tc_outer(Tensor2Const& t, const LieCombo<Cyclotomic>& u, const LieCombo<Cyclotomic>& v,
              const Cyclotomic& scale) {
  for (const auto& [ia, ca] : u)
    for (const auto& [ib, cb] : v) tc_add(t, ia, ib, ca * cb * scale);
}

void tc_wedge(Tensor2Const& t, const LieCombo<Cyclotomic>& u, const LieCombo<Cyclotomic>& v) {
  tc_outer(t, u, v, kOne);
  tc_outer(t, v, u, -kOne);
}

RatFun rf_one() { return RatFun(kOne); }

/// 1/(y-x) as a designated rational function.
RatFun rf_pole() { return RatFun::one_over_diff(Var::y, Var::x); }

LieCombo<Cyclotomic> single(const BasisIndex& b) {
  LieCombo<Cyclotomic> out;
  out.emplace(b, kOne);
  return out;
}

}  // namespace

std::string flag_name(Flag f) {
  switch (f) {
    case Flag::CYBE: return "CYBE";
    case Flag::GCYBEOnly: return "GCYBE-only";
    case Flag::Skew: return "skew";
    case Flag::Nondegenerate: return "nondegenerate";
  }
  return "?";
}

CatalogEntry yang(int n) {
  if (n < 2) throw DimensionMismatch("yang: n must be >= 2");
  CatalogEntry out;
  out.name = "yang";
  out.n = n;
  out.tensor = t2_from_const(casimir(n), rf_pole());
  out.flags = {Flag::CYBE, Flag::Skew, Flag::Nondegenerate};
  return out;
}

CatalogEntry gcybe_only(int n) {
  if (n < 2) throw DimensionMismatch("gcybe_only: n must be >= 2");
  CatalogEntry out;
  out.name = "gcybe_only";
  out.n = n;
  out.tensor = t2_from_const(casimir(n), RatFun(MLaurent::monomial(Var::x, 1)) * rf_pole());
  out.flags = {Flag::GCYBEOnly, Flag::Nondegenerate};
  return out;
}

Tensor2Const nodal_standard_constant(int n) {
  Tensor2Const t;
  t.n = n;
  // 1/2 sum_j g_j* (x) g_j equals one half of the Cartan block of gamma.
  for (int k = 1; k < n; ++k)
    for (int l = 1; l < n; ++l) {
      BigRat c = cartan_dual_coeff(n, k, l);
      if (c != 0) tc_add(t, BasisIndex::H(k), BasisIndex::H(l), Cyclotomic(c / 2));
    }
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      tc_add(t, BasisIndex::E(j, i), BasisIndex::E(i, j), kOne);
  return t;
}

Tensor2Const nodal_cartan_correction(int n) {
  Tensor2Const t;
  t.n = n;
  std::vector<LieElem> gs = g_basis(n);
  Cyclotomic inv2n = Cyclotomic(BigRat(1, 2 * n));
  for (int j = 1; j < n; ++j) {
    Cyclotomic zj = Cyclotomic::zeta(static_cast<unsigned>(n), j);
    Cyclotomic coef = (kOne + zj) / (kOne - zj) * inv2n;
    tc_outer(t, gs[static_cast<std::size_t>(n - j - 1)].c, gs[static_cast<std::size_t>(j - 1)].c,
             coef);
  }
  return t;
}

Tensor2Const nodal_spectral_part(int n) {
  Tensor2Const t;
  t.n = n;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      // alpha = (i, j), p(alpha) = i - 1, tau(i, j) = (i-1, j-1)
      LieCombo<Cyclotomic> chain;
      for (int k = 1; k <= i - 1; ++k) combo_add(chain, BasisIndex::E(i - k, j - k), kOne);
      if (chain.empty()) continue;
      tc_wedge(t, single(BasisIndex::E(j, i)), chain);
    }
  return t;
}

Tensor2Const nodal_constant_part(int n) {
  return tconst_sum(tconst_sum(nodal_standard_constant(n), nodal_cartan_correction(n)),
                    nodal_spectral_part(n));
}

CatalogEntry nodal_closed_form(int n) {
  if (n < 2) throw DimensionMismatch("nodal_closed_form: n must be >= 2");
  CatalogEntry out;
  out.name = "nodal_closed_form";
  out.n = n;
  RatFun xpole = RatFun(MLaurent::monomial(Var::x, 1)) * rf_pole();  // x/(y-x)
  out.tensor = t2_sum(t2_from_const(casimir(n), xpole),
                      t2_from_const(nodal_constant_part(n), rf_one()));
  out.flags = {Flag::CYBE, Flag::Skew, Flag::Nondegenerate};
  return out;
}

CatalogEntry cuspidal_closed_form(int n) {
  if (n < 2) throw DimensionMismatch("cuspidal_closed_form: n must be >= 2");
  Tensor2Const c;
  c.n = n;
  for (int k = 1; k < n; ++k) {
    LieCombo<Cyclotomic> hstar = dual_basis_elem(n, BasisIndex::H(k));
    tc_wedge(c, hstar, single(BasisIndex::E(k + 1, k)));
  }
  for (int k = 1; k <= n; ++k)
    for (int l = 1; l <= n; ++l) {
      if (k < l + 2 || l < 1) continue;
      LieCombo<Cyclotomic> chain;
      for (int j = 0; j <= l - 1; ++j) combo_add(chain, BasisIndex::E(l - j, k - j - 1), kOne);
      tc_wedge(c, chain, single(BasisIndex::E(k, l)));
    }
  CatalogEntry out;
  out.name = "cuspidal_closed_form";
  out.n = n;
  out.tensor = t2_sum(t2_from_const(casimir(n), rf_pole()), t2_from_const(c, rf_one()));
  out.flags = {Flag::CYBE, Flag::Skew, Flag::Nondegenerate};
  return out;
}

CatalogEntry stolin_sl2() {
  const int n = 2;
  BasisIndex h = BasisIndex::H(1), e = BasisIndex::E(1, 2), f = BasisIndex::E(2, 1);
  Tensor2Const linear;  // f (x) h + h (x) f
  linear.n = n;
  tc_add(linear, f, h, kOne);
  tc_add(linear, h, f, kOne);
  Tensor2Const cubic;  // f (x) f
  cubic.n = n;
  tc_add(cubic, f, f, kOne);

  MLaurent ymx = diff_poly(Var::y, Var::x);
  RatFun lin_coef{ymx};
  RatFun cub_coef{ymx * ymx * ymx};

  CatalogEntry out;
  out.name = "stolin_sl2";
  out.n = n;
  out.tensor = t2_sum(t2_from_const(casimir(n), rf_pole()),
                      t2_sum(t2_from_const(linear, lin_coef),
                             t2_from_const(cubic, -cub_coef)));
  out.flags = {Flag::CYBE, Flag::Skew, Flag::Nondegenerate};
  return out;
}

std::vector<std::string> catalog_names() {
  return {"yang", "gcybe_only", "nodal_closed_form", "cuspidal_closed_form", "stolin_sl2"};
}

CatalogEntry catalog_emit(const std::string& name, int n) {
  if (name == "yang") return yang(n);
  if (name == "gcybe_only") return gcybe_only(n);
  if (name == "nodal_closed_form") return nodal_closed_form(n);
  if (name == "cuspidal_closed_form") return cuspidal_closed_form(n);
  if (name == "stolin_sl2") {
    if (n != 2) throw ParseError("stolin_sl2 is only defined for n = 2");
    return stolin_sl2();
  }
  throw ParseError("unknown catalog entry '" + name + "'");
}

}  // namespace rmatrix
