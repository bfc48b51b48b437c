#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "rmatrix/catalog.hpp"
#include "rmatrix/manin.hpp"

using namespace rmatrix;

namespace {

const Cyclotomic kOne(BigRat(1));
const Cyclotomic kHalf(BigRat(1, 2));

GLaurent gl(int exp, const BasisIndex& b, const Cyclotomic& c = kOne) {
  return GLaurent{{exp, LieCombo<Cyclotomic>{{b, c}}}};
}

bool combo_equals(const LieCombo<Cyclotomic>& a, const LieCombo<Cyclotomic>& b) { return a == b; }

}  // namespace

TEST_CASE("expansion of yang: principal parts only") {
  SeriesTensor s = expand(yang(2).tensor, 3);
  CHECK(s.canonical);
  CHECK(s.order == 3);
  for (int k = 0; k <= 3; ++k)
    for (const BasisIndex& a : sl_basis(2)) {
      const GLaurent& f = s.at(k, a);
      REQUIRE(f.size() == 1);
      CHECK(f.count(-k - 1) == 1);
      CHECK(combo_equals(f.at(-k - 1), dual_basis_elem(2, a)));
    }
}

TEST_CASE("expansion of the cuspidal solution reproduces the constant term") {
  SeriesTensor s = expand(cuspidal_closed_form(2).tensor, 2);
  CHECK(s.canonical);
  // constant part (1/2)(h (x) f - f (x) h): the k = 0 attachments pick up
  // p_(0,h) = f/2 and p_(0,f) = -h/2
  const GLaurent& fh = s.at(0, BasisIndex::H(1));
  REQUIRE(fh.count(0) == 1);
  CHECK(combo_equals(fh.at(0), LieCombo<Cyclotomic>{{BasisIndex::E(2, 1), kHalf}}));
  const GLaurent& ff = s.at(0, BasisIndex::E(2, 1));
  REQUIRE(ff.count(0) == 1);
  CHECK(combo_equals(ff.at(0), LieCombo<Cyclotomic>{{BasisIndex::H(1), -kHalf}}));
  // all k >= 1 attachments are purely principal
  for (int k = 1; k <= 2; ++k)
    for (const BasisIndex& a : sl_basis(2)) {
      const GLaurent& f = s.at(k, a);
      REQUIRE(f.size() == 1);
      CHECK(combo_equals(f.at(-k - 1), dual_basis_elem(2, a)));
    }
}

TEST_CASE("expansion of x/(y-x) gamma: shifted principal parts flag a mismatch") {
  SeriesTensor s = expand(gcybe_only(2).tensor, 3);
  CHECK(!s.canonical);
  // shifted attachments z^(-k) at index k >= 1, nothing at k = 0
  for (const BasisIndex& a : sl_basis(2)) {
    CHECK(glaurent_is_zero(s.at(0, a)));
    for (int k = 1; k <= 3; ++k) {
      const GLaurent& f = s.at(k, a);
      REQUIRE(f.size() == 1);
      CHECK(combo_equals(f.at(-k), dual_basis_elem(2, a)));
    }
  }
}

TEST_CASE("expansion rejects higher-order poles") {
  RatFun double_pole = RatFun::one_over_diff(Var::y, Var::x) * RatFun::one_over_diff(Var::y, Var::x);
  Tensor2 bad = t2_from_const(casimir(2), double_pole);
  CHECK_THROWS_AS(expand(bad, 2), PoleOrderError);
}

TEST_CASE("residue pairing values") {
  CHECK(residue_pairing(2, gl(-1, BasisIndex::H(1)), gl(0, BasisIndex::H(1))) ==
        Cyclotomic(BigRat(2)));
  CHECK(residue_pairing(2, gl(2, BasisIndex::E(1, 2)), gl(-1, BasisIndex::E(2, 1))).is_zero());
  CHECK(residue_pairing(2, gl(-1, BasisIndex::E(1, 2)), gl(0, BasisIndex::E(2, 1))) == kOne);
  // symmetry and bilinearity on random data
  testing::Rng rng(2024);
  for (int t = 0; t < 25; ++t) {
    GLaurent f = gl(static_cast<int>(rng.pick(-3, 3)), rng.basis_index(2), rng.cyclotomic(1));
    GLaurent g = gl(static_cast<int>(rng.pick(-3, 3)), rng.basis_index(2), rng.cyclotomic(1));
    CHECK(residue_pairing(2, f, g) == residue_pairing(2, g, f));
  }
  // restricted to non-negative exponents the pairing vanishes identically
  for (int l = 0; l <= 3; ++l)
    for (int k = 0; k <= 3; ++k)
      CHECK(residue_pairing(2, gl(l, BasisIndex::E(1, 2)), gl(k, BasisIndex::E(2, 1))).is_zero());
}

TEST_CASE("w basis counts") {
  WBasis w = w_basis(expand(yang(2).tensor, 2));
  CHECK(w.f.size() == 9);  // (N+1) * dim = 3 * 3
}

TEST_CASE("coisotropy verdicts") {
  CHECK(coisotropy_check(w_basis(expand(yang(2).tensor, 4))));
  CHECK(coisotropy_check(w_basis(expand(cuspidal_closed_form(2).tensor, 4))));
  CHECK(coisotropy_check(w_basis(expand(stolin_sl2().tensor, 5))));
  // shifted series: mismatch reported through the canonical flag
  CHECK(!coisotropy_check(w_basis(expand(gcybe_only(2).tensor, 4))));

  // a canonically-shaped but non-skew series has an honest violating pair:
  // f_(0,h) = z^(-1) h* + h has pairing(f_(0,h), f_(0,h)) = 2 tr(h*, h) = 2
  WBasis w;
  w.n = 2;
  w.order = 1;
  w.canonical = true;
  for (int k = 0; k <= 1; ++k)
    for (const BasisIndex& a : sl_basis(2)) w.f[{k, a}] = GLaurent{{-k - 1, dual_basis_elem(2, a)}};
  w.f[{0, BasisIndex::H(1)}][0] = LieCombo<Cyclotomic>{{BasisIndex::H(1), kOne}};
  CHECK(residue_pairing(2, w.at(0, BasisIndex::H(1)), w.at(0, BasisIndex::H(1))) ==
        Cyclotomic(BigRat(2)));
  CHECK(!coisotropy_check(w));
}

TEST_CASE("coisotropy verdict equals skewness for entries admitting the shape") {
  for (int n : {2, 3}) {
    for (const CatalogEntry& e : {yang(n), cuspidal_closed_form(n)}) {
      SeriesTensor s = expand(e.tensor, 4);
      REQUIRE(s.canonical);
      CHECK(coisotropy_check(w_basis(s)) == skew_check(e.tensor));
    }
  }
  // gcybe_only does not admit the shape; both verdicts are negative
  CHECK(coisotropy_check(w_basis(expand(gcybe_only(2).tensor, 4))) ==
        skew_check(gcybe_only(2).tensor));
}

TEST_CASE("lagrangian complement checks") {
  CHECK(lagrangian_complement_check(w_basis(expand(yang(2).tensor, 3))));
  CHECK(lagrangian_complement_check(w_basis(expand(cuspidal_closed_form(2).tensor, 4))));

  // corrupting one coefficient breaks the duality: replace the principal
  // part h*/z of f_(0,h) by h/z, so pairing against z^0 h becomes 2
  WBasis w = w_basis(expand(cuspidal_closed_form(2).tensor, 4));
  w.f[{0, BasisIndex::H(1)}][-1] = LieCombo<Cyclotomic>{{BasisIndex::H(1), kOne}};
  CHECK(!lagrangian_complement_check(w));

  // the shifted series fails the principal-part independence
  CHECK(!lagrangian_complement_check(w_basis(expand(gcybe_only(2).tensor, 3))));
}

TEST_CASE("dual basis reconstruction round-trips") {
  for (const CatalogEntry& e : {yang(2), cuspidal_closed_form(2)}) {
    SeriesTensor s = expand(e.tensor, 5);
    WBasis w = w_basis(s);
    REQUIRE(lagrangian_complement_check(w));
    SeriesTensor rebuilt = dual_basis_reconstruct(w);
    CHECK(rebuilt.coeff == s.coeff);
  }
  {
    SeriesTensor s = expand(cuspidal_closed_form(3).tensor, 4);
    SeriesTensor rebuilt = dual_basis_reconstruct(w_basis(s));
    CHECK(rebuilt.coeff == s.coeff);
  }
  // a duality-violating basis (two rows proportional) is rejected
  WBasis w = w_basis(expand(yang(2).tensor, 2));
  w.f[{1, BasisIndex::E(1, 2)}] = w.at(0, BasisIndex::E(1, 2));
  CHECK_THROWS_AS(dual_basis_reconstruct(w), DualityViolated);
}

TEST_CASE("S-stability of the truncated W space") {
  CHECK(s_stability_check(w_basis(expand(yang(2).tensor, 5))));
  CHECK(s_stability_check(w_basis(expand(cuspidal_closed_form(2).tensor, 5))));
  CHECK(s_stability_check(w_basis(expand(cuspidal_closed_form(3).tensor, 4))));
}

TEST_CASE("residues at the singular point") {
  auto h_mat = [](const ScalarLaurent& a, const ScalarLaurent& d) {
    MatLaurent m(2, std::vector<ScalarLaurent>(2));
    m[0][0] = a;
    m[1][1] = d;
    return m;
  };
  ScalarLaurent one{{0, kOne}};
  ScalarLaurent minus_one{{0, -kOne}};

  // cuspidal, f = g = constant h: constant x dz has no residue
  GermData fc;
  fc.curve = CurveKind::cuspidal;
  fc.at_inf = h_mat(one, minus_one);
  CHECK(residue_at_singularity(fc, fc, 4).is_zero());

  // nodal, f = g with equal branches: res_0 + res_inf of c dz/z = c - c = 0
  GermData fn;
  fn.curve = CurveKind::nodal;
  fn.at_zero = h_mat(one, minus_one);
  fn.at_inf = h_mat(one, minus_one);
  CHECK(residue_at_singularity(fn, fn, 4).is_zero());

  // nodal with branches differing: res = tr(h^2) - 0 = 2
  GermData gn = fn;
  gn.at_inf = MatLaurent(2, std::vector<ScalarLaurent>(2));
  GermData hn = fn;
  CHECK(residue_at_singularity(gn, hn, 4) == Cyclotomic(BigRat(2)));

  // cuspidal conductor-type germ: trace lands in the local ring, residue 0
  GermData e1;
  e1.curve = CurveKind::cuspidal;
  e1.at_inf = MatLaurent(2, std::vector<ScalarLaurent>(2));
  e1.at_inf[0][1] = ScalarLaurent{{-1, kOne}};  // z^{-1} in the corner
  GermData e2;
  e2.curve = CurveKind::cuspidal;
  e2.at_inf = MatLaurent(2, std::vector<ScalarLaurent>(2));
  e2.at_inf[1][0] = ScalarLaurent{{2, kOne}};  // tr(f g) = z, no residue
  CHECK(residue_at_singularity(e1, e2, 4).is_zero());

  // and a nonzero cuspidal residue: tr(f g) = z^{-1}
  GermData e3 = e2;
  e3.at_inf[1][0] = ScalarLaurent{{0, kOne}};
  CHECK(residue_at_singularity(e1, e3, 4) == -kOne);

  // truncation window enforcement
  GermData wide = e1;
  wide.at_inf[0][1] = ScalarLaurent{{-9, kOne}};
  CHECK_THROWS_AS(residue_at_singularity(wide, e3, 4), TruncationError);
}
