#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "rmatrix/catalog.hpp"
#include "rmatrix/sheaf.hpp"

using namespace rmatrix;

namespace {

const Cyclotomic kOne(BigRat(1));

RatFun rf(long v) { return RatFun(Cyclotomic(BigRat(v))); }
RatFun rf(const BigRat& v) { return RatFun(Cyclotomic(v)); }
RatFun rf_x(const BigRat& c = BigRat(1)) { return RatFun(MLaurent::monomial(Var::x, 1, Cyclotomic(c))); }

SolPair zero_pair(int n) {
  SolPair p;
  p.A.assign(static_cast<std::size_t>(n), std::vector<RatFun>(static_cast<std::size_t>(n)));
  p.B.assign(static_cast<std::size_t>(n), std::vector<RatFun>(static_cast<std::size_t>(n)));
  return p;
}

bool combo_is(const LieCombo<RatFun>& got, const std::map<BasisIndex, RatFun>& expected) {
  LieCombo<RatFun> diff = got;
  for (const auto& [b, v] : expected) combo_add(diff, b, RatFun(-v));
  for (const auto& [b, v] : diff) {
    (void)b;
    if (!v.is_zero()) return false;
  }
  return true;
}

/// The explicit nodal parametrization from the degree-one triple:
/// A = -x (D 0 / a beta), B = (beta b / 0 D) with beta = -tr D.
SolPair nodal_block_pair(int n, const std::vector<std::vector<BigRat>>& D,
                         const std::vector<BigRat>& a, const std::vector<BigRat>& b) {
  SolPair p = zero_pair(n);
  BigRat beta(0);
  for (int i = 0; i < n - 1; ++i) beta -= D[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)];
  for (int i = 0; i < n - 1; ++i)
    for (int j = 0; j < n - 1; ++j)
      p.A[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
          rf_x(-D[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
  for (int j = 0; j < n - 1; ++j)
    p.A[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(j)] = rf_x(-a[static_cast<std::size_t>(j)]);
  p.A[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(n - 1)] = rf_x(-beta);
  p.B[0][0] = rf(beta);
  for (int j = 0; j < n - 1; ++j) p.B[0][static_cast<std::size_t>(j + 1)] = rf(b[static_cast<std::size_t>(j)]);
  for (int i = 0; i < n - 1; ++i)
    for (int j = 0; j < n - 1; ++j)
      p.B[static_cast<std::size_t>(i + 1)][static_cast<std::size_t>(j + 1)] =
          rf(D[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
  return p;
}

}  // namespace

TEST_CASE("canonical triples") {
  MatTriple t = canonical_triple(2, CurveKind::nodal);
  CHECK(t.m == 3);
  CHECK(t.first == RMat{{0, 1, 0}, {0, 0, 1}});
  CHECK(t.second == RMat{{1, 0, 0}, {0, 1, 0}});

  MatTriple c = canonical_triple(2, CurveKind::cuspidal);
  CHECK(c.first == RMat{{1, 0, 0}, {0, 1, 0}});
  CHECK(c.second == RMat{{0, 1, 0}, {0, 0, 1}});

  CHECK(canonical_triple(3, CurveKind::nodal).m == 4);
  CHECK_THROWS_AS(canonical_triple(1, CurveKind::nodal), DimensionMismatch);
}

TEST_CASE("euler characteristic") {
  CHECK(euler_characteristic(0, 2, 3) == 1);
  CHECK(euler_characteristic(0, 5, 5) == 0);
  CHECK(euler_characteristic(5, 3, 4) == 6);
}

TEST_CASE("solution space dimension is n^2 - 1 for n = 2..5, both curves") {
  for (int n = 2; n <= 5; ++n)
    for (CurveKind kind : {CurveKind::nodal, CurveKind::cuspidal}) {
      SolBasis basis = sol_space(n, kind);
      CHECK(static_cast<int>(basis.elems.size()) == sl_dim(n));
    }
}

TEST_CASE("nodal solution space contains z e_12") {
  SolBasis basis = sol_space(2, CurveKind::nodal);
  SolPair phi = zero_pair(2);
  phi.B[0][1] = rf(1);
  CHECK(sol_contains(basis, phi));
  // and (z+x)/2 h, used by the residue example below
  SolPair psi = zero_pair(2);
  psi.A[0][0] = rf_x(BigRat(1, 2));
  psi.A[1][1] = rf_x(BigRat(-1, 2));
  psi.B[0][0] = rf(BigRat(1, 2));
  psi.B[1][1] = rf(BigRat(-1, 2));
  CHECK(sol_contains(basis, psi));
  // but not a constant e_12
  SolPair rho = zero_pair(2);
  rho.A[0][1] = rf(1);
  CHECK(!sol_contains(basis, rho));
}

TEST_CASE("nodal solution space agrees with the block parametrization (n = 2, 3)") {
  {
    SolBasis basis = sol_space(2, CurveKind::nodal);
    CHECK(sol_contains(basis, nodal_block_pair(2, {{BigRat(1)}}, {BigRat(0)}, {BigRat(0)})));
    CHECK(sol_contains(basis, nodal_block_pair(2, {{BigRat(0)}}, {BigRat(1)}, {BigRat(0)})));
    CHECK(sol_contains(basis, nodal_block_pair(2, {{BigRat(0)}}, {BigRat(0)}, {BigRat(1)})));
  }
  {
    SolBasis basis = sol_space(3, CurveKind::nodal);
    std::vector<std::vector<BigRat>> D{{BigRat(0), BigRat(0)}, {BigRat(0), BigRat(0)}};
    // all 8 generators: 4 from D, 2 from a, 2 from b
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) {
        auto Dij = D;
        Dij[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = 1;
        CHECK(sol_contains(basis, nodal_block_pair(3, Dij, {BigRat(0), BigRat(0)},
                                                   {BigRat(0), BigRat(0)})));
      }
    CHECK(sol_contains(basis, nodal_block_pair(3, D, {BigRat(1), BigRat(0)}, {BigRat(0), BigRat(0)})));
    CHECK(sol_contains(basis, nodal_block_pair(3, D, {BigRat(0), BigRat(1)}, {BigRat(0), BigRat(0)})));
    CHECK(sol_contains(basis, nodal_block_pair(3, D, {BigRat(0), BigRat(0)}, {BigRat(1), BigRat(0)})));
    CHECK(sol_contains(basis, nodal_block_pair(3, D, {BigRat(0), BigRat(0)}, {BigRat(0), BigRat(1)})));
  }
}

TEST_CASE("residue map") {
  // nodal, Phi = z e_12: res = (1/x)(0 + x e) = e
  SolPair phi = zero_pair(2);
  phi.B[0][1] = rf(1);
  CHECK(combo_is(res_map(phi, CurveKind::nodal, 2), {{BasisIndex::E(1, 2), rf(1)}}));

  // cuspidal, Phi = A: res = A
  SolPair psi = zero_pair(2);
  psi.A[0][1] = rf(3);
  CHECK(combo_is(res_map(psi, CurveKind::cuspidal, 2), {{BasisIndex::E(1, 2), rf(3)}}));

  // nodal, Phi = (z + x)/2 h: res = h
  SolPair rho = zero_pair(2);
  rho.A[0][0] = rf_x(BigRat(1, 2));
  rho.A[1][1] = rf_x(BigRat(-1, 2));
  rho.B[0][0] = rf(BigRat(1, 2));
  rho.B[1][1] = rf(BigRat(-1, 2));
  CHECK(combo_is(res_map(rho, CurveKind::nodal, 2), {{BasisIndex::H(1), rf(1)}}));
}

TEST_CASE("evaluation map") {
  RatFun pole = RatFun::one_over_diff(Var::y, Var::x);
  // Phi = z e: (0 + y e)/(y-x)
  SolPair phi = zero_pair(2);
  phi.B[0][1] = rf(1);
  CHECK(combo_is(ev_map(phi, 2),
                 {{BasisIndex::E(1, 2), RatFun(MLaurent::monomial(Var::y, 1)) * pole}}));

  // Phi = (z+x)/2 h: (x + y)/(2(y-x)) h
  SolPair rho = zero_pair(2);
  rho.A[0][0] = rf_x(BigRat(1, 2));
  rho.A[1][1] = rf_x(BigRat(-1, 2));
  rho.B[0][0] = rf(BigRat(1, 2));
  rho.B[1][1] = rf(BigRat(-1, 2));
  MLaurent xpy = MLaurent::monomial(Var::x, 1) + MLaurent::monomial(Var::y, 1);
  CHECK(combo_is(ev_map(rho, 2),
                 {{BasisIndex::H(1), RatFun(xpy.scaled(Cyclotomic(BigRat(1, 2)))) * pole}}));

  CHECK(ev_map(zero_pair(2), 2).empty());
}

TEST_CASE("rsharp on the nodal rank-2 curve") {
  Mat<RatFun> m = rsharp(2, CurveKind::nodal);
  RatFun pole = RatFun::one_over_diff(Var::y, Var::x);
  // columns are in basis order e_12, e_21, h_1
  // rsharp(e_12) = y/(y-x) e_12
  CHECK(m[0][0] == RatFun(MLaurent::monomial(Var::y, 1)) * pole);
  CHECK(m[1][0].is_zero());
  CHECK(m[2][0].is_zero());
  // rsharp(h) = (x+y)/(2(y-x)) h
  MLaurent xpy = MLaurent::monomial(Var::x, 1) + MLaurent::monomial(Var::y, 1);
  CHECK(m[2][2] == RatFun(xpy.scaled(Cyclotomic(BigRat(1, 2)))) * pole);
  CHECK(m[0][2].is_zero());
  CHECK(m[1][2].is_zero());
}

TEST_CASE("rsharp on the cuspidal curve has leading term c/(y-x)") {
  for (int n : {2, 3}) {
    Mat<RatFun> m = rsharp(n, CurveKind::cuspidal);
    RatFun pole = RatFun::one_over_diff(Var::y, Var::x);
    int d = sl_dim(n);
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) {
        RatFun rest = m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
        if (i == j) rest -= pole;
        CHECK(rest.is_laurent());  // everything beyond the pole is regular
      }
  }
}

TEST_CASE("geometric r-matrix: explicit rank-2 forms") {
  RatFun pole = RatFun::one_over_diff(Var::y, Var::x);

  // cuspidal: gamma/(y-x) + (1/2)(h (x) f - f (x) h)
  Tensor2 expected_c = t2_from_const(casimir(2), pole);
  expected_c.add(BasisIndex::H(1), BasisIndex::E(2, 1), rf(BigRat(1, 2)));
  expected_c.add(BasisIndex::E(2, 1), BasisIndex::H(1), rf(BigRat(-1, 2)));
  CHECK(is_zero(t2_sum(geometric_r(2, CurveKind::cuspidal), t2_negate(expected_c))));

  // nodal: x/(y-x) gamma + (1/4) h (x) h + f (x) e
  Tensor2 expected_n = t2_from_const(casimir(2), RatFun(MLaurent::monomial(Var::x, 1)) * pole);
  expected_n.add(BasisIndex::H(1), BasisIndex::H(1), rf(BigRat(1, 4)));
  expected_n.add(BasisIndex::E(2, 1), BasisIndex::E(1, 2), rf(1));
  CHECK(is_zero(t2_sum(geometric_r(2, CurveKind::nodal), t2_negate(expected_n))));
}

TEST_CASE("geometric r-matrix equals the catalog closed form (n = 2, 3)") {
  for (int n : {2, 3}) {
    CHECK(is_zero(t2_sum(geometric_r(n, CurveKind::cuspidal),
                         t2_negate(cuspidal_closed_form(n).tensor))));
    CHECK(is_zero(t2_sum(geometric_r(n, CurveKind::nodal),
                         t2_negate(nodal_closed_form(n).tensor))));
  }
}

TEST_CASE("pole structure of the geometric r-matrix") {
  for (int n : {2, 3}) {
    for (CurveKind kind : {CurveKind::nodal, CurveKind::cuspidal}) {
      Tensor2 r = geometric_r(n, kind);
      for (const auto& [key, v] : r.e) {
        (void)key;
        // only the diagonal pole appears as a designated factor
        for (const auto& [fac, pow] : v.den()) {
          CHECK(fac == DiffFactor{Var::x, Var::y});
          CHECK(pow == 1);
        }
        // y-exponents stay non-negative; x-poles may occur only on the
        // nodal curve
        int lo, hi;
        v.num().exponent_range(Var::y, lo, hi);
        CHECK(lo >= 0);
        if (kind == CurveKind::cuspidal) {
          v.num().exponent_range(Var::x, lo, hi);
          CHECK(lo >= 0);
        }
      }
    }
  }
}
