#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "rmatrix/linalg.hpp"

using namespace rmatrix;
using namespace rmatrix::testing;

namespace {

const Cyclotomic kOne(BigRat(1));

LieElem elem(int n, const BasisIndex& b, const Cyclotomic& c = kOne) {
  LieElem out;
  out.n = n;
  combo_add(out.c, b, c);
  return out;
}

bool combo_equal(const LieCombo<Cyclotomic>& a, const LieCombo<Cyclotomic>& b) {
  return a == b;
}

}  // namespace

TEST_CASE("basis order: E lexicographic then H") {
  auto basis = sl_basis(3);
  REQUIRE(basis.size() == 8);
  CHECK(basis[0] == BasisIndex::E(1, 2));
  CHECK(basis[1] == BasisIndex::E(1, 3));
  CHECK(basis[2] == BasisIndex::E(2, 1));
  CHECK(basis[5] == BasisIndex::E(3, 2));
  CHECK(basis[6] == BasisIndex::H(1));
  CHECK(basis[7] == BasisIndex::H(2));
}

TEST_CASE("bracket on sl_2 relations") {
  LieElem e = elem(2, BasisIndex::E(1, 2)), f = elem(2, BasisIndex::E(2, 1)),
          h = elem(2, BasisIndex::H(1));
  CHECK(combo_equal(lie_bracket(e, f).c, h.c));
  CHECK(combo_equal(lie_bracket(h, e).c, combo_scale(e.c, Cyclotomic(BigRat(2)))));
  CHECK(combo_equal(lie_bracket(h, f).c, combo_scale(f.c, Cyclotomic(BigRat(-2)))));
}

TEST_CASE("bracket [e12, e23] = e13 in sl_3, against the dense oracle") {
  LieElem a = elem(3, BasisIndex::E(1, 2)), b = elem(3, BasisIndex::E(2, 3));
  LieElem expect = elem(3, BasisIndex::E(1, 3));
  CHECK(combo_equal(lie_bracket(a, b).c, expect.c));
  CHECK(dense_equal(dense_commutator(dense_of(3, a.c), dense_of(3, b.c)),
                    dense_of(3, lie_bracket(a, b).c)));
}

TEST_CASE("bracket equals the dense commutator on all basis pairs, n = 2..4") {
  for (int n = 2; n <= 4; ++n)
    for (const BasisIndex& a : sl_basis(n))
      for (const BasisIndex& b : sl_basis(n)) {
        LieCombo<Cyclotomic> lhs = bracket(n, LieCombo<Cyclotomic>{{a, kOne}},
                                           LieCombo<Cyclotomic>{{b, kOne}});
        DenseMat oracle = dense_commutator(dense_of(n, LieCombo<Cyclotomic>{{a, kOne}}),
                                           dense_of(n, LieCombo<Cyclotomic>{{b, kOne}}));
        CHECK(dense_equal(dense_of(n, lhs), oracle));
      }
}

TEST_CASE("Jacobi identity, exhaustive for n <= 4") {
  for (int n = 2; n <= 4; ++n) {
    auto basis = sl_basis(n);
    for (const BasisIndex& a : basis)
      for (const BasisIndex& b : basis)
        for (const BasisIndex& c : basis) {
          LieCombo<Cyclotomic> ca{{a, kOne}}, cb{{b, kOne}}, cc{{c, kOne}};
          LieCombo<Cyclotomic> sum =
              combo_sum(bracket(n, bracket(n, ca, cb), cc),
                        combo_sum(bracket(n, bracket(n, cb, cc), ca),
                                  bracket(n, bracket(n, cc, ca), cb)));
          CHECK(sum.empty());
        }
  }
}

TEST_CASE("trace form values and invariance") {
  LieElem e = elem(2, BasisIndex::E(1, 2)), f = elem(2, BasisIndex::E(2, 1)),
          h = elem(2, BasisIndex::H(1));
  CHECK(lie_trace_form(h, h) == Cyclotomic(BigRat(2)));
  CHECK(lie_trace_form(e, f) == kOne);
  CHECK(lie_trace_form(e, e).is_zero());
  CHECK_THROWS_AS(lie_trace_form(e, elem(3, BasisIndex::E(1, 2))), DimensionMismatch);

  Rng rng(42);
  for (int t = 0; t < 40; ++t) {
    int n = static_cast<int>(rng.pick(2, 4));
    LieElem a{n, rng.combo(n)}, b{n, rng.combo(n)}, c{n, rng.combo(n)};
    Cyclotomic lhs = lie_trace_form(lie_bracket(a, b), c) + lie_trace_form(b, lie_bracket(a, c));
    CHECK(lhs.is_zero());
    // symmetry and the dense oracle
    CHECK(lie_trace_form(a, b) == lie_trace_form(b, a));
    CHECK(lie_trace_form(a, b) == dense_trace(dense_mul(dense_of(n, a.c), dense_of(n, b.c))));
  }
}

TEST_CASE("trace form is non-degenerate (Gram determinant nonzero)") {
  for (int n = 2; n <= 4; ++n) {
    auto basis = sl_basis(n);
    Mat<Cyclotomic> gram(basis.size(), std::vector<Cyclotomic>(basis.size()));
    for (std::size_t i = 0; i < basis.size(); ++i)
      for (std::size_t j = 0; j < basis.size(); ++j)
        gram[i][j] = Cyclotomic(BigRat(trace_pair(n, basis[i], basis[j])));
    CHECK(!det(std::move(gram)).is_zero());
  }
}

TEST_CASE("casimir: explicit sl_2 form") {
  Tensor2Const g = casimir(2);
  Tensor2Const expected;
  expected.n = 2;
  expected.e[{BasisIndex::E(1, 2), BasisIndex::E(2, 1)}] = kOne;
  expected.e[{BasisIndex::E(2, 1), BasisIndex::E(1, 2)}] = kOne;
  expected.e[{BasisIndex::H(1), BasisIndex::H(1)}] = Cyclotomic(BigRat(1, 2));
  CHECK(tconst_equal(g, expected));
}

TEST_CASE("casimir: induced map is the identity") {
  for (int n : {2, 3}) {
    auto m = tensor_to_map(casimir(n));
    int d = sl_dim(n);
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) {
        if (i == j)
          CHECK(m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] == kOne);
        else
          CHECK(m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)].is_zero());
      }
  }
}

TEST_CASE("casimir: ad-invariance and flip symmetry") {
  for (int n : {2, 3}) {
    Tensor2Const g = casimir(n);
    CHECK(tconst_equal(g, tconst_flip(g)));
    for (const BasisIndex& b : sl_basis(n)) {
      Tensor2Const br = ad_invariance_bracket(g, elem(n, b));
      CHECK(br.e.empty());
    }
  }
  CHECK(tconst_equal(casimir(4), tconst_flip(casimir(4))));
}

TEST_CASE("g basis and its trace-form dual") {
  // n = 2: g_1 = h_1, g_1* = h_1 / 2
  auto g2 = g_basis(2);
  REQUIRE(g2.size() == 1);
  CHECK(combo_equal(g2[0].c, LieCombo<Cyclotomic>{{BasisIndex::H(1), kOne}}));
  auto g2d = g_dual(2);
  CHECK(combo_equal(g2d[0].c, LieCombo<Cyclotomic>{{BasisIndex::H(1), Cyclotomic(BigRat(1, 2))}}));

  // n = 3: trace(g_1*, g_2) = 0
  auto g3 = g_basis(3);
  auto g3d = g_dual(3);
  CHECK(lie_trace_form(g3d[0], g3[1]).is_zero());

  // duality and g_j* = (1/n) g_(n-j) for n = 3, 4, 5
  for (int n = 3; n <= 5; ++n) {
    auto gs = g_basis(n);
    auto gd = g_dual(n);
    for (int j = 1; j < n; ++j)
      for (int k = 1; k < n; ++k) {
        Cyclotomic v = lie_trace_form(gd[static_cast<std::size_t>(j - 1)],
                                      gs[static_cast<std::size_t>(k - 1)]);
        if (j == k)
          CHECK(v == kOne);
        else
          CHECK(v.is_zero());
      }
  }
}

TEST_CASE("g_dual matches the Gram-inverse oracle on the Cartan") {
  for (int n = 2; n <= 4; ++n) {
    auto gs = g_basis(n);
    auto gd = g_dual(n);
    // oracle: solve Gram * c = e_j in the g-basis
    std::size_t d = gs.size();
    Mat<Cyclotomic> gram(d, std::vector<Cyclotomic>(d));
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) gram[i][j] = lie_trace_form(gs[i], gs[j]);
    for (std::size_t j = 0; j < d; ++j) {
      std::vector<Cyclotomic> rhs(d);
      rhs[j] = kOne;
      auto c = solve(gram, rhs);
      REQUIRE(c.has_value());
      LieCombo<Cyclotomic> rebuilt;
      for (std::size_t i = 0; i < d; ++i)
        rebuilt = combo_sum(rebuilt, combo_scale(gs[i].c, (*c)[i]));
      CHECK(combo_equal(rebuilt, gd[j].c));
    }
  }
}

TEST_CASE("tensor_to_map examples") {
  // h (x) h in sl_2: h -> 2h, e -> 0, f -> 0
  Tensor2Const hh;
  hh.n = 2;
  hh.e[{BasisIndex::H(1), BasisIndex::H(1)}] = kOne;
  auto m = tensor_to_map(hh);
  LieCombo<Cyclotomic> img_h = apply_map(2, m, {{BasisIndex::H(1), kOne}});
  CHECK(combo_equal(img_h, LieCombo<Cyclotomic>{{BasisIndex::H(1), Cyclotomic(BigRat(2))}}));
  CHECK(apply_map(2, m, {{BasisIndex::E(1, 2), kOne}}).empty());
  CHECK(apply_map(2, m, {{BasisIndex::E(2, 1), kOne}}).empty());

  Tensor2Const zero;
  zero.n = 2;
  for (auto& row : tensor_to_map(zero))
    for (auto& v : row) CHECK(v.is_zero());
}

TEST_CASE("basis index names") {
  CHECK(BasisIndex::E(1, 2).name() == "e_1_2");
  CHECK(BasisIndex::H(3).name() == "h_3");
  CHECK(BasisIndex::from_name("e_10_2") == BasisIndex::E(10, 2));
  CHECK(BasisIndex::from_name("h_1") == BasisIndex::H(1));
  CHECK_THROWS_AS(BasisIndex::from_name("e_1_1"), ParseError);
  CHECK_THROWS_AS(BasisIndex::from_name("x_1"), ParseError);
  CHECK_THROWS_AS(BasisIndex::from_name("h_0"), ParseError);
}
