#include "rmatrix/verify.hpp"

#include <sstream>

#include "rmatrix/linalg.hpp"

namespace rmatrix {

namespace {

SlotEmbedding r12(const Tensor2& r) { return embed(r, std::pair{1, 2}, {Var::x1, Var::x2}); }
SlotEmbedding r13(const Tensor2& r) { return embed(r, std::pair{1, 3}, {Var::x1, Var::x3}); }
SlotEmbedding r23(const Tensor2& r) { return embed(r, std::pair{2, 3}, {Var::x2, Var::x3}); }
SlotEmbedding r32(const Tensor2& r) { return embed(r, std::pair{3, 2}, {Var::x3, Var::x2}); }

}  // namespace

Tensor3 gcybe_lhs(const Tensor2& r) {
  SlotEmbedding a12 = r12(r), a13 = r13(r), a23 = r23(r), a32 = r32(r);
  return t3_sum(t3_sum(bracket_slots(a12, a13), bracket_slots(a12, a23)),
                bracket_slots(a32, a13));
}

Tensor3 cybe_lhs(const Tensor2& r) {
  SlotEmbedding a12 = r12(r), a13 = r13(r), a23 = r23(r);
  return t3_sum(t3_sum(bracket_slots(a12, a13), bracket_slots(a13, a23)),
                bracket_slots(a12, a23));
}

bool skew_check(const Tensor2& r) { return is_zero(t2_sum(flip(r), r)); }

bool nondegenerate_at(const Tensor2& r, const BigRat& at_x, const BigRat& at_y) {
  Tensor2Const value = t2_evaluate(r, at_x, at_y);
  Mat<Cyclotomic> m = tensor_to_map(value);
  return !det(std::move(m)).is_zero();
}

Tensor2 transform_gauge(const Tensor2& r, const std::vector<std::vector<Cyclotomic>>& g) {
  const int n = r.n;
  if (static_cast<int>(g.size()) != n) throw DimensionMismatch("gauge: matrix size != n");
  // invert G
  Mat<Cyclotomic> aug(static_cast<std::size_t>(n), std::vector<Cyclotomic>(2 * static_cast<std::size_t>(n)));
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(g[static_cast<std::size_t>(i)].size()) != n)
      throw DimensionMismatch("gauge: matrix size != n");
    for (int j = 0; j < n; ++j) aug[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
        g[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    aug[static_cast<std::size_t>(i)][static_cast<std::size_t>(n + i)] = Cyclotomic(BigRat(1));
  }
  auto pivots = rref(aug);
  if (static_cast<int>(pivots.size()) != n || pivots.back() >= static_cast<std::size_t>(n))
    throw SingularMatrix("gauge: singular matrix G");
  std::vector<std::vector<Cyclotomic>> ginv(static_cast<std::size_t>(n),
                                            std::vector<Cyclotomic>(static_cast<std::size_t>(n)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      ginv[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
          aug[static_cast<std::size_t>(i)][static_cast<std::size_t>(n + j)];

  // Ad_G on each basis element, as a combo
  auto ad = [&](const BasisIndex& b) {
    std::vector<std::vector<Cyclotomic>> dense = combo_to_matrix(n, LieCombo<Cyclotomic>{{b, Cyclotomic(BigRat(1))}});
    std::vector<std::vector<Cyclotomic>> tmp(static_cast<std::size_t>(n),
                                             std::vector<Cyclotomic>(static_cast<std::size_t>(n)));
    std::vector<std::vector<Cyclotomic>> out(static_cast<std::size_t>(n),
                                             std::vector<Cyclotomic>(static_cast<std::size_t>(n)));
    for (int i = 0; i < n; ++i)
      for (int k = 0; k < n; ++k)
        for (int j = 0; j < n; ++j)
          tmp[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] +=
              g[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] *
              dense[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)];
    for (int i = 0; i < n; ++i)
      for (int k = 0; k < n; ++k)
        for (int j = 0; j < n; ++j)
          out[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] +=
              tmp[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] *
              ginv[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)];
    return matrix_to_combo(n, out);
  };

  std::map<BasisIndex, LieCombo<Cyclotomic>> images;
  for (const BasisIndex& b : sl_basis(n)) images.emplace(b, ad(b));

  Tensor2 out;
  out.n = n;
  for (const auto& [key, coef] : r.e)
    for (const auto& [ba, ca] : images.at(key.first))
      for (const auto& [bb, cb] : images.at(key.second)) out.add(ba, bb, coef.scaled(ca * cb));
  return out;
}

Tensor2 transform_rescale(const Tensor2& r, const Cyclotomic& c) {
  if (c.is_zero()) throw DivisionByZero("rescale by zero");
  return t2_scale(r, RatFun(c));
}

Tensor2 transform_shift(const Tensor2& r, const BigRat& a) {
  Tensor2 out;
  out.n = r.n;
  for (const auto& [key, coef] : r.e) out.add(key.first, key.second, coef.shifted_xy(a));
  return out;
}

Tensor2 cobracket(const GPoly& f, const Tensor2& r) {
  Tensor2 bracketed;
  bracketed.n = r.n;
  for (const auto& [key, coef] : r.e) {
    for (const auto& [deg, elem] : f) {
      RatFun cx = coef * RatFun(MLaurent::monomial(Var::x, deg));
      RatFun cy = coef * RatFun(MLaurent::monomial(Var::y, deg));
      for (const auto& [fb, fv] : elem) {
        // [f (x) 1, a (x) b] = [f,a] (x) b ; [1 (x) f, a (x) b] = a (x) [f,b]
        for (const auto& [ic, sc] : bracket_basis(r.n, fb, key.first))
          bracketed.add(ic, key.second, cx.scaled(fv * Cyclotomic(BigRat(sc))));
        for (const auto& [ic, sc] : bracket_basis(r.n, fb, key.second))
          bracketed.add(key.first, ic, cy.scaled(fv * Cyclotomic(BigRat(sc))));
      }
    }
  }
  // the result must be pole free
  for (const auto& [key, coef] : bracketed.e)
    if (!coef.is_laurent())
      throw NonRegularCobracket("cobracket pole does not cancel at entry (" +
                                key.first.name() + ", " + key.second.name() + ")");
  return bracketed;
}

namespace {

/// Cyclic rotation of a triple tensor: slot contents move 1 -> 2 -> 3 -> 1
/// together with their variables.
Tensor3 rotate_cyclic(const Tensor3& t) {
  Tensor3 out;
  out.n = t.n;
  std::map<Var, Var> m{{Var::x1, Var::x2}, {Var::x2, Var::x3}, {Var::x3, Var::x1}};
  for (const auto& [key, coef] : t.e)
    out.add(std::get<2>(key), std::get<0>(key), std::get<1>(key), coef.renamed(m));
  return out;
}

}  // namespace

bool cojacobi_check(const Tensor2& r, const GPoly& f, CoJacobiReading reading) {
  Tensor2 theta = cobracket(f, r);
  Tensor3 composed;
  composed.n = r.n;
  for (const auto& [key, coef] : theta.e) {
    // split the (polynomial) coefficient into x-power times y-power pieces
    for (const auto& [e, c] : coef.num().terms()) {
      int dx = e[static_cast<std::size_t>(Var::x)];
      int dy = e[static_cast<std::size_t>(Var::y)];
      if (dx < 0 || dy < 0) throw NonRegularCobracket("cobracket output not polynomial");
      if (reading == CoJacobiReading::theta_on_first) {
        // theta applied to the first factor (x-part); the second factor moves
        // to slot 3 with variable x3.
        GPoly u{{dx, LieCombo<Cyclotomic>{{key.first, c}}}};
        Tensor2 inner = cobracket(u, r);
        for (const auto& [ikey, icoef] : inner.e) {
          RatFun moved = icoef.renamed({{Var::x, Var::x1}, {Var::y, Var::x2}}) *
                         RatFun(MLaurent::monomial(Var::x3, dy));
          composed.add(ikey.first, ikey.second, key.second, moved);
        }
      } else {
        // theta applied to the second factor (y-part); the first factor stays
        // in slot 1 with variable x1.
        GPoly u{{dy, LieCombo<Cyclotomic>{{key.second, c}}}};
        Tensor2 inner = cobracket(u, r);
        for (const auto& [ikey, icoef] : inner.e) {
          RatFun moved = icoef.renamed({{Var::x, Var::x2}, {Var::y, Var::x3}}) *
                         RatFun(MLaurent::monomial(Var::x1, dx));
          composed.add(key.first, ikey.first, ikey.second, moved);
        }
      }
    }
  }
  Tensor3 rot1 = rotate_cyclic(composed);
  Tensor3 rot2 = rotate_cyclic(rot1);
  return is_zero(t3_sum(t3_sum(composed, rot1), rot2));
}

std::string first_witness(const Tensor3& t) {
  for (const auto& [key, coef] : t.e)
    if (!coef.is_zero()) {
      std::ostringstream os;
      os << "(" << std::get<0>(key).name() << ", " << std::get<1>(key).name() << ", "
         << std::get<2>(key).name() << ") -> " << coef.to_string();
      return os.str();
    }
  return "";
}

std::string first_witness(const Tensor2& t) {
  for (const auto& [key, coef] : t.e)
    if (!coef.is_zero()) {
      std::ostringstream os;
      os << "(" << key.first.name() << ", " << key.second.name() << ") -> " << coef.to_string();
      return os.str();
    }
  return "";
}

}  // namespace rmatrix
