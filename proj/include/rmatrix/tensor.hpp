#pragma once

#include "rmatrix/lie.hpp"
#include "rmatrix/ratfun.hpp"

namespace rmatrix {

/// g (x) g valued function of the spectral variables (x, y): slot 1 carries
/// x, slot 2 carries y. Entries are indexed by basis pairs; zero entries are
/// never stored.
struct Tensor2 {
  int n = 0;
  std::map<std::pair<BasisIndex, BasisIndex>, RatFun> e;

  void add(const BasisIndex& a, const BasisIndex& b, const RatFun& v);
};

/// g (x) g (x) g valued function of (x1, x2, x3).
struct Tensor3 {
  int n = 0;
  std::map<std::tuple<BasisIndex, BasisIndex, BasisIndex>, RatFun> e;

  void add(const BasisIndex& a, const BasisIndex& b, const BasisIndex& c, const RatFun& v);
};

/// A two-tensor placed into two of the three slots of the triple product,
/// with its coefficients substituted into the (x1, x2, x3) variables; the
/// remaining slot implicitly holds the identity.
struct SlotEmbedding {
  int n = 0;
  int slot_first = 0;   // slot of the first tensor factor (1..3)
  int slot_second = 0;  // slot of the second tensor factor (1..3)
  std::map<std::pair<BasisIndex, BasisIndex>, RatFun> e;
};

Tensor2 t2_sum(const Tensor2& a, const Tensor2& b);
Tensor2 t2_negate(const Tensor2& a);
Tensor2 t2_scale(const Tensor2& a, const RatFun& s);
Tensor3 t3_sum(const Tensor3& a, const Tensor3& b);

bool is_zero(const Tensor2& t);
bool is_zero(const Tensor3& t);

/// Swaps the tensor factors and the two spectral variables in the
/// coefficients; an involution. Skew-symmetry is flip(r) + r = 0.
Tensor2 flip(const Tensor2& t);

/// Parses "12" | "13" | "23" | "32" into the two occupied slots.
std::pair<int, int> parse_slots(const std::string& spec);

/// Places the tensor factors in the named slots and applies the variable
/// substitution (x -> vars.first, y -> vars.second) to the coefficients.
SlotEmbedding embed(const Tensor2& t, const std::pair<int, int>& slots,
                    const std::pair<Var, Var>& vars);
SlotEmbedding embed(const Tensor2& t, const std::string& spec, const std::pair<Var, Var>& vars);

/// Commutator of two slot embeddings taken in their unique shared slot:
/// [(a(x)b)^12, (c(x)d)^13] = [a,c] (x) b (x) d and its relabelings.
Tensor3 bracket_slots(const SlotEmbedding& u, const SlotEmbedding& v);

/// Builds a Tensor2 from a constant tensor with a scalar coefficient.
Tensor2 t2_from_const(const Tensor2Const& c, const RatFun& coeff);

/// Evaluates every entry at a rational point, producing a constant tensor.
Tensor2Const t2_evaluate(const Tensor2& t, const BigRat& at_x, const BigRat& at_y);

}  // namespace rmatrix
