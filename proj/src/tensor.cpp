#include "rmatrix/tensor.hpp"

namespace rmatrix {

void Tensor2::add(const BasisIndex& a, const BasisIndex& b, const RatFun& v) {
  if (v.is_zero()) return;
  auto key = std::make_pair(a, b);
  auto it = e.find(key);
  if (it == e.end()) {
    e.emplace(key, v);
  } else {
    it->second += v;
    if (it->second.is_zero()) e.erase(it);
  }
}

void Tensor3::add(const BasisIndex& a, const BasisIndex& b, const BasisIndex& c, const RatFun& v) {
  if (v.is_zero()) return;
  auto key = std::make_tuple(a, b, c);
  auto it = e.find(key);
  if (it == e.end()) {
    e.emplace(key, v);
  } else {
    it->second += v;
    if (it->second.is_zero()) e.erase(it);
  }
}

Tensor2 t2_sum(const Tensor2& a, const Tensor2& b) {
  if (a.n != b.n) throw DimensionMismatch("tensor sum: mismatched n");
  Tensor2 out = a;
  for (const auto& [key, v] : b.e) out.add(key.first, key.second, v);
  return out;
}

Tensor2 t2_negate(const Tensor2& a) {
  Tensor2 out;
  out.n = a.n;
  for (const auto& [key, v] : a.e) out.e.emplace(key, -v);
  return out;
}

Tensor2 t2_scale(const Tensor2& a, const RatFun& s) {
  Tensor2 out;
  out.n = a.n;
  if (s.is_zero()) return out;
  for (const auto& [key, v] : a.e) out.add(key.first, key.second, v * s);
  return out;
}

Tensor3 t3_sum(const Tensor3& a, const Tensor3& b) {
  if (a.n != b.n) throw DimensionMismatch("tensor sum: mismatched n");
  Tensor3 out = a;
  for (const auto& [key, v] : b.e)
    out.add(std::get<0>(key), std::get<1>(key), std::get<2>(key), v);
  return out;
}

bool is_zero(const Tensor2& t) {
  for (const auto& [key, v] : t.e) {
    (void)key;
    if (!v.is_zero()) return false;
  }
  return true;
}

bool is_zero(const Tensor3& t) {
  for (const auto& [key, v] : t.e) {
    (void)key;
    if (!v.is_zero()) return false;
  }
  return true;
}

Tensor2 flip(const Tensor2& t) {
  Tensor2 out;
  out.n = t.n;
  for (const auto& [key, v] : t.e) out.add(key.second, key.first, v.swapped_xy());
  return out;
}

std::pair<int, int> parse_slots(const std::string& spec) {
  if (spec.size() == 2) {
    int a = spec[0] - '0', b = spec[1] - '0';
    if (a >= 1 && a <= 3 && b >= 1 && b <= 3 && a != b &&
        (spec == "12" || spec == "13" || spec == "23" || spec == "32"))
      return {a, b};
  }
  throw SlotError("unknown slot specification '" + spec + "'");
}

SlotEmbedding embed(const Tensor2& t, const std::pair<int, int>& slots,
                    const std::pair<Var, Var>& vars) {
  if (slots.first < 1 || slots.first > 3 || slots.second < 1 || slots.second > 3 ||
      slots.first == slots.second)
    throw SlotError("invalid slot pair");
  SlotEmbedding out;
  out.n = t.n;
  out.slot_first = slots.first;
  out.slot_second = slots.second;
  std::map<Var, Var> m{{Var::x, vars.first}, {Var::y, vars.second}};
  for (const auto& [key, v] : t.e) out.e.emplace(key, v.renamed(m));
  return out;
}

SlotEmbedding embed(const Tensor2& t, const std::string& spec, const std::pair<Var, Var>& vars) {
  return embed(t, parse_slots(spec), vars);
}

Tensor3 bracket_slots(const SlotEmbedding& u, const SlotEmbedding& v) {
  if (u.n != v.n) throw DimensionMismatch("bracket_slots: mismatched n");
  // the--necessarily unique--shared slot
  int shared = 0, count = 0;
  for (int s : {u.slot_first, u.slot_second})
    if (s == v.slot_first || s == v.slot_second) {
      shared = s;
      ++count;
    }
  if (count != 1) throw SlotError("bracket_slots: embeddings must share exactly one slot");
  int u_other = (u.slot_first == shared) ? u.slot_second : u.slot_first;
  int v_other = (v.slot_first == shared) ? v.slot_second : v.slot_first;

  Tensor3 out;
  out.n = u.n;
  for (const auto& [ku, cu] : u.e) {
    BasisIndex us = (u.slot_first == shared) ? ku.first : ku.second;
    BasisIndex uo = (u.slot_first == shared) ? ku.second : ku.first;
    for (const auto& [kv, cv] : v.e) {
      BasisIndex vs = (v.slot_first == shared) ? kv.first : kv.second;
      BasisIndex vo = (v.slot_first == shared) ? kv.second : kv.first;
      RatFun coef = cu * cv;
      if (coef.is_zero()) continue;
      for (const auto& [w, sc] : bracket_basis(u.n, us, vs)) {
        std::array<BasisIndex, 3> slot{w, w, w};  // placeholder init
        slot[static_cast<std::size_t>(shared - 1)] = w;
        slot[static_cast<std::size_t>(u_other - 1)] = uo;
        slot[static_cast<std::size_t>(v_other - 1)] = vo;
        out.add(slot[0], slot[1], slot[2], coef.scaled(Cyclotomic(BigRat(sc))));
      }
    }
  }
  return out;
}

Tensor2 t2_from_const(const Tensor2Const& c, const RatFun& coeff) {
  Tensor2 out;
  out.n = c.n;
  if (coeff.is_zero()) return out;
  for (const auto& [key, v] : c.e) out.add(key.first, key.second, coeff.scaled(v));
  return out;
}

Tensor2Const t2_evaluate(const Tensor2& t, const BigRat& at_x, const BigRat& at_y) {
  Tensor2Const out;
  out.n = t.n;
  std::map<Var, BigRat> point{{Var::x, at_x}, {Var::y, at_y}};
  for (const auto& [key, v] : t.e) {
    Cyclotomic val = v.evaluated(point);
    if (!val.is_zero()) out.e.emplace(key, val);
  }
  return out;
}

}  // namespace rmatrix
