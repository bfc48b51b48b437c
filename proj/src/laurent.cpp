#include "rmatrix/laurent.hpp"

#include <sstream>

namespace rmatrix {

std::string var_name(Var v) {
  switch (v) {
    case Var::x: return "x";
    case Var::y: return "y";
    case Var::z: return "z";
    case Var::x1: return "x1";
    case Var::x2: return "x2";
    case Var::x3: return "x3";
  }
  return "?";
}

std::optional<Var> var_from_name(const std::string& s) {
  if (s == "x") return Var::x;
  if (s == "y") return Var::y;
  if (s == "z") return Var::z;
  if (s == "x1") return Var::x1;
  if (s == "x2") return Var::x2;
  if (s == "x3") return Var::x3;
  return std::nullopt;
}

MLaurent::MLaurent(const Cyclotomic& c) {
  if (!c.is_zero()) terms_.emplace(ExpVec{}, c);
}

MLaurent MLaurent::monomial(Var v, int exp, const Cyclotomic& coef) {
  MLaurent out;
  if (coef.is_zero()) return out;
  ExpVec e{};
  e[static_cast<std::size_t>(v)] = exp;
  out.terms_.emplace(e, coef);
  return out;
}

bool MLaurent::is_constant() const {
  if (terms_.empty()) return true;
  return terms_.size() == 1 && terms_.begin()->first == ExpVec{};
}

Cyclotomic MLaurent::constant_value() const {
  if (terms_.empty()) return Cyclotomic();
  if (!is_constant()) throw Error("MLaurent: not a constant");
  return terms_.begin()->second;
}

void MLaurent::add_term(const ExpVec& e, const Cyclotomic& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_.emplace(e, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

MLaurent MLaurent::operator-() const {
  MLaurent out;
  for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
  return out;
}

MLaurent& MLaurent::operator+=(const MLaurent& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

MLaurent& MLaurent::operator-=(const MLaurent& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

MLaurent operator*(const MLaurent& a, const MLaurent& b) {
  MLaurent out;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      ExpVec e;
      for (int k = 0; k < kNumVars; ++k) e[static_cast<std::size_t>(k)] =
          ea[static_cast<std::size_t>(k)] + eb[static_cast<std::size_t>(k)];
      out.add_term(e, ca * cb);
    }
  return out;
}

MLaurent MLaurent::scaled(const Cyclotomic& c) const {
  MLaurent out;
  if (c.is_zero()) return out;
  for (const auto& [e, v] : terms_) out.add_term(e, v * c);
  return out;
}

void MLaurent::exponent_range(Var v, int& lo, int& hi) const {
  lo = hi = 0;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    (void)c;
    int k = e[static_cast<std::size_t>(v)];
    if (first) {
      lo = hi = k;
      first = false;
    } else {
      if (k < lo) lo = k;
      if (k > hi) hi = k;
    }
  }
}

bool MLaurent::depends_on(Var v) const {
  for (const auto& [e, c] : terms_) {
    (void)c;
    if (e[static_cast<std::size_t>(v)] != 0) return true;
  }
  return false;
}

MLaurent MLaurent::rename(const std::map<Var, Var>& m) const {
  MLaurent out;
  for (const auto& [e, c] : terms_) {
    ExpVec ne{};
    for (int k = 0; k < kNumVars; ++k) {
      int exp = e[static_cast<std::size_t>(k)];
      if (exp == 0) continue;
      Var src = static_cast<Var>(k);
      auto it = m.find(src);
      Var dst = it == m.end() ? src : it->second;
      ne[static_cast<std::size_t>(dst)] += exp;
    }
    out.add_term(ne, c);
  }
  return out;
}

MLaurent MLaurent::swapped(Var a, Var b) const {
  return rename({{a, b}, {b, a}});
}

MLaurent MLaurent::shifted(Var v, const BigRat& a) const {
  if (a == 0) return *this;
  MLaurent out;
  for (const auto& [e, c] : terms_) {
    int k = e[static_cast<std::size_t>(v)];
    if (k < 0) throw PoleOrderError("shift: negative exponent of " + var_name(v));
    // (v + a)^k expanded binomially
    ExpVec base = e;
    base[static_cast<std::size_t>(v)] = 0;
    BigRat binom(1);
    BigRat apow(1);
    for (int t = k; t >= 0; --t) {
      // coefficient of v^t: C(k, t) a^(k-t)
      ExpVec ne = base;
      ne[static_cast<std::size_t>(v)] = t;
      out.add_term(ne, c * Cyclotomic(binom * apow));
      if (t > 0) {
        binom = binom * t / (k - t + 1);
        apow *= a;
      }
    }
  }
  return out;
}

MLaurent MLaurent::substituted_var(Var v, Var w) const {
  MLaurent out;
  for (const auto& [e, c] : terms_) {
    ExpVec ne = e;
    int k = ne[static_cast<std::size_t>(v)];
    ne[static_cast<std::size_t>(v)] = 0;
    ne[static_cast<std::size_t>(w)] += k;
    out.add_term(ne, c);
  }
  return out;
}

MLaurent MLaurent::evaluated(const std::map<Var, BigRat>& point) const {
  MLaurent out;
  for (const auto& [e, c] : terms_) {
    Cyclotomic coef = c;
    ExpVec ne = e;
    for (const auto& [v, val] : point) {
      int k = ne[static_cast<std::size_t>(v)];
      if (k == 0) continue;
      ne[static_cast<std::size_t>(v)] = 0;
      if (val == 0 && k < 0) throw PoleAtPoint("evaluation at a pole of " + var_name(v));
      BigRat p(1);
      for (int t = 0; t < (k > 0 ? k : -k); ++t) p *= val;
      if (k < 0) p = BigRat(1) / p;
      coef *= Cyclotomic(p);
    }
    out.add_term(ne, coef);
  }
  return out;
}

bool MLaurent::divide_exact_by_diff(Var va, Var vb, MLaurent& quotient) const {
  quotient = MLaurent();
  if (terms_.empty()) return true;
  // Normalize to an ordinary polynomial in va by shifting, divide by the
  // monic (in va) polynomial va - vb, undo the shift on the quotient.
  int lo, hi;
  exponent_range(va, lo, hi);
  int shift = lo < 0 ? -lo : 0;
  // bucket terms by va-degree
  std::map<int, MLaurent> by_deg;
  for (const auto& [e, c] : terms_) {
    ExpVec ne = e;
    int d = ne[static_cast<std::size_t>(va)] + shift;
    ne[static_cast<std::size_t>(va)] = 0;
    by_deg[d].add_term(ne, c);
  }
  std::map<int, MLaurent> quot;
  while (!by_deg.empty()) {
    auto top = std::prev(by_deg.end());
    int d = top->first;
    MLaurent lead = top->second;
    by_deg.erase(top);
    if (d == 0) return false;  // leftover va-free remainder, nonzero
    quot[d - 1] += lead;
    // subtract (va - vb) * lead * va^(d-1): the va^d part cancels by design;
    // add back vb * lead at degree d-1.
    MLaurent back = lead * monomial(vb, 1);
    auto it = by_deg.find(d - 1);
    if (it == by_deg.end()) {
      if (!back.is_zero()) by_deg.emplace(d - 1, back);
    } else {
      it->second += back;
      if (it->second.is_zero()) by_deg.erase(it);
    }
  }
  MLaurent q;
  for (const auto& [d, part] : quot) {
    MLaurent shifted_part = part * monomial(va, d - shift);
    q += shifted_part;
  }
  quotient = q;
  return true;
}

MLaurent MLaurent::times_power(Var v, int k) const {
  if (k == 0) return *this;
  MLaurent out;
  for (const auto& [e, c] : terms_) {
    ExpVec ne = e;
    ne[static_cast<std::size_t>(v)] += k;
    out.terms_.emplace(ne, c);
  }
  return out;
}

std::string MLaurent::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.to_string() << ")";
    for (int k = 0; k < kNumVars; ++k) {
      int exp = e[static_cast<std::size_t>(k)];
      if (exp == 0) continue;
      os << "*" << var_name(static_cast<Var>(k));
      if (exp != 1) os << "^" << exp;
    }
  }
  return os.str();
}

MLaurent diff_poly(Var a, Var b) {
  MLaurent out = MLaurent::monomial(a, 1);
  out -= MLaurent::monomial(b, 1);
  return out;
}

}  // namespace rmatrix
