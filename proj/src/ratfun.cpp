#include "rmatrix/ratfun.hpp"

#include <sstream>

namespace rmatrix {

RatFun::RatFun(MLaurent num, std::map<DiffFactor, int> den)
    : num_(std::move(num)), den_(std::move(den)) {
  for (const auto& [f, p] : den_) {
    if (p < 0) throw Error("RatFun: negative denominator multiplicity");
    if (!(f.a < f.b)) throw Error("RatFun: difference factor not in canonical order");
  }
  normalize();
}

RatFun RatFun::one_over_diff(Var a, Var b) {
  if (a == b) throw Error("one_over_diff: identical variables");
  MLaurent num(Cyclotomic(BigRat(1)));
  DiffFactor f{a, b};
  if (b < a) {
    f = DiffFactor{b, a};
    num = -num;  // 1/(a-b) = -1/(b-a)
  }
  return RatFun(std::move(num), {{f, 1}});
}

void RatFun::normalize() {
  if (num_.is_zero()) {
    den_.clear();
    return;
  }
  for (auto it = den_.begin(); it != den_.end();) {
    while (it->second > 0) {
      MLaurent q;
      if (!num_.divide_exact_by_diff(it->first.a, it->first.b, q)) break;
      num_ = std::move(q);
      --it->second;
    }
    if (it->second == 0)
      it = den_.erase(it);
    else
      ++it;
  }
}

namespace {

MLaurent den_to_poly(const std::map<DiffFactor, int>& den) {
  MLaurent out(Cyclotomic(BigRat(1)));
  for (const auto& [f, p] : den)
    for (int t = 0; t < p; ++t) out *= diff_poly(f.a, f.b);
  return out;
}

// The factors of b missing from a (pointwise max deficit).
std::map<DiffFactor, int> missing_factors(const std::map<DiffFactor, int>& a,
                                          const std::map<DiffFactor, int>& b) {
  std::map<DiffFactor, int> out;
  for (const auto& [f, p] : b) {
    auto it = a.find(f);
    int have = it == a.end() ? 0 : it->second;
    if (p > have) out.emplace(f, p - have);
  }
  return out;
}

}  // namespace

RatFun RatFun::operator-() const {
  RatFun out = *this;
  out.num_ = -out.num_;
  return out;
}

RatFun& RatFun::operator+=(const RatFun& o) {
  std::map<DiffFactor, int> lcm = den_;
  for (const auto& [f, p] : o.den_) {
    auto it = lcm.find(f);
    if (it == lcm.end())
      lcm.emplace(f, p);
    else if (it->second < p)
      it->second = p;
  }
  MLaurent left = num_ * den_to_poly(missing_factors(den_, lcm));
  MLaurent right = o.num_ * den_to_poly(missing_factors(o.den_, lcm));
  num_ = left + right;
  den_ = std::move(lcm);
  normalize();
  return *this;
}

RatFun& RatFun::operator-=(const RatFun& o) { return *this += -o; }

RatFun operator*(const RatFun& a, const RatFun& b) {
  MLaurent num = a.num_ * b.num_;
  std::map<DiffFactor, int> den = a.den_;
  for (const auto& [f, p] : b.den_) den[f] += p;
  return RatFun(std::move(num), std::move(den));
}

RatFun RatFun::scaled(const Cyclotomic& c) const {
  RatFun out;
  out.num_ = num_.scaled(c);
  if (!out.num_.is_zero()) out.den_ = den_;
  return out;
}

bool operator==(const RatFun& a, const RatFun& b) {
  // cross-multiplication: a.num * (b.den missing from a) == b.num * (...)
  MLaurent left = a.num_ * den_to_poly(missing_factors(a.den_, b.den_));
  MLaurent right = b.num_ * den_to_poly(missing_factors(b.den_, a.den_));
  return left == right;
}

RatFun RatFun::swapped_xy() const {
  return renamed({{Var::x, Var::y}, {Var::y, Var::x}});
}

RatFun RatFun::renamed(const std::map<Var, Var>& m) const {
  RatFun out;
  out.num_ = num_.rename(m);
  for (const auto& [f, p] : den_) {
    auto find = [&](Var v) {
      auto it = m.find(v);
      return it == m.end() ? v : it->second;
    };
    Var na = find(f.a), nb = find(f.b);
    if (na == nb) throw Error("RatFun::renamed: denominator factor collapses");
    if (nb < na) {
      std::swap(na, nb);
      if (p % 2 != 0) out.num_ = -out.num_;  // (a-b) = -(b-a)
    }
    out.den_[DiffFactor{na, nb}] += p;
  }
  return out;
}

RatFun RatFun::shifted_xy(const BigRat& a) const {
  // x := x + a, y := y + a. Every difference factor in the designated set
  // that involves x and y only is invariant; the numerator must be
  // polynomial in x and y.
  RatFun out;
  out.num_ = num_.shifted(Var::x, a).shifted(Var::y, a);
  out.den_ = den_;
  out.normalize();
  return out;
}

Cyclotomic RatFun::evaluated(const std::map<Var, BigRat>& point) const {
  MLaurent n = num_.evaluated(point);
  if (!n.is_constant()) throw Error("RatFun::evaluated: unassigned variables remain");
  Cyclotomic value = n.constant_value();
  for (const auto& [f, p] : den_) {
    auto ita = point.find(f.a);
    auto itb = point.find(f.b);
    if (ita == point.end() || itb == point.end())
      throw Error("RatFun::evaluated: unassigned denominator variable");
    BigRat d = ita->second - itb->second;
    if (d == 0) throw PoleAtPoint("evaluation on the pole (" + var_name(f.a) + " - " +
                                  var_name(f.b) + ")");
    BigRat dp(1);
    for (int t = 0; t < p; ++t) dp *= d;
    value *= Cyclotomic(BigRat(1) / dp);
  }
  return value;
}

std::string RatFun::to_string() const {
  std::ostringstream os;
  os << "(" << num_.to_string() << ")";
  if (!den_.empty()) {
    os << " / ";
    for (const auto& [f, p] : den_) {
      os << "(" << var_name(f.a) << "-" << var_name(f.b) << ")";
      if (p != 1) os << "^" << p;
    }
  }
  return os.str();
}

}  // namespace rmatrix
