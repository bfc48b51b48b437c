#include "rmatrix/lie.hpp"

#include <sstream>

namespace rmatrix {

std::string BasisIndex::name() const {
  std::ostringstream os;
  if (kind == Kind::E)
    os << "e_" << i << "_" << j;
  else
    os << "h_" << i;
  return os.str();
}

BasisIndex BasisIndex::from_name(const std::string& s) {
  auto bad = [&]() -> BasisIndex { throw ParseError("bad basis index '" + s + "'"); };
  if (s.size() < 3) return bad();
  if (s[0] == 'h' && s[1] == '_') {
    int k = 0;
    for (std::size_t p = 2; p < s.size(); ++p) {
      if (s[p] < '0' || s[p] > '9') return bad();
      k = k * 10 + (s[p] - '0');
    }
    if (k < 1) return bad();
    return H(k);
  }
  if (s[0] == 'e' && s[1] == '_') {
    auto mid = s.find('_', 2);
    if (mid == std::string::npos || mid + 1 >= s.size()) return bad();
    int i = 0, j = 0;
    for (std::size_t p = 2; p < mid; ++p) {
      if (s[p] < '0' || s[p] > '9') return bad();
      i = i * 10 + (s[p] - '0');
    }
    for (std::size_t p = mid + 1; p < s.size(); ++p) {
      if (s[p] < '0' || s[p] > '9') return bad();
      j = j * 10 + (s[p] - '0');
    }
    if (i < 1 || j < 1 || i == j) return bad();
    return E(i, j);
  }
  return bad();
}

int sl_dim(int n) { return n * n - 1; }

std::vector<BasisIndex> sl_basis(int n) {
  std::vector<BasisIndex> out;
  out.reserve(static_cast<std::size_t>(sl_dim(n)));
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      if (i != j) out.push_back(BasisIndex::E(i, j));
  for (int k = 1; k < n; ++k) out.push_back(BasisIndex::H(k));
  return out;
}

namespace {

void add_term(LieCombo<long>& acc, const BasisIndex& b, long v) {
  if (v == 0) return;
  auto it = acc.find(b);
  if (it == acc.end()) {
    acc.emplace(b, v);
  } else {
    it->second += v;
    if (it->second == 0) acc.erase(it);
  }
}

// E_ii - E_jj as an H-combination (i != j, 1-based).
void add_diag_difference(LieCombo<long>& acc, int i, int j, long scale) {
  if (i < j)
    for (int t = i; t < j; ++t) add_term(acc, BasisIndex::H(t), scale);
  else
    for (int t = j; t < i; ++t) add_term(acc, BasisIndex::H(t), -scale);
}

}  // namespace

LieCombo<long> bracket_basis(int n, const BasisIndex& a, const BasisIndex& b) {
  LieCombo<long> out;
  using Kind = BasisIndex::Kind;
  if (a.kind == Kind::E && b.kind == Kind::E) {
    // [E_ij, E_kl] = d_jk E_il - d_li E_kj
    int i = a.i, j = a.j, k = b.i, l = b.j;
    if (j == k && l == i) {
      add_diag_difference(out, i, j, 1);
    } else {
      if (j == k) add_term(out, BasisIndex::E(i, l), 1);
      if (l == i) add_term(out, BasisIndex::E(k, j), -1);
    }
  } else if (a.kind == Kind::H && b.kind == Kind::E) {
    int k = a.i, i = b.i, j = b.j;
    long c = (i == k ? 1 : 0) - (i == k + 1 ? 1 : 0) - (j == k ? 1 : 0) + (j == k + 1 ? 1 : 0);
    add_term(out, b, c);
  } else if (a.kind == Kind::E && b.kind == Kind::H) {
    for (auto& [idx, v] : bracket_basis(n, b, a)) add_term(out, idx, -v);
  }
  // [H, H] = 0
  return out;
}

long trace_pair(int n, const BasisIndex& a, const BasisIndex& b) {
  (void)n;
  using Kind = BasisIndex::Kind;
  if (a.kind == Kind::E && b.kind == Kind::E) return (a.j == b.i && b.j == a.i) ? 1 : 0;
  if (a.kind == Kind::H && b.kind == Kind::H) {
    int d = a.i - b.i;
    if (d == 0) return 2;
    if (d == 1 || d == -1) return -1;
    return 0;
  }
  return 0;
}

BigRat cartan_dual_coeff(int n, int i, int j) {
  int lo = i < j ? i : j;
  int hi = i < j ? j : i;
  return BigRat(BigInt(lo) * BigInt(n - hi), BigInt(n));
}

LieCombo<Cyclotomic> dual_basis_elem(int n, const BasisIndex& a) {
  LieCombo<Cyclotomic> out;
  if (a.kind == BasisIndex::Kind::E) {
    out.emplace(BasisIndex::E(a.j, a.i), Cyclotomic(BigRat(1)));
    return out;
  }
  for (int l = 1; l < n; ++l) {
    BigRat c = cartan_dual_coeff(n, a.i, l);
    if (c != 0) out.emplace(BasisIndex::H(l), Cyclotomic(c));
  }
  return out;
}

LieElem lie_bracket(const LieElem& a, const LieElem& b) {
  if (a.n != b.n) throw DimensionMismatch("bracket: mismatched n");
  return LieElem{a.n, bracket(a.n, a.c, b.c)};
}

Cyclotomic lie_trace_form(const LieElem& a, const LieElem& b) {
  if (a.n != b.n) throw DimensionMismatch("trace_form: mismatched n");
  return trace_form(a.n, a.c, b.c);
}

Tensor2Const casimir(int n) {
  if (n < 2) throw DimensionMismatch("casimir: n must be >= 2");
  Tensor2Const t;
  t.n = n;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      if (i != j) t.e[{BasisIndex::E(i, j), BasisIndex::E(j, i)}] = Cyclotomic(BigRat(1));
  for (int k = 1; k < n; ++k)
    for (int l = 1; l < n; ++l) {
      BigRat c = cartan_dual_coeff(n, k, l);
      if (c != 0) t.e[{BasisIndex::H(k), BasisIndex::H(l)}] = Cyclotomic(c);
    }
  return t;
}

std::vector<LieElem> g_basis(int n) {
  if (n < 2) throw DimensionMismatch("g_basis: n must be >= 2");
  std::vector<LieElem> out;
  for (int j = 1; j < n; ++j) {
    LieElem g;
    g.n = n;
    Cyclotomic partial;  // partial sums of the diagonal give H coordinates
    for (int k = 1; k < n; ++k) {
      partial += Cyclotomic::zeta(static_cast<unsigned>(n), j * (k - 1));
      if (!partial.is_zero()) combo_add(g.c, BasisIndex::H(k), partial);
    }
    out.push_back(std::move(g));
  }
  return out;
}

std::vector<LieElem> g_dual(int n) {
  std::vector<LieElem> gs = g_basis(n);
  std::vector<LieElem> out;
  Cyclotomic inv_n = Cyclotomic(BigRat(1, n));
  for (int j = 1; j < n; ++j) {
    const LieElem& gnj = gs[static_cast<std::size_t>(n - j - 1)];  // g_(n-j)
    out.push_back(LieElem{n, combo_scale(gnj.c, inv_n)});
  }
  return out;
}

std::vector<std::vector<Cyclotomic>> tensor_to_map(const Tensor2Const& t) {
  int n = t.n;
  std::vector<BasisIndex> basis = sl_basis(n);
  int d = sl_dim(n);
  std::vector<std::vector<Cyclotomic>> m(static_cast<std::size_t>(d),
                                         std::vector<Cyclotomic>(static_cast<std::size_t>(d)));
  // column c: image of basis[c] under v |-> sum trace(a, v) * b
  for (int c = 0; c < d; ++c) {
    LieCombo<Cyclotomic> image;
    for (const auto& [key, coef] : t.e) {
      long tp = trace_pair(n, key.first, basis[static_cast<std::size_t>(c)]);
      if (tp == 0) continue;
      combo_add(image, key.second, Cyclotomic(coef * Cyclotomic(BigRat(tp))));
    }
    for (int r = 0; r < d; ++r) {
      auto it = image.find(basis[static_cast<std::size_t>(r)]);
      if (it != image.end()) m[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = it->second;
    }
  }
  return m;
}

LieCombo<Cyclotomic> apply_map(int n, const std::vector<std::vector<Cyclotomic>>& m,
                               const LieCombo<Cyclotomic>& v) {
  std::vector<BasisIndex> basis = sl_basis(n);
  int d = sl_dim(n);
  LieCombo<Cyclotomic> out;
  for (int c = 0; c < d; ++c) {
    auto it = v.find(basis[static_cast<std::size_t>(c)]);
    if (it == v.end()) continue;
    for (int r = 0; r < d; ++r) {
      const Cyclotomic& mc = m[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
      if (mc.is_zero()) continue;
      combo_add(out, basis[static_cast<std::size_t>(r)], Cyclotomic(mc * it->second));
    }
  }
  return out;
}

Tensor2Const ad_invariance_bracket(const Tensor2Const& t, const LieElem& f) {
  if (t.n != f.n) throw DimensionMismatch("ad_invariance_bracket: mismatched n");
  Tensor2Const out;
  out.n = t.n;
  auto add = [&](const BasisIndex& a, const BasisIndex& b, const Cyclotomic& v) {
    if (v.is_zero()) return;
    auto key = std::make_pair(a, b);
    auto it = out.e.find(key);
    if (it == out.e.end()) {
      out.e.emplace(key, v);
    } else {
      it->second += v;
      if (it->second.is_zero()) out.e.erase(it);
    }
  };
  for (const auto& [key, coef] : t.e) {
    // [a (x) b, f (x) 1 + 1 (x) f] = [a,f] (x) b + a (x) [b,f]
    for (const auto& [fb, fv] : f.c) {
      for (const auto& [ic, sc] : bracket_basis(t.n, key.first, fb))
        add(ic, key.second, coef * fv * Cyclotomic(BigRat(sc)));
      for (const auto& [ic, sc] : bracket_basis(t.n, key.second, fb))
        add(key.first, ic, coef * fv * Cyclotomic(BigRat(sc)));
    }
  }
  return out;
}

Tensor2Const tconst_flip(const Tensor2Const& t) {
  Tensor2Const out;
  out.n = t.n;
  for (const auto& [key, coef] : t.e) out.e[{key.second, key.first}] = coef;
  return out;
}

Tensor2Const tconst_sum(const Tensor2Const& a, const Tensor2Const& b) {
  if (a.n != b.n) throw DimensionMismatch("tconst_sum: mismatched n");
  Tensor2Const out = a;
  for (const auto& [key, coef] : b.e) {
    auto it = out.e.find(key);
    if (it == out.e.end()) {
      if (!coef.is_zero()) out.e.emplace(key, coef);
    } else {
      it->second += coef;
      if (it->second.is_zero()) out.e.erase(it);
    }
  }
  return out;
}

Tensor2Const tconst_scale(const Tensor2Const& a, const Cyclotomic& s) {
  Tensor2Const out;
  out.n = a.n;
  if (s.is_zero()) return out;
  for (const auto& [key, coef] : a.e) {
    Cyclotomic v = coef * s;
    if (!v.is_zero()) out.e.emplace(key, v);
  }
  return out;
}

bool tconst_equal(const Tensor2Const& a, const Tensor2Const& b) {
  return a.n == b.n && a.e == b.e;
}

}  // namespace rmatrix
