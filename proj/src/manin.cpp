#include "rmatrix/manin.hpp"

#include "rmatrix/linalg.hpp"

namespace rmatrix {

namespace {

const GLaurent kEmptyLaurent{};

void glaurent_add(GLaurent& acc, int exp, const BasisIndex& b, const Cyclotomic& v) {
  if (v.is_zero()) return;
  auto& elem = acc[exp];
  combo_add(elem, b, v);
  if (elem.empty()) acc.erase(exp);
}

}  // namespace

GLaurent glaurent_sum(const GLaurent& a, const GLaurent& b) {
  GLaurent out = a;
  for (const auto& [exp, elem] : b)
    for (const auto& [idx, v] : elem) glaurent_add(out, exp, idx, v);
  return out;
}

GLaurent glaurent_scale(const GLaurent& a, const Cyclotomic& s) {
  GLaurent out;
  if (s.is_zero()) return out;
  for (const auto& [exp, elem] : a)
    for (const auto& [idx, v] : elem) glaurent_add(out, exp, idx, v * s);
  return out;
}

GLaurent glaurent_shift(const GLaurent& a, int k) {
  GLaurent out;
  for (const auto& [exp, elem] : a) out.emplace(exp + k, elem);
  return out;
}

bool glaurent_is_zero(const GLaurent& a) {
  for (const auto& [exp, elem] : a) {
    (void)exp;
    if (!elem.empty()) return false;
  }
  return true;
}

const GLaurent& SeriesTensor::at(int k, const BasisIndex& a) const {
  auto it = coeff.find({k, a});
  return it == coeff.end() ? kEmptyLaurent : it->second;
}

const GLaurent& WBasis::at(int k, const BasisIndex& a) const {
  auto it = f.find({k, a});
  return it == f.end() ? kEmptyLaurent : it->second;
}

SeriesTensor expand(const Tensor2& r, int order) {
  if (order < 0) throw Error("expand: order must be non-negative");
  const int n = r.n;
  SeriesTensor out;
  out.n = n;
  out.order = order;
  out.canonical = true;

  Tensor2Const residue;  // the tensor of residues along the diagonal
  residue.n = n;

  const DiffFactor diag{Var::x, Var::y};
  for (const auto& [key, value] : r.e) {
    MLaurent polynomial_part = value.num();
    MLaurent rho;  // residue of the entry along y = x, as a function of x
    for (const auto& [fac, pow] : value.den()) {
      if (!(fac == diag)) throw PoleOrderError("expand: non-diagonal designated pole");
      if (pow > 1) throw PoleOrderError("expand: pole order along (y-x) exceeds 1");
    }
    if (value.den().count(diag)) {
      // value = num/(x-y); num = (x-y) q + rho(x) with rho = num|_{y:=x},
      // so value = q - rho(x)/(y-x) and the residue along the diagonal is
      // -rho.
      MLaurent num = value.num();
      rho = num.substituted_var(Var::y, Var::x);
      MLaurent qpart;
      if (!(num - rho).divide_exact_by_diff(Var::x, Var::y, qpart))
        throw Error("expand: inexact diagonal split (internal)");
      polynomial_part = qpart;
      rho = -rho;  // residue with respect to (y - x)
    } else {
      rho = MLaurent();
    }

    // canonical-shape bookkeeping: the residue must be a constant
    if (!rho.is_zero()) {
      if (rho.is_constant()) {
        residue.e.emplace(key, rho.constant_value());
      } else {
        out.canonical = false;
      }
    }

    // attachments from the regular part: c * x^i y^j (a (x) b)
    for (const auto& [e, c] : polynomial_part.terms()) {
      int i = e[static_cast<std::size_t>(Var::x)];
      int j = e[static_cast<std::size_t>(Var::y)];
      if (i < 0 || j < 0) out.canonical = false;
      if (i < 0 || i > order) continue;
      if (j < -order - 1 || j > order) continue;
      glaurent_add(out.coeff[{i, key.first}], j, key.second, c);
    }
    // attachments from the pole: -rho(x)/(y-x)| pole split already applied:
    // value contains -rho/(y-x)*(-1)... the pole part of the entry is
    // rho_signed/(y-x) with rho_signed = -(-rho) handled below.
    for (const auto& [e, c] : rho.terms()) {
      int i = e[static_cast<std::size_t>(Var::x)];
      if (i < 0) out.canonical = false;
      // rho(x)/(y-x) = rho(x) * sum_{k'>=0} x^k' y^(-k'-1)
      for (int k = (i > 0 ? i : 0); k <= order; ++k) {
        int yexp = -(k - i) - 1;
        if (yexp < -order - 1) continue;
        glaurent_add(out.coeff[{k, key.first}], yexp, key.second, c);
      }
    }
  }

  // prune empty attachments
  for (auto it = out.coeff.begin(); it != out.coeff.end();)
    it = glaurent_is_zero(it->second) ? out.coeff.erase(it) : std::next(it);

  if (out.canonical && !tconst_equal(residue, casimir(n))) out.canonical = false;
  return out;
}

Cyclotomic residue_pairing(int n, const GLaurent& f, const GLaurent& g) {
  Cyclotomic out;
  for (const auto& [lf, ef] : f) {
    auto it = g.find(-1 - lf);
    if (it == g.end()) continue;
    out += trace_form(n, ef, it->second);
  }
  return out;
}

WBasis w_basis(const SeriesTensor& s) {
  WBasis out;
  out.n = s.n;
  out.order = s.order;
  out.canonical = s.canonical;
  out.f = s.coeff;
  return out;
}

bool coisotropy_check(const WBasis& w) {
  if (!w.canonical) return false;
  std::vector<BasisIndex> basis = sl_basis(w.n);
  for (int k = 0; k <= w.order; ++k)
    for (int r = 0; k + r <= w.order - 1; ++r)
      for (const BasisIndex& a : basis)
        for (const BasisIndex& b : basis)
          if (!residue_pairing(w.n, w.at(k, a), w.at(r, b)).is_zero()) return false;
  return true;
}

namespace {

/// Index of (k, basis position) rows, and of Laurent coordinates, used by
/// the rank and span computations below.
std::vector<std::pair<int, BasisIndex>> w_index(const WBasis& w) {
  std::vector<std::pair<int, BasisIndex>> out;
  for (int k = 0; k <= w.order; ++k)
    for (const BasisIndex& a : sl_basis(w.n)) out.emplace_back(k, a);
  return out;
}

}  // namespace

bool lagrangian_complement_check(const WBasis& w) {
  const int n = w.n;
  std::vector<BasisIndex> basis = sl_basis(n);
  std::vector<std::pair<int, BasisIndex>> rows = w_index(w);
  const std::size_t d = basis.size();

  // (a) principal parts (exponents < 0) are linearly independent
  std::map<std::pair<int, BasisIndex>, std::size_t> col_of;
  Mat<Cyclotomic> principal(rows.size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    const GLaurent& f = w.at(rows[r].first, rows[r].second);
    for (const auto& [exp, elem] : f) {
      if (exp >= 0) continue;
      for (const auto& [b, v] : elem) {
        auto key = std::make_pair(exp, b);
        if (!col_of.count(key)) col_of.emplace(key, col_of.size());
      }
    }
  }
  for (std::size_t r = 0; r < rows.size(); ++r) {
    principal[r].assign(col_of.size(), Cyclotomic());
    const GLaurent& f = w.at(rows[r].first, rows[r].second);
    for (const auto& [exp, elem] : f) {
      if (exp >= 0) continue;
      for (const auto& [b, v] : elem) principal[r][col_of.at({exp, b})] = v;
    }
  }
  if (rank(std::move(principal)) != rows.size()) return false;

  // (b) duality against the topological basis z^r x_b
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto& [k, a] = rows[i];
    const GLaurent& f = w.at(k, a);
    for (int r = 0; r <= w.order; ++r)
      for (std::size_t bp = 0; bp < d; ++bp) {
        GLaurent zb{{r, LieCombo<Cyclotomic>{{basis[bp], Cyclotomic(BigRat(1))}}}};
        Cyclotomic value = residue_pairing(n, f, zb);
        bool diag = (r == k && basis[bp] == a);
        if (diag && !(value == Cyclotomic(BigRat(1)))) return false;
        if (!diag && !value.is_zero()) return false;
      }
  }
  return true;
}

SeriesTensor dual_basis_reconstruct(const WBasis& w) {
  const int n = w.n;
  std::vector<BasisIndex> basis = sl_basis(n);
  std::vector<std::pair<int, BasisIndex>> rows = w_index(w);
  const std::size_t total = rows.size();

  // P[i][j] = pairing(f_i, z^(k_j) x_(a_j))
  Mat<Cyclotomic> p(total, std::vector<Cyclotomic>(total));
  for (std::size_t i = 0; i < total; ++i) {
    const GLaurent& f = w.at(rows[i].first, rows[i].second);
    for (std::size_t j = 0; j < total; ++j) {
      GLaurent zb{{rows[j].first, LieCombo<Cyclotomic>{{rows[j].second, Cyclotomic(BigRat(1))}}}};
      p[i][j] = residue_pairing(n, f, zb);
    }
  }
  // For each target j solve c^T P = e_j^T, i.e. P^T c = e_j.
  Mat<Cyclotomic> pt(total, std::vector<Cyclotomic>(total));
  for (std::size_t i = 0; i < total; ++i)
    for (std::size_t j = 0; j < total; ++j) pt[i][j] = p[j][i];
  // invert P^T once
  Mat<Cyclotomic> aug(total, std::vector<Cyclotomic>(2 * total));
  for (std::size_t i = 0; i < total; ++i) {
    for (std::size_t j = 0; j < total; ++j) aug[i][j] = pt[i][j];
    aug[i][total + i] = Cyclotomic(BigRat(1));
  }
  auto pivots = rref(aug);
  if (pivots.size() != total || pivots.back() >= total)
    throw DualityViolated("dual_basis_reconstruct: singular pairing block");

  SeriesTensor out;
  out.n = n;
  out.order = w.order;
  out.canonical = w.canonical;
  for (std::size_t j = 0; j < total; ++j) {
    // c = (P^T)^{-1} e_j, i.e. c_i = inverse[i][j]
    GLaurent rebuilt;
    for (std::size_t i = 0; i < total; ++i) {
      const Cyclotomic& c = aug[i][total + j];
      if (c.is_zero()) continue;
      rebuilt = glaurent_sum(rebuilt, glaurent_scale(w.at(rows[i].first, rows[i].second), c));
    }
    if (!glaurent_is_zero(rebuilt)) out.coeff.emplace(rows[j], std::move(rebuilt));
  }
  return out;
}

bool s_stability_check(const WBasis& w) {
  std::vector<std::pair<int, BasisIndex>> rows = w_index(w);
  // coordinates: (exponent, basis index) pairs occurring anywhere
  std::map<std::pair<int, BasisIndex>, std::size_t> col_of;
  auto note = [&](const GLaurent& f, int shift) {
    for (const auto& [exp, elem] : f)
      for (const auto& [b, v] : elem) {
        (void)v;
        auto key = std::make_pair(exp + shift, b);
        if (!col_of.count(key)) col_of.emplace(key, col_of.size());
      }
  };
  for (const auto& row : rows) note(w.at(row.first, row.second), 0);
  for (const auto& row : rows)
    if (row.first <= w.order - 3) {
      note(w.at(row.first, row.second), -2);
      note(w.at(row.first, row.second), -3);
    }
  auto to_vec = [&](const GLaurent& f) {
    std::vector<Cyclotomic> v(col_of.size());
    for (const auto& [exp, elem] : f)
      for (const auto& [b, c] : elem) v[col_of.at({exp, b})] = c;
    return v;
  };
  // span matrix: columns = basis elements f_(k,a)
  Mat<Cyclotomic> span(col_of.size(), std::vector<Cyclotomic>(rows.size()));
  for (std::size_t j = 0; j < rows.size(); ++j) {
    auto v = to_vec(w.at(rows[j].first, rows[j].second));
    for (std::size_t i = 0; i < v.size(); ++i) span[i][j] = v[i];
  }
  std::size_t base_rank = rank(span);
  for (const auto& row : rows) {
    if (row.first > w.order - 3) continue;
    for (int s : {-2, -3}) {
      GLaurent shifted = glaurent_shift(w.at(row.first, row.second), s);
      Mat<Cyclotomic> aug = span;
      auto v = to_vec(shifted);
      for (std::size_t i = 0; i < v.size(); ++i) aug[i].push_back(v[i]);
      if (rank(std::move(aug)) != base_rank) return false;
    }
  }
  return true;
}

namespace {

ScalarLaurent trace_of_product(const MatLaurent& f, const MatLaurent& g, int trunc) {
  std::size_t n = f.size();
  ScalarLaurent out;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      const ScalarLaurent& a = f[i][k];
      const ScalarLaurent& b = g[k][i];
      for (const auto& [ea, ca] : a) {
        if (ea < -trunc || ea > trunc) throw TruncationError("residue_at_singularity: data exceeds truncation window");
        for (const auto& [eb, cb] : b) {
          if (eb < -trunc || eb > trunc)
            throw TruncationError("residue_at_singularity: data exceeds truncation window");
          Cyclotomic v = ca * cb;
          if (v.is_zero()) continue;
          auto it = out.find(ea + eb);
          if (it == out.end()) {
            out.emplace(ea + eb, v);
          } else {
            it->second += v;
            if (it->second.is_zero()) out.erase(it);
          }
        }
      }
    }
  return out;
}

Cyclotomic coefficient_at(const ScalarLaurent& s, int exp) {
  auto it = s.find(exp);
  return it == s.end() ? Cyclotomic() : it->second;
}

}  // namespace

Cyclotomic residue_at_singularity(const GermData& f, const GermData& g, int trunc) {
  if (f.curve != g.curve) throw DimensionMismatch("residue_at_singularity: mixed curve kinds");
  if (f.curve == CurveKind::nodal) {
    // omega = dz/z: res_0(h dz/z) = [z^0] h ; res_inf(h dz/z) = -[z^0] h.
    ScalarLaurent h0 = trace_of_product(f.at_zero, g.at_zero, trunc);
    ScalarLaurent hi = trace_of_product(f.at_inf, g.at_inf, trunc);
    return coefficient_at(h0, 0) - coefficient_at(hi, 0);
  }
  // omega = dz: res_inf(h dz) = -[z^-1] h.
  ScalarLaurent hi = trace_of_product(f.at_inf, g.at_inf, trunc);
  return -coefficient_at(hi, -1);
}

}  // namespace rmatrix
