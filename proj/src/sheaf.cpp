#include "rmatrix/sheaf.hpp"

namespace rmatrix {

namespace {

using F = UFrac<Cyclotomic>;
using P = UPoly<Cyclotomic>;

P p_const(const BigRat& v) { return P(Cyclotomic(v)); }
P p_x() { return P::monomial(1, Cyclotomic(BigRat(1))); }

/// RatFun in x only -> UFrac (negative exponents become an x-power
/// denominator).
F ratfun_to_ufrac(const RatFun& r) {
  if (!r.den().empty()) throw Error("ratfun_to_ufrac: difference factors present");
  int lo, hi;
  r.num().exponent_range(Var::x, lo, hi);
  int shift = lo < 0 ? -lo : 0;
  P num;
  num.c.assign(static_cast<std::size_t>(hi + shift) + 1, Cyclotomic());
  for (const auto& [e, c] : r.num().terms()) {
    for (int k = 0; k < kNumVars; ++k)
      if (k != static_cast<int>(Var::x) && e[static_cast<std::size_t>(k)] != 0)
        throw Error("ratfun_to_ufrac: not univariate in x");
    num.c[static_cast<std::size_t>(e[static_cast<std::size_t>(Var::x)] + shift)] = c;
  }
  num.strip();
  return F(num, P::monomial(shift, Cyclotomic(BigRat(1))));
}

/// UFrac -> RatFun; the denominator must be a monomial c*x^k, anything else
/// signals a singularity outside the designated pole set.
RatFun ufrac_to_ratfun(const F& f) {
  if (f.is_zero()) return RatFun();
  int nonzero = 0, k = 0;
  for (std::size_t i = 0; i < f.den.c.size(); ++i)
    if (!f.den.c[i].is_zero()) {
      ++nonzero;
      k = static_cast<int>(i);
    }
  if (nonzero != 1)
    throw SingularMatrix("residue inverse produced a non-designated denominator");
  Cyclotomic scale = f.den.c[static_cast<std::size_t>(k)].inv();
  MLaurent num;
  for (std::size_t i = 0; i < f.num.c.size(); ++i) {
    if (f.num.c[i].is_zero()) continue;
    ExpVec e{};
    e[static_cast<std::size_t>(Var::x)] = static_cast<int>(i) - k;
    num.add_term(e, f.num.c[i] * scale);
  }
  return RatFun(std::move(num));
}

struct LinearSystem {
  // rows over UPoly in x; columns = unknowns
  std::vector<std::vector<P>> rows;
  std::size_t cols = 0;

  void add_row(std::vector<P> r) { rows.push_back(std::move(r)); }
};

RMat identity_block(int n, int m, int offset) {
  RMat out(static_cast<std::size_t>(n), std::vector<BigRat>(static_cast<std::size_t>(m), BigRat(0)));
  for (int i = 0; i < n; ++i) out[static_cast<std::size_t>(i)][static_cast<std::size_t>(i + offset)] = 1;
  return out;
}

}  // namespace

std::string curve_name(CurveKind k) { return k == CurveKind::nodal ? "nodal" : "cuspidal"; }

CurveKind curve_from_name(const std::string& s) {
  if (s == "nodal") return CurveKind::nodal;
  if (s == "cuspidal") return CurveKind::cuspidal;
  throw ParseError("unknown curve kind '" + s + "'");
}

MatTriple canonical_triple(int n, CurveKind curve) {
  if (n < 2) throw DimensionMismatch("canonical_triple: n must be >= 2");
  MatTriple t;
  t.n = n;
  t.m = n + 1;
  t.curve = curve;
  if (curve == CurveKind::nodal) {
    t.first = identity_block(n, n + 1, 1);   // Theta_0 = [0 | I_n]
    t.second = identity_block(n, n + 1, 0);  // Theta_inf = [I_n | 0]
  } else {
    t.first = identity_block(n, n + 1, 0);   // Theta_o = [I_n | 0]
    t.second = identity_block(n, n + 1, 1);  // Theta_eps = [0 | I_n]
  }
  return t;
}

long euler_characteristic(long deg, int n, int m) { return deg + (m - n); }

SolBasis sol_space(int n, CurveKind curve) { return sol_space(canonical_triple(n, curve)); }

SolBasis sol_space(const MatTriple& triple) {
  const int n = triple.n, m = triple.m;
  const std::size_t nc = static_cast<std::size_t>(m) * static_cast<std::size_t>(m);
  const std::size_t na = static_cast<std::size_t>(n) * static_cast<std::size_t>(n);
  const std::size_t cols = nc + 2 * na;
  // unknown order: C (m x m, row-major), A (n x n), B (n x n); C eliminated
  // first so the free parameters live in the (A, B) block.
  auto idxC = [&](int r, int c) { return static_cast<std::size_t>(r) * m + c; };
  auto idxA = [&](int r, int c) { return nc + static_cast<std::size_t>(r) * n + c; };
  auto idxB = [&](int r, int c) { return nc + na + static_cast<std::size_t>(r) * n + c; };

  LinearSystem sys;
  sys.cols = cols;
  auto blank = [&]() { return std::vector<P>(cols); };

  if (triple.curve == CurveKind::nodal) {
    const RMat& th0 = triple.first;
    const RMat& thi = triple.second;
    // A Theta_0 + x Theta_0 C = 0
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < m; ++c) {
        auto row = blank();
        for (int k = 0; k < n; ++k)
          if (th0[static_cast<std::size_t>(k)][static_cast<std::size_t>(c)] != 0)
            row[idxA(r, k)] = row[idxA(r, k)] +
                p_const(th0[static_cast<std::size_t>(k)][static_cast<std::size_t>(c)]);
        for (int k = 0; k < m; ++k)
          if (th0[static_cast<std::size_t>(r)][static_cast<std::size_t>(k)] != 0)
            row[idxC(k, c)] = row[idxC(k, c)] +
                p_x() * p_const(th0[static_cast<std::size_t>(r)][static_cast<std::size_t>(k)]);
        sys.add_row(std::move(row));
      }
    // B Theta_inf - Theta_inf C = 0
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < m; ++c) {
        auto row = blank();
        for (int k = 0; k < n; ++k)
          if (thi[static_cast<std::size_t>(k)][static_cast<std::size_t>(c)] != 0)
            row[idxB(r, k)] = row[idxB(r, k)] +
                p_const(thi[static_cast<std::size_t>(k)][static_cast<std::size_t>(c)]);
        for (int k = 0; k < m; ++k)
          if (thi[static_cast<std::size_t>(r)][static_cast<std::size_t>(k)] != 0)
            row[idxC(k, c)] = row[idxC(k, c)] -
                p_const(thi[static_cast<std::size_t>(r)][static_cast<std::size_t>(k)]);
        sys.add_row(std::move(row));
      }
  } else {
    const RMat& tho = triple.first;
    const RMat& the = triple.second;
    // B Theta_o - Theta_o D = 0
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < m; ++c) {
        auto row = blank();
        for (int k = 0; k < n; ++k)
          if (tho[static_cast<std::size_t>(k)][static_cast<std::size_t>(c)] != 0)
            row[idxB(r, k)] = row[idxB(r, k)] +
                p_const(tho[static_cast<std::size_t>(k)][static_cast<std::size_t>(c)]);
        for (int k = 0; k < m; ++k)
          if (tho[static_cast<std::size_t>(r)][static_cast<std::size_t>(k)] != 0)
            row[idxC(k, c)] = row[idxC(k, c)] -
                p_const(tho[static_cast<std::size_t>(r)][static_cast<std::size_t>(k)]);
        sys.add_row(std::move(row));
      }
    // A Theta_o + B Theta_eps + (x Theta_o - Theta_eps) D = 0
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < m; ++c) {
        auto row = blank();
        for (int k = 0; k < n; ++k) {
          if (tho[static_cast<std::size_t>(k)][static_cast<std::size_t>(c)] != 0)
            row[idxA(r, k)] = row[idxA(r, k)] +
                p_const(tho[static_cast<std::size_t>(k)][static_cast<std::size_t>(c)]);
          if (the[static_cast<std::size_t>(k)][static_cast<std::size_t>(c)] != 0)
            row[idxB(r, k)] = row[idxB(r, k)] +
                p_const(the[static_cast<std::size_t>(k)][static_cast<std::size_t>(c)]);
        }
        for (int k = 0; k < m; ++k) {
          BigRat o = tho[static_cast<std::size_t>(r)][static_cast<std::size_t>(k)];
          BigRat eps = the[static_cast<std::size_t>(r)][static_cast<std::size_t>(k)];
          if (o != 0) row[idxC(k, c)] = row[idxC(k, c)] + p_x() * p_const(o);
          if (eps != 0) row[idxC(k, c)] = row[idxC(k, c)] - p_const(eps);
        }
        sys.add_row(std::move(row));
      }
  }
  // tracelessness of A and B
  {
    auto rowA = blank();
    auto rowB = blank();
    for (int k = 0; k < n; ++k) {
      rowA[idxA(k, k)] = p_const(1);
      rowB[idxB(k, k)] = p_const(1);
    }
    sys.add_row(std::move(rowA));
    sys.add_row(std::move(rowB));
  }

  // Assemble over the fraction field and compute the nullspace.
  Mat<F> mat(sys.rows.size(), std::vector<F>(cols));
  for (std::size_t i = 0; i < sys.rows.size(); ++i)
    for (std::size_t j = 0; j < cols; ++j)
      if (!sys.rows[i][j].is_zero()) mat[i][j] = F(sys.rows[i][j], P(Cyclotomic(BigRat(1))));
  std::vector<std::vector<F>> kernel = nullspace(std::move(mat));

  // Project onto the (A, B) block and put the projected family into reduced
  // echelon form for a canonical basis.
  Mat<F> proj;
  for (const auto& v : kernel) proj.emplace_back(v.begin() + static_cast<std::ptrdiff_t>(nc), v.end());
  rref(proj);

  SolBasis out;
  out.n = n;
  out.curve = triple.curve;
  for (auto& row : proj) {
    bool zero = true;
    for (const auto& f : row)
      if (!f.is_zero()) {
        zero = false;
        break;
      }
    if (zero) continue;
    // clear denominators, divide by the common polynomial gcd, make the
    // first nonzero entry monic
    P lcm(Cyclotomic(BigRat(1)));
    for (const auto& f : row)
      if (!f.is_zero()) {
        P g = P::gcd(lcm, f.den);
        P q, r;
        P::divmod(f.den, g, q, r);
        lcm = lcm * q;
      }
    std::vector<P> cleared(row.size());
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (row[j].is_zero()) continue;
      P q, r;
      P::divmod(lcm, row[j].den, q, r);
      cleared[j] = row[j].num * q;
    }
    P common;
    for (const auto& p : cleared)
      if (!p.is_zero()) common = common.is_zero() ? p : P::gcd(common, p);
    if (common.degree() > 0)
      for (auto& p : cleared) {
        if (p.is_zero()) continue;
        P q, r;
        P::divmod(p, common, q, r);
        p = std::move(q);
      }
    Cyclotomic lead;
    for (const auto& p : cleared)
      if (!p.is_zero()) {
        lead = p.c.back();
        break;
      }
    Cyclotomic inv_lead = lead.inv();
    SolPair pair;
    pair.A.assign(static_cast<std::size_t>(n), std::vector<RatFun>(static_cast<std::size_t>(n)));
    pair.B.assign(static_cast<std::size_t>(n), std::vector<RatFun>(static_cast<std::size_t>(n)));
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (cleared[j].is_zero()) continue;
      MLaurent ml;
      for (std::size_t d = 0; d < cleared[j].c.size(); ++d) {
        if (cleared[j].c[d].is_zero()) continue;
        ExpVec e{};
        e[static_cast<std::size_t>(Var::x)] = static_cast<int>(d);
        ml.add_term(e, cleared[j].c[d] * inv_lead);
      }
      RatFun value(std::move(ml));
      if (j < na)
        pair.A[j / static_cast<std::size_t>(n)][j % static_cast<std::size_t>(n)] = value;
      else
        pair.B[(j - na) / static_cast<std::size_t>(n)][(j - na) % static_cast<std::size_t>(n)] = value;
    }
    out.elems.push_back(std::move(pair));
  }
  return out;
}

bool sol_contains(const SolBasis& basis, const SolPair& phi) {
  const int n = basis.n;
  const std::size_t na = static_cast<std::size_t>(n) * static_cast<std::size_t>(n);
  Mat<F> mat(2 * na, std::vector<F>(basis.elems.size()));
  std::vector<F> target(2 * na);
  for (std::size_t col = 0; col < basis.elems.size(); ++col) {
    const SolPair& p = basis.elems[col];
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c) {
        mat[static_cast<std::size_t>(r) * n + c][col] =
            ratfun_to_ufrac(p.A[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)]);
        mat[na + static_cast<std::size_t>(r) * n + c][col] =
            ratfun_to_ufrac(p.B[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)]);
      }
  }
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) {
      target[static_cast<std::size_t>(r) * n + c] =
          ratfun_to_ufrac(phi.A[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)]);
      target[na + static_cast<std::size_t>(r) * n + c] =
          ratfun_to_ufrac(phi.B[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)]);
    }
  // consistency: rank of [mat] equals rank of [mat | target]
  Mat<F> aug = mat;
  for (std::size_t r = 0; r < aug.size(); ++r) aug[r].push_back(target[r]);
  return rank(std::move(mat)) == rank(std::move(aug));
}

LieCombo<RatFun> res_map(const SolPair& phi, CurveKind curve, int n) {
  std::vector<std::vector<RatFun>> mat(static_cast<std::size_t>(n),
                                       std::vector<RatFun>(static_cast<std::size_t>(n)));
  RatFun xinv(MLaurent::monomial(Var::x, -1));
  RatFun xpos(MLaurent::monomial(Var::x, 1));
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) {
      RatFun v = phi.A[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] +
                 xpos * phi.B[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
      if (curve == CurveKind::nodal) v = v * xinv;
      mat[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = v;
    }
  return matrix_to_combo(n, mat);
}

LieCombo<RatFun> ev_map(const SolPair& phi, int n) {
  std::vector<std::vector<RatFun>> mat(static_cast<std::size_t>(n),
                                       std::vector<RatFun>(static_cast<std::size_t>(n)));
  RatFun ypos(MLaurent::monomial(Var::y, 1));
  RatFun pole = RatFun::one_over_diff(Var::y, Var::x);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c)
      mat[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] =
          (phi.A[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] +
           ypos * phi.B[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)]) *
          pole;
  return matrix_to_combo(n, mat);
}

namespace {

struct ResSolver {
  int n;
  CurveKind curve;
  SolBasis basis;
  Mat<F> resmat;  // d x d, column i = coordinates of res(Phi_i)

  explicit ResSolver(const MatTriple& triple) : n(triple.n), curve(triple.curve) {
    basis = sol_space(triple);
    int d = sl_dim(n);
    if (static_cast<int>(basis.elems.size()) != d)
      throw SingularMatrix("solution space has unexpected dimension");
    std::vector<BasisIndex> bl = sl_basis(n);
    resmat.assign(static_cast<std::size_t>(d), std::vector<F>(static_cast<std::size_t>(d)));
    for (int i = 0; i < d; ++i) {
      LieCombo<RatFun> res = res_map(basis.elems[static_cast<std::size_t>(i)], curve, n);
      for (int r = 0; r < d; ++r) {
        auto it = res.find(bl[static_cast<std::size_t>(r)]);
        if (it != res.end())
          resmat[static_cast<std::size_t>(r)][static_cast<std::size_t>(i)] =
              ratfun_to_ufrac(it->second);
      }
    }
  }

  /// Solves res(Phi) = target and returns Phi as (A, B) with RatFun entries.
  SolPair invert(const LieCombo<Cyclotomic>& target) const {
    int d = sl_dim(n);
    std::vector<BasisIndex> bl = sl_basis(n);
    std::vector<F> rhs(static_cast<std::size_t>(d));
    for (int r = 0; r < d; ++r) {
      auto it = target.find(bl[static_cast<std::size_t>(r)]);
      if (it != target.end()) rhs[static_cast<std::size_t>(r)] = F(it->second);
    }
    auto sol = solve(resmat, rhs);
    if (!sol) throw SingularMatrix("residue matrix is singular");
    SolPair out;
    out.A.assign(static_cast<std::size_t>(n), std::vector<RatFun>(static_cast<std::size_t>(n)));
    out.B.assign(static_cast<std::size_t>(n), std::vector<RatFun>(static_cast<std::size_t>(n)));
    for (int i = 0; i < d; ++i) {
      const F& coef = (*sol)[static_cast<std::size_t>(i)];
      if (coef.is_zero()) continue;
      RatFun coef_rf = ufrac_to_ratfun(coef);
      const SolPair& p = basis.elems[static_cast<std::size_t>(i)];
      for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) {
          out.A[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] +=
              coef_rf * p.A[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
          out.B[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] +=
              coef_rf * p.B[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
        }
    }
    return out;
  }
};

}  // namespace

Mat<RatFun> rsharp(int n, CurveKind curve) {
  ResSolver solver(canonical_triple(n, curve));
  int d = sl_dim(n);
  std::vector<BasisIndex> bl = sl_basis(n);
  Mat<RatFun> out(static_cast<std::size_t>(d), std::vector<RatFun>(static_cast<std::size_t>(d)));
  for (int a = 0; a < d; ++a) {
    LieCombo<Cyclotomic> unit;
    unit.emplace(bl[static_cast<std::size_t>(a)], Cyclotomic(BigRat(1)));
    LieCombo<RatFun> image = ev_map(solver.invert(unit), n);
    for (int r = 0; r < d; ++r) {
      auto it = image.find(bl[static_cast<std::size_t>(r)]);
      if (it != image.end())
        out[static_cast<std::size_t>(r)][static_cast<std::size_t>(a)] = it->second;
    }
  }
  return out;
}

Tensor2 geometric_r(const MatTriple& triple) {
  ResSolver solver(triple);
  int n = triple.n;
  Tensor2 out;
  out.n = n;
  for (const BasisIndex& a : sl_basis(n)) {
    LieCombo<RatFun> image = ev_map(solver.invert(dual_basis_elem(n, a)), n);
    for (const auto& [b, v] : image) out.add(a, b, v);
  }
  return out;
}

Tensor2 geometric_r(int n, CurveKind curve) { return geometric_r(canonical_triple(n, curve)); }

}  // namespace rmatrix
