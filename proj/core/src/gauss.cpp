#include "qav/gauss.hpp"

#include <algorithm>

#include "qav/cartan.hpp"
#include "qav/errors.hpp"

namespace qav {

// ---------------------------------------------------------------------------
// Block matrices and the flattened entry field
// ---------------------------------------------------------------------------

BlockMat::BlockMat(int k_, int N_) : k(k_), N(N_), b(size_t(k_) * k_) {
  for (auto& m : b) m = MatrixRF(N, N);
}

BlockMat BlockMat::operator*(const BlockMat& o) const {
  BlockMat r(k, N);
  for (int i = 1; i <= k; ++i)
    for (int j = 1; j <= k; ++j) {
      MatrixRF s(N, N);
      for (int p = 1; p <= k; ++p) {
        if (at(i, p).is_zero() || o.at(p, j).is_zero()) continue;
        s = s + at(i, p) * o.at(p, j);
      }
      r.at(i, j) = s;
    }
  return r;
}

bool BlockMat::operator==(const BlockMat& o) const {
  return k == o.k && N == o.N &&
         std::equal(b.begin(), b.end(), o.b.begin());
}

BlockMat BlockMat::substitute(Var v, const RatFunc& val) const {
  BlockMat r = *this;
  for (auto& m : r.b) m = m.substitute(v, val);
  return r;
}

MatrixRF mat_inverse(const MatrixRF& m) {
  if (m.rows() != m.cols()) throw BadArgument("inverse of a non-square matrix");
  int d = m.rows();
  MatrixRF a = m, inv = MatrixRF::identity(d);
  for (int col = 0; col < d; ++col) {
    int piv = -1;
    for (int r = col; r < d; ++r)
      if (!a.at(r, col).is_zero()) {
        piv = r;
        break;
      }
    if (piv < 0) throw SingularComplement("column " + std::to_string(col));
    if (piv != col)
      for (int c = 0; c < d; ++c) {
        std::swap(a.at(piv, c), a.at(col, c));
        std::swap(inv.at(piv, c), inv.at(col, c));
      }
    RatFunc pi = a.at(col, col).inverse();
    for (int c = 0; c < d; ++c) {
      a.at(col, c) = a.at(col, c) * pi;
      inv.at(col, c) = inv.at(col, c) * pi;
    }
    for (int r = 0; r < d; ++r) {
      if (r == col || a.at(r, col).is_zero()) continue;
      RatFunc f = a.at(r, col);
      for (int c = 0; c < d; ++c) {
        a.at(r, c) = a.at(r, c) - f * a.at(col, c);
        inv.at(r, c) = inv.at(r, c) - f * inv.at(col, c);
      }
    }
  }
  return inv;
}

namespace {

// Flatten a sub-grid of blocks (1-based block index lists) into one MatrixRF.
MatrixRF flatten(const BlockMat& m, const std::vector<int>& rows,
                 const std::vector<int>& cols) {
  int N = m.N;
  MatrixRF out(int(rows.size()) * N, int(cols.size()) * N);
  for (size_t bi = 0; bi < rows.size(); ++bi)
    for (size_t bj = 0; bj < cols.size(); ++bj) {
      const MatrixRF& blk = m.at(rows[bi], cols[bj]);
      for (int r = 0; r < N; ++r)
        for (int c = 0; c < N; ++c)
          out.at(int(bi) * N + r, int(bj) * N + c) = blk.at(r, c);
    }
  return out;
}

}  // namespace

MatrixRF quasideterminant(const BlockMat& m, int i, int j) {
  if (m.k < 1 || i < 1 || i > m.k || j < 1 || j > m.k)
    throw BadArgument("quasideterminant index out of range");
  if (m.k == 1) return m.at(1, 1);
  std::vector<int> rows, cols;
  for (int r = 1; r <= m.k; ++r)
    if (r != i) rows.push_back(r);
  for (int c = 1; c <= m.k; ++c)
    if (c != j) cols.push_back(c);
  MatrixRF inv = mat_inverse(flatten(m, rows, cols));
  MatrixRF row = flatten(m, {i}, cols), col = flatten(m, rows, {j});
  return m.at(i, j) - row * inv * col;
}

// ---------------------------------------------------------------------------
// Evaluation L-operator
// ---------------------------------------------------------------------------

LOperator build_l_operator(int n, const RatFunc& a_param,
                           const std::array<std::optional<BigRat>, kNumVars>& point) {
  if (n < 1) throw BadArgument("rank must be >= 1");
  if (a_param.is_zero()) throw BadArgument("evaluation parameter must be nonzero");
  LOperator L;
  L.n = n;
  L.a_param = a_param;
  L.point = point;
  L.body = rbar_at(n, RatFunc::var(VU) / a_param);
  L.body.mat = L.body.mat.eval_partial(point);
  return L;
}

MatrixRF LOperator::entry(int i, int j) const {
  int N = 2 * n;
  MatrixRF out(N, N);
  for (int r = 0; r < N; ++r)
    for (int c = 0; c < N; ++c)
      out.at(r, c) = body.mat.at((i - 1) * N + r, (j - 1) * N + c);
  return out;
}

MatrixRF LOperator::entry_at(int i, int j, const RatFunc& arg) const {
  return entry(i, j).substitute(VU, arg);
}

BlockMat LOperator::block_at(const RatFunc& arg) const {
  int N = 2 * n;
  BlockMat out(N, N);
  for (int i = 1; i <= N; ++i)
    for (int j = 1; j <= N; ++j) out.at(i, j) = entry_at(i, j, arg);
  return out;
}

// ---------------------------------------------------------------------------
// Gauss decomposition via iterated Schur complements.  Step i of the block
// elimination produces exactly the bordered quasideterminants of the displayed
// formulas: h_i is the i-th leading quasideterminant, and the formulas for
// e_{ij}, f_{ji} are the same expression with the border moved to column j /
// row j.  The literal quasideterminant formulas are re-verified against this
// in the identity suite.
// ---------------------------------------------------------------------------

GaussFactors gauss_decompose(const BlockMat& L) {
  GaussFactors G;
  G.k = L.k;
  G.N = L.N;
  G.h.resize(L.k + 1);
  BlockMat A = L;
  for (int i = 1; i <= L.k; ++i) {
    G.h[i] = A.at(i, i);
    MatrixRF hinv;
    try {
      hinv = mat_inverse(G.h[i]);
    } catch (const SingularComplement&) {
      throw SingularComplement("principal quasideterminant " + std::to_string(i));
    }
    for (int j = i + 1; j <= L.k; ++j) {
      G.e[{i, j}] = hinv * A.at(i, j);
      G.f[{j, i}] = A.at(j, i) * hinv;
    }
    for (int r = i + 1; r <= L.k; ++r)
      for (int c = i + 1; c <= L.k; ++c)
        A.at(r, c) = A.at(r, c) - A.at(r, i) * hinv * A.at(i, c);
  }
  return G;
}

MatrixRF GaussFactors::h_at(int i, const RatFunc& arg) const {
  return h[i].substitute(VU, arg);
}
MatrixRF GaussFactors::e_at(int i, int j, const RatFunc& arg) const {
  return e.at({i, j}).substitute(VU, arg);
}
MatrixRF GaussFactors::f_at(int j, int i, const RatFunc& arg) const {
  return f.at({j, i}).substitute(VU, arg);
}

BlockMat GaussFactors::fmat() const {
  BlockMat F(k, N);
  for (int i = 1; i <= k; ++i) F.at(i, i) = MatrixRF::identity(N);
  for (const auto& [ij, m] : f) F.at(ij.first, ij.second) = m;
  return F;
}
BlockMat GaussFactors::hmat() const {
  BlockMat H(k, N);
  for (int i = 1; i <= k; ++i) H.at(i, i) = h[i];
  return H;
}
BlockMat GaussFactors::emat() const {
  BlockMat E(k, N);
  for (int i = 1; i <= k; ++i) E.at(i, i) = MatrixRF::identity(N);
  for (const auto& [ij, m] : e) E.at(ij.first, ij.second) = m;
  return E;
}

BlockMat psi_embed(const BlockMat& L, int m) {
  int k = L.k;
  if (m < 1 || 2 * m >= k) throw BadArgument("psi_embed index out of range");
  BlockMat A = L;
  for (int i = 1; i <= m; ++i) {
    MatrixRF hinv = mat_inverse(A.at(i, i));
    for (int r = i + 1; r <= k; ++r)
      for (int c = i + 1; c <= k; ++c)
        A.at(r, c) = A.at(r, c) - A.at(r, i) * hinv * A.at(i, c);
  }
  int ks = k - 2 * m;  // band m+1 .. (m+1)' = k - m
  BlockMat S(ks, L.N);
  for (int i = 1; i <= ks; ++i)
    for (int j = 1; j <= ks; ++j) S.at(i, j) = A.at(m + i, m + j);
  return S;
}

// ---------------------------------------------------------------------------
// Quantum minors
// ---------------------------------------------------------------------------

namespace {

long pow_long(int b, int e) {
  long r = 1;
  while (e--) r *= b;
  return r;
}

// Apply a two-slot operator (N^2 x N^2) at slot positions (p, q) of a dense
// vector over `slots` N-dimensional factors (slot 1 most significant).
void apply_two_slot(const MatrixRF& op, int p, int q, int slots, int N,
                    std::vector<RatFunc>& v) {
  long dim = long(v.size());
  long sp = pow_long(N, slots - p), sq = pow_long(N, slots - q);
  std::vector<RatFunc> x(size_t(N) * N), y(size_t(N) * N);
  for (long base = 0; base < dim; ++base) {
    if ((base / sp) % N != 0 || (base / sq) % N != 0) continue;
    bool nz = false;
    for (int a = 0; a < N; ++a)
      for (int b = 0; b < N; ++b) {
        x[size_t(a) * N + b] = v[base + a * sp + b * sq];
        nz = nz || !x[size_t(a) * N + b].is_zero();
      }
    if (!nz) continue;
    for (int r = 0; r < N * N; ++r) {
      RatFunc s;
      for (int c = 0; c < N * N; ++c) {
        if (x[c].is_zero()) continue;
        const RatFunc& o = op.at(r, c);
        if (o.is_zero()) continue;
        s += o * x[c];
      }
      y[r] = s;
    }
    for (int a = 0; a < N; ++a)
      for (int b = 0; b < N; ++b) v[base + a * sp + b * sq] = y[size_t(a) * N + b];
  }
}

std::vector<int> perm_identity(int k) {
  std::vector<int> p(k);
  for (int i = 0; i < k; ++i) p[i] = i;
  return p;
}

int inversions(const std::vector<int>& p) {
  int inv = 0;
  for (size_t i = 0; i < p.size(); ++i)
    for (size_t j = i + 1; j < p.size(); ++j)
      if (p[i] > p[j]) ++inv;
  return inv;
}

}  // namespace

// All k-row minors with the given column multi-index in one pass: the result
// is indexed by the flattened row multi-index.
static std::vector<MatrixRF> quantum_minor_table(const LOperator& L,
                                                 const std::vector<int>& cols,
                                                 const RatFunc& arg) {
  int k = int(cols.size());
  int N = 2 * L.n;
  int slots = k + 1;  // k auxiliary + 1 module
  long dim = pow_long(N, slots);
  // factor list, leftmost first
  struct Fac {
    MatrixRF op;
    int p, q;
  };
  std::vector<Fac> fs;
  auto qs = [&](int e) { return RatFunc::q_pow(e).eval_partial(L.point); };
  for (int i = k - 1; i >= 1; --i)
    for (int j = k; j >= i + 1; --j) {
      TensorOp rh = rhat(L.n, qs(2 * (i - j)));
      fs.push_back({rh.mat.eval_partial(L.point), i, j});
    }
  for (int i = 1; i <= k; ++i)
    fs.push_back({L.body.mat.substitute(VU, arg * qs(2 * i - 2)), i, slots});

  std::vector<MatrixRF> out(pow_long(N, k), MatrixRF(N, N));
  long colflat = 0;
  for (int c : cols) colflat = colflat * N + (c - 1);
  for (int s = 0; s < N; ++s) {
    std::vector<RatFunc> v(dim);
    v[colflat * N + s] = RatFunc(1);
    for (auto it = fs.rbegin(); it != fs.rend(); ++it)
      apply_two_slot(it->op, it->p, it->q, slots, N, v);
    for (long rflat = 0; rflat < long(out.size()); ++rflat)
      for (int r = 0; r < N; ++r) out[rflat].at(r, s) = v[rflat * N + r];
  }
  return out;
}

MatrixRF quantum_minor(const LOperator& L, const std::vector<int>& rows,
                       const std::vector<int>& cols, const RatFunc& arg) {
  if (rows.size() != cols.size() || rows.empty())
    throw BadArgument("quantum minor needs equal nonempty index lists");
  int N = 2 * L.n;
  long rflat = 0;
  for (int r : rows) rflat = rflat * N + (r - 1);
  return quantum_minor_table(L, cols, arg)[rflat];
}

// Both explicit sum expansions of the type A minor.
static MatrixRF minor_expansion(const LOperator& L, const std::vector<int>& rows,
                                const std::vector<int>& cols, const RatFunc& arg,
                                bool reversed) {
  int k = int(rows.size());
  int N = 2 * L.n;
  MatrixRF sum(N, N);
  auto qs = [&](int e) { return RatFunc::q_pow(e).eval_partial(L.point); };
  std::vector<int> p = perm_identity(k);
  do {
    RatFunc coef = qs((reversed ? 1 : -1) * inversions(p));
    if (inversions(p) % 2 == 1) coef = -coef;
    MatrixRF term = MatrixRF::identity(N);
    if (!reversed) {
      // sum (-q)^{-l} l_{a_{s(1)} b_1}(u) ... l_{a_{s(k)} b_k}(u q^{2k-2})
      for (int t = 0; t < k; ++t)
        term = term * L.entry_at(rows[p[t]], cols[t], arg * qs(2 * t));
    } else {
      // sum (-q)^{l} l_{a_k b_{s(k)}}(u q^{2k-2}) ... l_{a_1 b_{s(1)}}(u)
      for (int t = k - 1; t >= 0; --t)
        term = term * L.entry_at(rows[t], cols[p[t]], arg * qs(2 * t));
    }
    sum = sum + term.scaled(coef);
  } while (std::next_permutation(p.begin(), p.end()));
  return sum;
}

// ---------------------------------------------------------------------------
// Identity suites
// ---------------------------------------------------------------------------

namespace {

// pass/fail aggregation over the instances of one identity family
struct Family {
  std::string id;
  int count = 0;
  std::optional<std::string> first_fail;
  explicit Family(std::string id_) : id(std::move(id_)) {}
  void record(bool ok, const std::string& inst) {
    ++count;
    if (!ok && !first_fail) first_fail = inst;
  }
  void emit(Report& rep, const std::string& what) const {
    if (first_fail)
      rep.fail(id, what, *first_fail);
    else
      rep.pass(id, what + ", " + std::to_string(count) + " instances");
  }
};

RatFunc qp(int k) { return RatFunc::q_pow(k); }

RatFunc uvar() { return RatFunc::var(VU); }
RatFunc vvar() { return RatFunc::var(VV); }

std::array<std::optional<BigRat>, kNumVars> grid_point(Mode mode) {
  std::array<std::optional<BigRat>, kNumVars> pt{};
  if (mode == Mode::grid) {
    pt[VQ] = rat(5, 3);
    pt[VA] = rat(7, 2);
  }
  return pt;
}

RatFunc a_value(Mode mode) {
  // symbolic a, or its numeric value already substituted through the point
  return mode == Mode::grid ? RatFunc(rat(7, 2)) : RatFunc::var(VA);
}

// admissible strictly increasing k-subsets with a_i != a_j' throughout
std::vector<std::vector<int>> type_a_subsets(int N, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> idx(k);
  auto rec = [&](auto&& self, int pos, int start) -> void {
    if (pos == k) {
      out.push_back(idx);
      return;
    }
    for (int v = start; v <= N; ++v) {
      bool ok = true;
      for (int t = 0; t < pos; ++t)
        if (idx[t] == N + 1 - v) ok = false;
      if (!ok) continue;
      idx[pos] = v;
      self(self, pos + 1, v + 1);
    }
  };
  rec(rec, 0, 1);
  return out;
}

}  // namespace

// psi-embedding checks, shared between the gauss and embed suites
static void psi_checks(Report& rep, int n, Mode mode, const LOperator& L,
                       const BlockMat& Lb, const GaussFactors& G) {
  int N = 2 * n;
  std::string sn = ".n" + std::to_string(n);
  auto pt = grid_point(mode);
  (void)N;
  for (int m = 1; m <= n - 1; ++m) {
    std::string sm = ".m" + std::to_string(m) + sn;
    BlockMat S = psi_embed(Lb, m);
    BlockMat Sv = S.substitute(VU, vvar());
    int M = 2 * (n - m);
    TensorOp Rsub = rbar_at(n - m, uvar() / vvar());
    MatrixRF Rm = Rsub.mat.eval_partial(pt);
    {  // sub-RTT
      Family fam("gauss.embed.rtt" + sm);
      for (int i = 1; i <= M; ++i)
        for (int j = 1; j <= M; ++j)
          for (int kk = 1; kk <= M; ++kk)
            for (int l = 1; l <= M; ++l) {
              MatrixRF lhs(2 * n, 2 * n), rhs(2 * n, 2 * n);
              for (int p = 1; p <= M; ++p)
                for (int q = 1; q <= M; ++q) {
                  const RatFunc& rc =
                      Rm.at((i - 1) * M + (j - 1), (p - 1) * M + (q - 1));
                  if (!rc.is_zero()) lhs = lhs + (S.at(p, kk) * Sv.at(q, l)).scaled(rc);
                  const RatFunc& rc2 =
                      Rm.at((p - 1) * M + (q - 1), (kk - 1) * M + (l - 1));
                  if (!rc2.is_zero()) rhs = rhs + (Sv.at(j, q) * S.at(i, p)).scaled(rc2);
                }
              fam.record(lhs == rhs,
                         "(" + std::to_string(i) + std::to_string(j) + ";" +
                             std::to_string(kk) + std::to_string(l) + ")");
            }
      fam.emit(rep, "psi image satisfies the rank-(n-m) RTT");
    }
    {  // commutation with the small corner
      Family fam("gauss.commu" + sm);
      for (int a = 1; a <= m; ++a)
        for (int b = 1; b <= m; ++b) {
          MatrixRF l = L.entry_at(a, b, uvar());
          for (int i = 1; i <= M; ++i)
            for (int j = 1; j <= M; ++j)
              fam.record((l * Sv.at(i, j) - Sv.at(i, j) * l).is_zero(),
                         "ab=" + std::to_string(a) + std::to_string(b) + " ij=" +
                             std::to_string(i) + std::to_string(j));
        }
      fam.emit(rep, "[l_ab(u), psi_m(l_ij(v))] = 0 for a,b <= m");
    }
    {  // Gauss factors of the image = sub-factors of the full decomposition
      Family fam("gauss.gauss-consist" + sm);
      GaussFactors GS = gauss_decompose(S);
      for (int i = 1; i <= M; ++i)
        fam.record(GS.h[i] == G.h[m + i], "h_" + std::to_string(m + i));
      for (int i = 1; i <= M; ++i)
        for (int j = i + 1; j <= M; ++j) {
          fam.record(GS.e.at({i, j}) == G.e.at({m + i, m + j}),
                     "e_" + std::to_string(m + i) + std::to_string(m + j));
          fam.record(GS.f.at({j, i}) == G.f.at({m + j, m + i}),
                     "f_" + std::to_string(m + j) + std::to_string(m + i));
        }
      fam.emit(rep, "factors of the psi image match the sub-factors of L");
    }
  }

  if (n >= 3) {  // psi_1 after psi_1 = psi_2
    BlockMat S1 = psi_embed(Lb, 1);
    BlockMat S11 = psi_embed(S1, 1);
    BlockMat S2 = psi_embed(Lb, 2);
    if (S11 == S2)
      rep.pass("gauss.consist" + sn, "psi_1 of psi_1 equals psi_2 entrywise");
    else
      rep.fail("gauss.consist" + sn, "psi_1 of psi_1 equals psi_2", "entry mismatch");
  } else {
    rep.skip("gauss.consist" + sn, "composition needs rank >= 3");
  }
}

Report check_gauss_suite(int n, Mode mode, const std::optional<BigRat>& eval_param) {
  if (n < 2) throw BadArgument("gauss suite needs rank >= 2");
  Report rep;
  rep.suite = "gauss";
  rep.params["n"] = std::to_string(n);
  rep.params["mode"] = mode == Mode::symbolic ? "symbolic" : "grid";
  int N = 2 * n;
  std::string sn = ".n" + std::to_string(n);
  auto pt = grid_point(mode);
  RatFunc aval = a_value(mode);
  if (eval_param) {
    pt[VA] = *eval_param;
    aval = RatFunc(*eval_param);
    rep.params["a"] = eval_param->get_str();
  }
  auto qn = [&](int e) { return qp(e).eval_partial(pt); };
  LOperator L = build_l_operator(n, aval, pt);

  {  // RTT: Rbar(u/v) L1(u) L2(v) = L2(v) L1(u) Rbar(u/v)
    LOperator Lsym = build_l_operator(n, RatFunc::var(VA), {});
    TensorOp Lu = Lsym.body;
    TensorOp Lv = Lsym.body;
    Lv.mat = Lv.mat.substitute(VU, vvar());
    TensorOp R = rbar_at(n, uvar() / vvar());
    ProductSide lhs, rhs;
    lhs.factors = {embed(R, {1, 2}, 3).mat, embed(Lu, {1, 3}, 3).mat,
                   embed(Lv, {2, 3}, 3).mat};
    rhs.factors = {embed(Lv, {2, 3}, 3).mat, embed(Lu, {1, 3}, 3).mat,
                   embed(R, {1, 2}, 3).mat};
    IdentityResult res = product_identity_holds(lhs, rhs, mode);
    if (res.equal)
      rep.pass("gauss.rtt" + sn, "RTT for the evaluation L-operator");
    else
      rep.fail("gauss.rtt" + sn, "RTT for the evaluation L-operator",
               res.counterexample.value_or(""));
  }

  BlockMat Lb = L.block_at(uvar());
  GaussFactors G = gauss_decompose(Lb);

  {  // F H E = L and shape of the factors
    bool ok = (G.fmat() * G.hmat() * G.emat()) == Lb;
    bool shape = G.h[1] == Lb.at(1, 1);
    if (ok && shape)
      rep.pass("gauss.fhe" + sn, "F H E = L entrywise, h_1 = l_11");
    else
      rep.fail("gauss.fhe" + sn, "F H E = L entrywise", ok ? "h_1 != l_11" : "product");
  }

  {  // the displayed quasideterminant formulas reproduce the factors
    Family fam("gauss.quasidet.formulas" + sn);
    int imax = mode == Mode::symbolic ? std::min(N, 3) : N;
    for (int i = 1; i <= imax; ++i) {
      BlockMat princ(i, N);
      for (int r = 1; r <= i; ++r)
        for (int c = 1; c <= i; ++c) princ.at(r, c) = Lb.at(r, c);
      fam.record(quasideterminant(princ, i, i) == G.h[i], "h_" + std::to_string(i));
      for (int j = i + 1; j <= std::min(N, i + 1); ++j) {
        BlockMat be = princ, bf = princ;
        for (int r = 1; r <= i; ++r) be.at(r, i) = Lb.at(r, j);
        for (int c = 1; c <= i; ++c) bf.at(i, c) = Lb.at(j, c);
        fam.record(mat_inverse(G.h[i]) * quasideterminant(be, i, i) == G.e.at({i, j}),
                   "e_" + std::to_string(i) + std::to_string(j));
        fam.record(quasideterminant(bf, i, i) * mat_inverse(G.h[i]) == G.f.at({j, i}),
                   "f_" + std::to_string(j) + std::to_string(i));
      }
    }
    fam.emit(rep, "bordered quasideterminant formulas for h, e, f");
  }

  // --- two-row quantum minors ---
  {
    Family sk1("gauss.skewsymm.i" + sn), sk2("gauss.skewsymm.ii" + sn);
    Family l1i("gauss.minor.l1i1j" + sn), exp2("gauss.minor.expansions.k2" + sn);
    // tables of minor values indexed by rows, one per column pair
    std::map<std::pair<int, int>, std::vector<MatrixRF>> tab;
    auto table = [&](int b1, int b2) -> const std::vector<MatrixRF>& {
      auto it = tab.find({b1, b2});
      if (it == tab.end())
        it = tab.emplace(std::make_pair(b1, b2),
                         quantum_minor_table(L, {b1, b2}, uvar()))
                 .first;
      return it->second;
    };
    auto minor2 = [&](int a1, int a2, int b1, int b2) -> const MatrixRF& {
      return table(b1, b2)[(a1 - 1) * N + (a2 - 1)];
    };
    for (int a1 = 1; a1 <= N; ++a1)
      for (int a2 = a1 + 1; a2 <= N; ++a2) {
        if (a1 == N + 1 - a2) continue;
        for (int b1 = 1; b1 <= N; ++b1)
          for (int b2 = 1; b2 <= N; ++b2)
            sk1.record(minor2(a1, a2, b1, b2) ==
                           minor2(a2, a1, b1, b2).scaled(-qn(-1)),
                       "a=(" + std::to_string(a1) + "," + std::to_string(a2) +
                           ") b=(" + std::to_string(b1) + "," + std::to_string(b2) + ")");
      }
    for (int b1 = 1; b1 <= N; ++b1)
      for (int b2 = b1 + 1; b2 <= N; ++b2) {
        if (b1 == N + 1 - b2) continue;
        for (int a1 = 1; a1 <= N; ++a1)
          for (int a2 = 1; a2 <= N; ++a2)
            sk2.record(minor2(a1, a2, b1, b2) ==
                           minor2(a1, a2, b2, b1).scaled(-qn(1)),
                       "a=(" + std::to_string(a1) + "," + std::to_string(a2) +
                           ") b=(" + std::to_string(b1) + "," + std::to_string(b2) + ")");
      }
    for (int i = 2; i <= N - 1; ++i)
      for (int j = 2; j <= N - 1; ++j) {
        MatrixRF expect = L.entry_at(1, 1, uvar()) * L.entry_at(i, j, uvar() * qn(2)) -
                          (L.entry_at(i, 1, uvar()) * L.entry_at(1, j, uvar() * qn(2)))
                              .scaled(qn(-1));
        l1i.record(minor2(1, i, 1, j) == expect,
                   "(i,j)=(" + std::to_string(i) + "," + std::to_string(j) + ")");
      }
    for (const auto& as : type_a_subsets(N, 2))
      for (const auto& bs : type_a_subsets(N, 2)) {
        const MatrixRF& m = minor2(as[0], as[1], bs[0], bs[1]);
        bool ok = m == minor_expansion(L, as, bs, uvar(), false) &&
                  m == minor_expansion(L, as, bs, uvar(), true);
        exp2.record(ok, "a=(" + std::to_string(as[0]) + "," + std::to_string(as[1]) +
                            ") b=(" + std::to_string(bs[0]) + "," +
                            std::to_string(bs[1]) + ")");
      }
    sk1.emit(rep, "row skew-symmetry of two-row minors, factor -q^{-1}");
    sk2.emit(rep, "column skew-symmetry of two-row minors, factor -q");
    l1i.emit(rep, "two-row minor (1i;1j) expansion");
    exp2.emit(rep, "Rhat-product minor equals both ordered sum expansions, k=2");
  }

  {  // quasi-minor identity and commutation with l_11
    Family qm("gauss.quasiminor" + sn), ct("gauss.commtoo" + sn);
    MatrixRF l11 = L.entry_at(1, 1, uvar());
    MatrixRF l11m2inv = mat_inverse(L.entry_at(1, 1, uvar() * qn(-2)));
    MatrixRF l11inv = mat_inverse(l11);
    for (int i = 2; i <= N - 1; ++i)
      for (int j = 2; j <= N - 1; ++j) {
        MatrixRF s = L.entry_at(i, j, uvar()) -
                     L.entry_at(i, 1, uvar()) * l11inv * L.entry_at(1, j, uvar());
        MatrixRF mi = quantum_minor(L, {1, i}, {1, j}, uvar() * qn(-2));
        qm.record(s == l11m2inv * mi,
                  "(i,j)=(" + std::to_string(i) + "," + std::to_string(j) + ")");
        MatrixRF mv = quantum_minor(L, {1, i}, {1, j}, vvar());
        ct.record((l11 * mv - mv * l11).is_zero(),
                  "(i,j)=(" + std::to_string(i) + "," + std::to_string(j) + ")");
      }
    qm.emit(rep, "s_ij(u) = l_11(uq^{-2})^{-1} minor(1i;1j)(uq^{-2})");
    ct.emit(rep, "[l_11(u), minor(1i;1j)(v)] = 0");
  }

  {  // k-row commutation family for type A minors
    for (int k = 2; k <= 3; ++k) {
      Family fam("gauss.minor.comm.k" + std::to_string(k) + sn);
      auto subsets = type_a_subsets(N, k);
      if (subsets.empty()) {
        rep.skip("gauss.minor.comm.k" + std::to_string(k) + sn,
                 "no admissible type A index " + std::to_string(k) +
                     "-subsets at this rank");
        continue;
      }
      // keep the instance count bounded: first two admissible sets per side
      size_t cap = std::min<size_t>(subsets.size(), 2);
      for (size_t sa = 0; sa < cap; ++sa)
        for (size_t sb = 0; sb < cap; ++sb) {
          const auto& as = subsets[sa];
          const auto& bs = subsets[sb];
          MatrixRF mv = quantum_minor(L, as, bs, vvar());
          for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j) {
              MatrixRF l = L.entry_at(as[i], bs[j], uvar());
              fam.record((l * mv - mv * l).is_zero(),
                         "a_i=" + std::to_string(as[i]) +
                             " b_j=" + std::to_string(bs[j]));
            }
        }
      fam.emit(rep, "[l_{a_i b_j}(u), minor(v)] = 0, k = " + std::to_string(k));
    }
  }

  {  // expansions agreement at k = 3
    auto subsets = type_a_subsets(N, 3);
    if (subsets.empty()) {
      rep.skip("gauss.minor.expansions.k3" + sn,
               "no admissible type A index 3-subsets at this rank");
    } else {
      Family fam("gauss.minor.expansions.k3" + sn);
      const auto& as = subsets.front();
      const auto& bs = subsets.front();
      MatrixRF m = quantum_minor(L, as, bs, uvar());
      fam.record(m == minor_expansion(L, as, bs, uvar(), false), "forward expansion");
      fam.record(m == minor_expansion(L, as, bs, uvar(), true), "reversed expansion");
      fam.emit(rep, "Rhat-product minor equals both ordered sum expansions, k=3");
    }
  }

  // --- psi embeddings ---
  psi_checks(rep, n, mode, L, Lb, G);

  {  // e / f factor relations against the psi_1 image, same-sign forms, m = 1
    Family fe("gauss.relmone" + sn), ff("gauss.relmonf" + sn);
    BlockMat S = psi_embed(Lb, 1);
    RatFunc u = uvar(), v = vvar();
    RatFunc qq = qn(1) - qn(-1);
    auto sv = [&](int kk, int l) { return S.at(kk - 1, l - 1).substitute(VU, v); };
    for (int j = 2; j <= N - 1; ++j)
      for (int kk = 2; kk <= N - 1; ++kk)
        for (int l = 2; l <= N - 1; ++l) {
          if (j != N + 1 - l) {  // e-family needs j != l'
            MatrixRF eju = G.e_at(1, j, u);
            MatrixRF elu = G.e_at(1, l, u), elv = G.e_at(1, l, v);
            MatrixRF lkl = sv(kk, l), lkj = sv(kk, j);
            MatrixRF lhs, rhs;
            if (j == l) {
              lhs = (eju * lkl).scaled(u - v);
              rhs = (lkj * elu).scaled(qn(1) * u - qn(-1) * v) -
                    (lkj * G.e_at(1, j, v)).scaled(qq * u);
            } else if (j < l) {
              lhs = (eju * lkl - lkl * eju).scaled(u - v);
              rhs = (lkj * elu).scaled(qq * v) - (lkj * elv).scaled(qq * u);
            } else {
              lhs = (eju * lkl - lkl * eju).scaled(u - v);
              rhs = (lkj * (elu - elv)).scaled(qq * u);
            }
            fe.record(lhs == rhs, "(j,k,l)=(" + std::to_string(j) + "," +
                                      std::to_string(kk) + "," + std::to_string(l) + ")");
          }
          if (j != N + 1 - kk) {  // f-family needs j != k'
            MatrixRF fju = G.f_at(j, 1, u);
            MatrixRF fku = G.f_at(kk, 1, u), fkv = G.f_at(kk, 1, v);
            MatrixRF ljl = sv(j, l), lkl = sv(kk, l);
            MatrixRF lhs, rhs;
            if (j == kk) {
              lhs = (fju * ljl).scaled(qn(1) * u - qn(-1) * v);
              rhs = (ljl * fju).scaled(u - v) + (G.f_at(j, 1, v) * ljl).scaled(qq * v);
            } else if (j < kk) {
              lhs = (fju * lkl - lkl * fju).scaled(u - v);
              rhs = (fkv * ljl).scaled(qq * v) - (fku * ljl).scaled(qq * u);
            } else {
              lhs = (fju * lkl - lkl * fju).scaled(u - v);
              rhs = ((fkv - fku) * ljl).scaled(qq * v);
            }
            ff.record(lhs == rhs, "(j,k,l)=(" + std::to_string(j) + "," +
                                      std::to_string(kk) + "," + std::to_string(l) + ")");
          }
        }
    fe.emit(rep, "e-factor relations against the psi_1 image, same-sign forms");
    ff.emit(rep, "f-factor relations against the psi_1 image, same-sign forms");
  }

  rep.sort_checks();
  return rep;
}

Report check_central_suite(int n, Mode mode, const std::optional<BigRat>& eval_param) {
  if (n < 2) throw BadArgument("central suite needs rank >= 2");
  Report rep;
  rep.suite = "central";
  rep.params["n"] = std::to_string(n);
  rep.params["mode"] = mode == Mode::symbolic ? "symbolic" : "grid";
  int N = 2 * n;
  std::string sn = ".n" + std::to_string(n);
  CartanDatum C = build_cartan(n);
  auto pt = grid_point(mode);
  RatFunc aval = a_value(mode);
  if (eval_param) {
    pt[VA] = *eval_param;
    aval = RatFunc(*eval_param);
    rep.params["a"] = eval_param->get_str();
  }
  LOperator L = build_l_operator(n, aval, pt);
  RatFunc u = uvar();
  RatFunc xi = mode == Mode::grid ? RatFunc(C.xi.eval_partial(pt)) : C.xi;
  auto qbar = [&](int e) {
    RatFunc r = qp(e);
    return mode == Mode::grid ? RatFunc(r.eval_partial(pt)) : r;
  };
  auto prime = [&](int i) { return N + 1 - i; };

  BlockMat Lb = L.block_at(u);
  BlockMat Lxi = L.block_at(u * xi);
  GaussFactors G = gauss_decompose(Lb);

  MatrixRF z;
  {  // D L(u xi)^t D^{-1} L(u) scalar in the auxiliary space, both orders
    Family fam("central.scalar" + sn);
    BlockMat M1(N, 2 * n);  // D L(u xi)^t D^{-1}
    for (int i = 1; i <= N; ++i)
      for (int k = 1; k <= N; ++k)
        M1.at(i, k) = Lxi.at(prime(k), prime(i)).scaled(qbar(C.bar[i] - C.bar[k]));
    BlockMat C1 = M1 * Lb;
    BlockMat C2 = Lb * M1;
    z = C1.at(1, 1);
    Family ord("central.orders" + sn);
    for (int i = 1; i <= N; ++i)
      for (int j = 1; j <= N; ++j) {
        std::string inst = "(" + std::to_string(i) + "," + std::to_string(j) + ")";
        bool ok = (i == j) ? C1.at(i, j) == z : C1.at(i, j).is_zero();
        fam.record(ok, inst);
        ord.record(C2.at(i, j) == C1.at(i, j), inst);
      }
    fam.emit(rep, "D L(u xi)^t D^{-1} L(u) = z(u) 1");
    ord.emit(rep, "both multiplication orders give the same scalar");
  }

  {  // product formula for z(u)
    MatrixRF p = MatrixRF::identity(N);
    for (int i = 1; i <= n - 1; ++i)
      p = p * mat_inverse(G.h_at(i, u * xi * qbar(2 * i)));
    for (int i = 1; i <= n; ++i) p = p * G.h_at(i, u * xi * qbar(2 * i - 2));
    p = p * G.h_at(n + 1, u);
    if (p == z)
      rep.pass("central.product" + sn,
               "z(u) = prod h_i(u xi q^{2i})^{-1} prod h_i(u xi q^{2i-2}) h_{n+1}(u)");
    else
      rep.fail("central.product" + sn, "product formula for z(u)", "matrix mismatch");
  }

  {  // h-recurrence: z^{[n]}(u) = h_1(u xi q^2)^{-1} h_1(u xi) z^{[n-1]}(u)
    MatrixRF zsub = MatrixRF::identity(N);
    for (int i = 2; i <= n - 1; ++i)
      zsub = zsub * mat_inverse(G.h_at(i, u * xi * qbar(2 * i)));
    for (int i = 2; i <= n; ++i) zsub = zsub * G.h_at(i, u * xi * qbar(2 * i - 2));
    zsub = zsub * G.h_at(n + 1, u);
    MatrixRF rhs = mat_inverse(G.h_at(1, u * xi * qbar(2))) * G.h_at(1, u * xi) * zsub;
    if (rhs == z)
      rep.pass("central.hrec" + sn,
               "z(u) = h_1(u xi q^2)^{-1} h_1(u xi) z^{[n-1]}(u)");
    else
      rep.fail("central.hrec" + sn, "h-recurrence for z(u)", "matrix mismatch");
  }

  {  // e/f reflection identities across the diagram fold
    for (int i = 1; i <= n - 1; ++i) {
      std::string si = ".i" + std::to_string(i);
      bool eok = G.e.at({prime(i + 1), prime(i)}) ==
                 G.e_at(i, i + 1, u * xi * qbar(2 * i)).scaled(RatFunc(-1));
      bool fok = G.f.at({prime(i), prime(i + 1)}) ==
                 G.f_at(i + 1, i, u * xi * qbar(2 * i)).scaled(RatFunc(-1));
      if (eok)
        rep.pass("gauss.eiprei" + si, "e_{(i+1)'i'}(u) = -e_{i,i+1}(u xi q^{2i})");
      else
        rep.fail("gauss.eiprei" + si, "e_{(i+1)'i'}(u) = -e_{i,i+1}(u xi q^{2i})",
                 "matrix mismatch");
      if (fok)
        rep.pass("gauss.fiprfi" + si, "f_{i'(i+1)'}(u) = -f_{i+1,i}(u xi q^{2i})");
      else
        rep.fail("gauss.fiprfi" + si, "f_{i'(i+1)'}(u) = -f_{i+1,i}(u xi q^{2i})",
                 "matrix mismatch");
    }
    // branching node: e_{n,n+1} and f_{n+1,n} are odd under u -> -u
    bool eok = G.e.at({n, n + 1}) ==
               G.e_at(n, n + 1, -u).scaled(RatFunc(-1));
    bool fok = G.f.at({n + 1, n}) ==
               G.f_at(n + 1, n, -u).scaled(RatFunc(-1));
    if (eok)
      rep.pass("central.enen" + sn, "e_{(n+1)'n'}(u) = -e_{n,n+1}(-u)");
    else
      rep.fail("central.enen" + sn, "e_{(n+1)'n'}(u) = -e_{n,n+1}(-u)", "mismatch");
    if (fok)
      rep.pass("central.fnfn" + sn, "f_{n'(n+1)'}(u) = -f_{n+1,n}(-u)");
    else
      rep.fail("central.fnfn" + sn, "f_{n'(n+1)'}(u) = -f_{n+1,n}(-u)", "mismatch");
  }

  {  // Q L1(u xi) L2(u) = L2(u) L1(u xi) Q with Q = D_1^{-1} P^{t_1} D_1
    TensorOp Q = tensor_identity(n, 2);
    Q.mat = MatrixRF(N * N, N * N);
    for (int i = 1; i <= N; ++i)
      for (int j = 1; j <= N; ++j)
        Q.mat.at((prime(i) - 1) * N + (i - 1), (prime(j) - 1) * N + (j - 1)) =
            qp(C.bar[i] - C.bar[j]);
    // structural cross-check against D_1^{-1} P^{t_1} D_1
    TensorOp D = dmatrix(n);
    TensorOp D1 = embed(D, {1}, 2);
    MatrixRF Dinv(N * N, N * N);
    for (int r = 0; r < N * N; ++r) Dinv.at(r, r) = D1.mat.at(r, r).inverse();
    TensorOp Pt = partial_transpose(flip(n), 1);
    bool structural = Q.mat == Dinv * Pt.mat * D1.mat;
    LOperator Lsym = build_l_operator(n, RatFunc::var(VA), {});
    RatFunc xisym = build_cartan(n).xi;
    TensorOp Lxis = Lsym.body;
    Lxis.mat = Lxis.mat.substitute(VU, uvar() * xisym);
    ProductSide lhs, rhs;
    lhs.factors = {embed(Q, {1, 2}, 3).mat, embed(Lxis, {1, 3}, 3).mat,
                   embed(Lsym.body, {2, 3}, 3).mat};
    rhs.factors = {embed(Lsym.body, {2, 3}, 3).mat, embed(Lxis, {1, 3}, 3).mat,
                   embed(Q, {1, 2}, 3).mat};
    IdentityResult res = product_identity_holds(lhs, rhs, mode);
    if (structural && res.equal)
      rep.pass("central.qop" + sn, "Q L_1(u xi) L_2(u) = L_2(u) L_1(u xi) Q");
    else
      rep.fail("central.qop" + sn, "Q L_1(u xi) L_2(u) = L_2(u) L_1(u xi) Q",
               structural ? res.counterexample.value_or("") : "Q != D_1^{-1} P^{t_1} D_1");
  }

  rep.sort_checks();
  return rep;
}

Report check_embed_suite(int n, Mode mode, const std::optional<BigRat>& eval_param) {
  if (n < 2) throw BadArgument("embed suite needs rank >= 2");
  Report rep;
  rep.suite = "embed";
  rep.params["n"] = std::to_string(n);
  rep.params["mode"] = mode == Mode::symbolic ? "symbolic" : "grid";
  auto pt = grid_point(mode);
  RatFunc aval = a_value(mode);
  if (eval_param) {
    pt[VA] = *eval_param;
    aval = RatFunc(*eval_param);
    rep.params["a"] = eval_param->get_str();
  }
  LOperator L = build_l_operator(n, aval, pt);
  BlockMat Lb = L.block_at(uvar());
  GaussFactors G = gauss_decompose(Lb);
  psi_checks(rep, n, mode, L, Lb, G);
  rep.sort_checks();
  return rep;
}

}  // namespace qav
