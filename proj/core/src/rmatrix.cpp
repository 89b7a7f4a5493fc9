#include "qav/rmatrix.hpp"

#include <algorithm>

#include "qav/errors.hpp"

namespace qav {

namespace {

MPoly qp(int k) { return MPoly::var_pow(VQ, k); }

// a_{ij}(u) numerator of the last band (three cases).
MPoly a_poly(const CartanDatum& c, int i, int j) {
  MPoly u = MPoly::var_pow(VU, 1);
  MPoly one = MPoly::constant(1);
  MPoly xi = -qp(-2 * c.n);
  if (i == j) return (qp(-2) * u - xi) * (u - one);
  MPoly qbar = qp(c.bar[i] - c.bar[j]);
  MPoly delta = (i == c.prime(j)) ? one : MPoly();
  if (i < j) return (qp(-2) - one) * (qbar * xi * (u - one) - delta * (u - xi));
  return (qp(-2) - one) * u * (qbar * (u - one) - delta * (u - xi));
}

}  // namespace

TensorOp rbar(int n) {
  CartanDatum c = build_cartan(n);
  int N = 2 * n;
  TensorOp t{n, 2, MatrixRF(N * N, N * N)};
  MPoly u = MPoly::var_pow(VU, 1);
  MPoly one = MPoly::constant(1);
  MPoly xi = -qp(-2 * n);
  RatFunc diag(u - one, qp(1) * u - qp(-1));
  RatFunc exch_lo(qp(1) - qp(-1), qp(1) * u - qp(-1));
  RatFunc exch_hi((qp(1) - qp(-1)) * u, qp(1) * u - qp(-1));
  MPoly last_den = (u - qp(-2)) * (u - xi);
  auto idx = [N](int i, int j) { return (i - 1) * N + (j - 1); };
  for (int i = 1; i <= N; ++i) t.mat.at(idx(i, i), idx(i, i)) += RatFunc(1);
  for (int i = 1; i <= N; ++i)
    for (int j = 1; j <= N; ++j) {
      if (i != j && i != c.prime(j))
        t.mat.at(idx(i, j), idx(i, j)) += diag;  // e_ii (x) e_jj
      if (i > j && i != c.prime(j))
        t.mat.at(idx(i, j), idx(j, i)) += exch_lo;  // e_ij (x) e_ji
      if (i < j && i != c.prime(j))
        t.mat.at(idx(i, j), idx(j, i)) += exch_hi;
      // e_{i'j'} (x) e_{ij} with coefficient a_{ij}(u)/((u-q^{-2})(u-xi))
      t.mat.at(idx(c.prime(i), i), idx(c.prime(j), j)) +=
          RatFunc(a_poly(c, i, j), last_den);
    }
  return t;
}

TensorOp rbar_at(int n, const RatFunc& arg) {
  TensorOp t = rbar(n);
  t.mat = t.mat.substitute(VU, arg);
  return t;
}

TensorOp rhat(int n, const RatFunc& at) {
  TensorOp t = rbar(n);
  RatFunc pre(MPoly::var_pow(VU, 1) * MPoly::var_pow(VQ, 1) - MPoly::var_pow(VQ, -1),
              MPoly::var_pow(VU, 1) - MPoly::constant(1));
  t.mat = t.mat.scaled(pre);  // poles at u = 1 cancel band by band where removable
  try {
    t.mat = t.mat.substitute(VU, at);
  } catch (const DivisionByZero&) {
    throw NonRemovablePole("rhat at " + at.str());
  } catch (const PoleAtSamplePoint&) {
    throw NonRemovablePole("rhat at " + at.str());
  }
  return t;
}

TensorOp rank1_block_displayed() {
  // sum e_ii (x) e_ii + (u^2-1)/((u^2-q^{-4})q^2) sum_{i != j} e_ii (x) e_jj
  //   + (1-q^{-4})u/(u^2-q^{-4}) sum_{i != j} e_ij (x) e_ji, indices in {1,2}.
  TensorOp t{1, 2, MatrixRF(4, 4)};
  MPoly u2 = MPoly::var_pow(VU, 2);
  MPoly one = MPoly::constant(1);
  RatFunc diag(u2 - one, (u2 - qp(-4)) * qp(2));
  RatFunc exch((one - qp(-4)) * MPoly::var_pow(VU, 1), u2 - qp(-4));
  t.mat.at(0, 0) = RatFunc(1);
  t.mat.at(3, 3) = RatFunc(1);
  t.mat.at(1, 1) = diag;  // e_11 (x) e_22
  t.mat.at(2, 2) = diag;  // e_22 (x) e_11
  t.mat.at(1, 2) = exch;  // e_12 (x) e_21
  t.mat.at(2, 1) = exch;  // e_21 (x) e_12
  return t;
}

TensorOp r_type_a(int size) {
  if (size < 1) throw BadArgument("r_type_a size");
  TensorOp t{0, 2, MatrixRF(size * size, size * size)};
  t.n = size;  // not a rank-2n space; n is only used for N() elsewhere
  MPoly u = MPoly::var_pow(VU, 1);
  MPoly one = MPoly::constant(1);
  RatFunc diag(u - one, qp(1) * u - qp(-1));
  RatFunc exch_lo(qp(1) - qp(-1), qp(1) * u - qp(-1));
  RatFunc exch_hi((qp(1) - qp(-1)) * u, qp(1) * u - qp(-1));
  auto idx = [size](int i, int j) { return (i - 1) * size + (j - 1); };
  for (int i = 1; i <= size; ++i)
    for (int j = 1; j <= size; ++j) {
      if (i == j) {
        t.mat.at(idx(i, i), idx(i, i)) = RatFunc(1);
        continue;
      }
      t.mat.at(idx(i, j), idx(i, j)) = diag;
      t.mat.at(idx(i, j), idx(j, i)) = (i > j) ? exch_lo : exch_hi;
    }
  return t;
}

Report check_ybe(int n, Mode mode) {
  Report rep;
  rep.suite = "rmatrix";
  RatFunc u = RatFunc::var(VU), v = RatFunc::var(VV);
  TensorOp Ru = rbar(n);
  TensorOp Ruv = rbar_at(n, u * v);
  TensorOp Rv = rbar_at(n, v);
  ProductSide lhs, rhs;
  lhs.factors = {embed(Ru, {1, 2}, 3).mat, embed(Ruv, {1, 3}, 3).mat,
                 embed(Rv, {2, 3}, 3).mat};
  rhs.factors = {embed(Rv, {2, 3}, 3).mat, embed(Ruv, {1, 3}, 3).mat,
                 embed(Ru, {1, 2}, 3).mat};
  IdentityResult r = product_identity_holds(lhs, rhs, mode);
  std::string id = "ybe.n" + std::to_string(n);
  std::string detail = "R12(u) R13(uv) R23(v) = R23(v) R13(uv) R12(u), " +
                       std::string(mode == Mode::symbolic ? "symbolic" : "grid");
  if (mode == Mode::grid) detail += ", " + std::to_string(r.grid_points) + " points";
  if (r.equal)
    rep.pass(id, detail);
  else
    rep.fail(id, detail, r.counterexample.value_or(""));
  return rep;
}

Report check_unitarity_crossing(int n, Mode mode) {
  Report rep;
  rep.suite = "rmatrix";
  CartanDatum c = build_cartan(n);
  int N = 2 * n;
  RatFunc u = RatFunc::var(VU);

  {  // R12(u) R21(1/u) = 1
    TensorOp P = flip(n);
    TensorOp R21inv{n, 2, P.mat * rbar_at(n, u.inverse()).mat * P.mat};
    ProductSide lhs, rhs;
    lhs.factors = {rbar(n).mat, R21inv.mat};
    rhs.factors = {MatrixRF::identity(N * N)};
    IdentityResult r = product_identity_holds(lhs, rhs, mode);
    std::string id = "unitarity.n" + std::to_string(n);
    if (r.equal)
      rep.pass(id, "R12(u) R21(1/u) = 1");
    else
      rep.fail(id, "R12(u) R21(1/u) = 1", r.counterexample.value_or(""));
  }

  {  // R(u) D1 R(u xi)^{t1} D1^{-1} = (u-q^2)(u xi-1)/((1-u)(1-u xi q^2))
    TensorOp D = dmatrix(n);
    MatrixRF D1 = embed(D, {1}, 2).mat;
    MatrixRF D1inv(N * N, N * N);
    for (int i = 0; i < N * N; ++i) D1inv.at(i, i) = D1.at(i, i).inverse();
    TensorOp Rxi = partial_transpose(rbar_at(n, u * c.xi), 1);
    MPoly up = MPoly::var_pow(VU, 1);
    MPoly one = MPoly::constant(1);
    MPoly xi = -MPoly::var_pow(VQ, -2 * n);
    RatFunc scalar((up - qp(2)) * (up * xi - one), (one - up) * (one - up * xi * qp(2)));
    ProductSide lhs, rhs;
    lhs.factors = {rbar(n).mat, D1 * Rxi.mat * D1inv};
    rhs.scalar = scalar;
    rhs.factors = {MatrixRF::identity(N * N)};
    IdentityResult r = product_identity_holds(lhs, rhs, mode);
    std::string id = "crossing.n" + std::to_string(n);
    if (r.equal)
      rep.pass(id, "R(u) D1 R(u xi)^{t1} D1^{-1} = (u-q^2)(u xi-1)/((1-u)(1-u xi q^2))");
    else
      rep.fail(id, "crossing scalar identity", r.counterexample.value_or(""));
  }
  return rep;
}

namespace {

// Block of column vectors over RatFunc, dim x k.
using SymBlock = std::vector<std::vector<RatFunc>>;
using NumBlock = std::vector<std::vector<BigRat>>;

SymBlock apply_sym(const MatrixRF& M, const SymBlock& X) {
  size_t k = X.empty() ? 0 : X[0].size();
  SymBlock Y(M.rows(), std::vector<RatFunc>(k));
  for (int r = 0; r < M.rows(); ++r)
    for (int c = 0; c < M.cols(); ++c) {
      const RatFunc& m = M.at(r, c);
      if (m.is_zero()) continue;
      for (size_t t = 0; t < k; ++t)
        if (!X[c][t].is_zero()) Y[r][t] += m * X[c][t];
    }
  return Y;
}

NumBlock apply_num(const NumSparse& M, const NumBlock& X) {
  size_t k = X.empty() ? 0 : X[0].size();
  NumBlock Y(M.rows, std::vector<BigRat>(k, BigRat(0)));
  for (int r = 0; r < M.rows; ++r)
    for (const auto& [c, v] : M.row[r])
      for (size_t t = 0; t < k; ++t)
        if (X[c][t] != 0) Y[r][t] += v * X[c][t];
  return Y;
}

// Factor of a chain: a two-factor operator placed at two of four slots.
struct ChainFactor {
  MatrixRF two_factor;  // N^2 x N^2
  std::vector<int> pos;
};

NumSparse eval_chain_factor(const ChainFactor& f, int N, const PowerCache& pc) {
  return num_embed(eval_matrix(f.two_factor, pc), N, f.pos, 4);
}

}  // namespace

Report check_reduction(int n, Mode mode) {
  Report rep;
  rep.suite = "rmatrix";
  if (n < 2) throw BadArgument("check_reduction requires n >= 2");
  int N = 2 * n;
  long dim = 1;
  for (int k = 0; k < 4; ++k) dim *= N;
  RatFunc a = RatFunc::var(VA);
  RatFunc qm2 = RatFunc::q_pow(-2);

  MatrixRF Rh = rhat(n, qm2).mat;
  // Rank-(n-1) matrix (own xi = -q^{-2(n-1)}) on the middle band
  // span{v_2,...,v_{2n-1}} of C^N, zero outside (only applied inside).
  MatrixRF Rsub(N * N, N * N);
  {
    TensorOp rs = rbar_at(n - 1, a);
    int Ns = 2 * (n - 1);
    for (int r = 0; r < Ns * Ns; ++r)
      for (int c = 0; c < Ns * Ns; ++c) {
        const RatFunc& x = rs.mat.at(r, c);
        if (x.is_zero()) continue;
        int ri = r / Ns + 1, rj = r % Ns + 1, ci = c / Ns + 1, cj = c % Ns + 1;
        Rsub.at((ri + 1 - 1) * N + (rj + 1 - 1), (ci + 1 - 1) * N + (cj + 1 - 1)) = x;
      }
  }
  RatFunc scalar = (a * RatFunc::q_pow(-1) - RatFunc::q_pow(1)) /
                   (a * RatFunc::q_pow(1) - RatFunc::q_pow(-1));

  std::vector<ChainFactor> lhs = {
      {Rh, {1, 2}},
      {Rh, {3, 4}},
      {rbar_at(n, a * qm2).mat, {1, 4}},
      {rbar_at(n, a).mat, {2, 4}},
      {rbar_at(n, a).mat, {1, 3}},
      {rbar_at(n, a * RatFunc::q_pow(2)).mat, {2, 3}},
  };
  std::vector<ChainFactor> rhs = {
      {Rh, {1, 2}},
      {Rh, {3, 4}},
      {Rsub, {2, 4}},
  };

  // Basis columns |1,i,1,j>, 2 <= i,j <= 2n-1.
  std::vector<long> cols;
  for (int i = 2; i <= N - 1; ++i)
    for (int j = 2; j <= N - 1; ++j)
      cols.push_back(((long(0) * N + (i - 1)) * N + 0) * N + (j - 1));

  auto label = [N](size_t t) {
    int i = 2 + int(t) / (N - 2), j = 2 + int(t) % (N - 2);
    return "(i=" + std::to_string(i) + ", j=" + std::to_string(j) + ")";
  };

  if (mode == Mode::symbolic) {
    for (int bra = 0; bra < 2; ++bra) {
      SymBlock X(dim, std::vector<RatFunc>(cols.size()));
      for (size_t t = 0; t < cols.size(); ++t) X[cols[t]][t] = RatFunc(1);
      SymBlock L = X, R = X;
      // Ket: columns of F1...Fk X, applied right to left.  Bra: rows of
      // X^T Fk...F1 (the mirrored factor order), i.e. transposes applied
      // right to left as well.
      auto run = [&](const std::vector<ChainFactor>& fs, SymBlock& B) {
        for (auto it = fs.rbegin(); it != fs.rend(); ++it) {
          MatrixRF M = embed({n, 2, it->two_factor}, it->pos, 4).mat;
          B = apply_sym(bra ? M.transpose_plain() : M, B);
        }
      };
      run(lhs, L);
      run(rhs, R);
      std::string id = std::string(bra ? "reduction.bra.n" : "reduction.ket.n") +
                       std::to_string(n);
      bool ok = true;
      std::string ce;
      for (size_t t = 0; t < cols.size() && ok; ++t)
        for (long r = 0; r < dim && ok; ++r)
          if (L[r][t] != R[r][t] * scalar) {
            ok = false;
            ce = "pair " + label(t) + ", component " + std::to_string(r);
          }
      if (ok)
        rep.pass(id, "all " + std::to_string(cols.size()) + " basis pairs, symbolic");
      else
        rep.fail(id, "reduction identity", ce);
    }
    return rep;
  }

  // Grid mode: per-point numeric evaluation of the chains.
  ProductSide pl, pr;
  for (const auto& f : lhs) pl.factors.push_back(f.two_factor);
  for (const auto& f : rhs) pr.factors.push_back(f.two_factor);
  pr.scalar = scalar;
  DegreeBound bound = cleared_product_bound(pl, pr);
  for (int bra = 0; bra < 2; ++bra) {
    std::string id = std::string(bra ? "reduction.bra.n" : "reduction.ket.n") +
                     std::to_string(n);
    bool ok = true;
    std::string ce;
    int points = 0;
    std::array<int, kNumVars> offset{};
    for (int attempt = 0; ok; ++attempt) {
      bool restarted = false;
      std::array<int, kNumVars> idx{};
      bool done = false;
      while (!done && ok) {
        std::array<std::optional<BigRat>, kNumVars> pt{};
        pt[VQ] = BigRat(2 * (offset[VQ] + idx[VQ]) + 3, 2);
        pt[VA] = BigRat(2 * (offset[VA] + idx[VA]) + 3, 2);
        PowerCache pc(pt);
        try {
          ++points;
          NumBlock X(dim, std::vector<BigRat>(cols.size(), BigRat(0)));
          for (size_t t = 0; t < cols.size(); ++t) X[cols[t]][t] = 1;
          NumBlock L = X, R = X;
          // Same order convention as the symbolic branch: the bra side is
          // the mirrored product, so transposes are applied right to left.
          auto run = [&](const std::vector<ChainFactor>& fs, NumBlock& B) {
            for (auto it = fs.rbegin(); it != fs.rend(); ++it) {
              NumSparse M = eval_chain_factor(*it, N, pc);
              if (bra) {
                NumSparse T;
                T.rows = M.cols;
                T.cols = M.rows;
                T.row.resize(T.rows);
                for (int r = 0; r < M.rows; ++r)
                  for (const auto& [c, v] : M.row[r]) T.row[c].push_back({r, v});
                M = std::move(T);
              }
              B = apply_num(M, B);
            }
          };
          run(lhs, L);
          run(rhs, R);
          BigRat s = scalar.eval(pc);
          for (size_t t = 0; t < cols.size() && ok; ++t)
            for (long r = 0; r < dim && ok; ++r)
              if (L[r][t] != R[r][t] * s) {
                ok = false;
                ce = "pair " + label(t) + ", component " + std::to_string(r) +
                     " at q = " + to_string(*pt[VQ]) + ", a = " + to_string(*pt[VA]);
              }
        } catch (const PoleAtSamplePoint&) {
          if (attempt >= 32) throw;
          offset[VQ] += 1;
          offset[VA] += 2;
          restarted = true;
          break;
        }
        done = true;
        for (Var k : {VQ, VA}) {
          if (idx[k] < bound[k]) {
            ++idx[k];
            done = false;
            break;
          }
          idx[k] = 0;
        }
      }
      if (!restarted) break;
    }
    if (ok)
      rep.pass(id, "all " + std::to_string(cols.size()) + " basis pairs, grid, " +
                       std::to_string(points) + " points");
    else
      rep.fail(id, "reduction identity", ce);
  }
  return rep;
}

Report check_structure(int n, Mode mode) {
  Report rep;
  rep.suite = "rmatrix";
  (void)mode;

  {  // rank-1 construction matches the displayed two-index block
    TensorOp lhs = rbar(1);
    TensorOp rhs = rank1_block_displayed();
    auto diff = lhs.mat.first_difference(rhs.mat);
    if (!diff)
      rep.pass("rank1.match", "rbar(1) equals the displayed rank-1 block entrywise");
    else
      rep.fail("rank1.match", "rbar(1) vs displayed rank-1 block",
               "entry (" + std::to_string(diff->first) + ", " +
                   std::to_string(diff->second) + ")");
  }

  {  // upper-left n x n corner equals the type-A matrix
    TensorOp R = rbar(n);
    TensorOp A = r_type_a(n);
    int N = 2 * n;
    bool ok = true;
    std::string ce;
    for (int i = 1; i <= n && ok; ++i)
      for (int j = 1; j <= n && ok; ++j)
        for (int k = 1; k <= n && ok; ++k)
          for (int l = 1; l <= n && ok; ++l) {
            const RatFunc& x = R.mat.at((i - 1) * N + (j - 1), (k - 1) * N + (l - 1));
            const RatFunc& y = A.mat.at((i - 1) * n + (j - 1), (k - 1) * n + (l - 1));
            if (x != y) {
              ok = false;
              ce = "corner entry (" + std::to_string(i) + std::to_string(j) + "," +
                   std::to_string(k) + std::to_string(l) + ")";
            }
          }
    std::string id = "typea.corner.n" + std::to_string(n);
    if (ok)
      rep.pass(id, "indices 1..n corner of rbar equals the type-A matrix");
    else
      rep.fail(id, "type-A corner", ce);
  }

  {  // kernel of rhat at q^{-2}
    TensorOp Rh = rhat(n, RatFunc::q_pow(-2));
    int N = 2 * n;
    // asserted: the |1,1> column vanishes
    bool ok = true;
    std::string ce;
    for (int r = 0; r < N * N; ++r)
      if (!Rh.mat.at(r, 0).is_zero()) {
        ok = false;
        ce = "component " + std::to_string(r);
        break;
      }
    if (ok)
      rep.pass("rhat.kernel", "rhat(q^{-2}) |1,1> = 0");
    else
      rep.fail("rhat.kernel", "rhat(q^{-2}) |1,1> = 0", ce);
    // reported (not asserted): behaviour on the other |i,i>
    std::string scan;
    for (int i = 1; i <= N; ++i) {
      int c = (i - 1) * N + (i - 1);
      bool zero = true;
      for (int r = 0; r < N * N; ++r)
        if (!Rh.mat.at(r, c).is_zero()) {
          zero = false;
          break;
        }
      if (!scan.empty()) scan += ", ";
      scan += "|" + std::to_string(i) + "," + std::to_string(i) +
              (zero ? "> -> 0" : "> != 0");
    }
    rep.pass("rhat.kernel.scan", "empirical: " + scan);
  }
  return rep;
}

}  // namespace qav
