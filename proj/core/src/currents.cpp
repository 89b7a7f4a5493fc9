#include "qav/currents.hpp"

#include <algorithm>

#include "qav/cartan.hpp"
#include "qav/errors.hpp"

namespace qav {

// ---------------------------------------------------------------------------
// Exact Laurent expansions of rational functions of u
// ---------------------------------------------------------------------------

namespace {

// coefficients of u^e for e in [lo, hi], as polynomials in the other variables
std::vector<MPoly> u_coeffs(const MPoly& p, int lo, int hi) {
  std::vector<std::vector<Term>> buckets(size_t(hi - lo + 1));
  for (const Term& t : p.terms()) {
    int e = t.e[VU];
    if (e < lo || e > hi) continue;
    Term s = t;
    s.e[VU] = 0;
    buckets[size_t(e - lo)].push_back(s);
  }
  std::vector<MPoly> out;
  out.reserve(buckets.size());
  for (auto& b : buckets) {
    std::sort(b.begin(), b.end(),
              [](const Term& x, const Term& y) { return exp_less(y.e, x.e); });
    out.push_back(MPoly::from_sorted(std::move(b)));
  }
  return out;
}

}  // namespace

std::vector<RatFunc> expand_at_zero(const RatFunc& f, int lo, int hi) {
  std::vector<RatFunc> out(size_t(hi - lo + 1));
  if (f.is_zero()) return out;
  const MPoly &N = f.num(), &D = f.den();
  int ord = N.lowdeg(VU) - D.lowdeg(VU);
  if (ord > hi) return out;
  int K = hi - ord;
  auto nc = u_coeffs(N, N.lowdeg(VU), N.lowdeg(VU) + K);
  auto dc = u_coeffs(D, D.lowdeg(VU), D.lowdeg(VU) + K);
  RatFunc d0{dc[0]};
  std::vector<RatFunc> c(size_t(K + 1));
  for (int k = 0; k <= K; ++k) {
    RatFunc s{nc[k]};
    for (int j = 0; j < k; ++j) s -= c[j] * RatFunc(dc[k - j]);
    c[k] = s / d0;
  }
  for (int m = std::max(lo, ord); m <= hi; ++m) out[size_t(m - lo)] = c[m - ord];
  return out;
}

std::vector<RatFunc> expand_at_inf(const RatFunc& f, int lo, int hi) {
  RatFunc g = f.substitute(VU, RatFunc(1) / RatFunc::var(VU));
  auto z = expand_at_zero(g, -hi, -lo);
  std::vector<RatFunc> out(size_t(hi - lo + 1));
  for (int m = lo; m <= hi; ++m) out[size_t(m - lo)] = z[size_t(hi - m)];
  return out;
}

namespace {

std::vector<MatrixRF> expand_matrix(const MatrixRF& m, int lo, int hi, bool at_zero) {
  std::vector<MatrixRF> out(size_t(hi - lo + 1), MatrixRF(m.rows(), m.cols()));
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c) {
      auto e = at_zero ? expand_at_zero(m.at(r, c), lo, hi)
                       : expand_at_inf(m.at(r, c), lo, hi);
      for (int k = lo; k <= hi; ++k) out[size_t(k - lo)].at(r, c) = e[size_t(k - lo)];
    }
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// Extraction
// ---------------------------------------------------------------------------

CurrentSet extract_currents(int n, const GaussFactors& G, int window,
                            const std::array<std::optional<BigRat>, kNumVars>& point) {
  if (window < 1) throw BadArgument("window must be >= 1");
  CurrentSet cs;
  cs.n = n;
  cs.window = window;
  cs.point = point;
  int W = window;
  cs.h.resize(size_t(n) + 2);
  for (int i = 1; i <= n + 1; ++i) {
    HCurrent hc;
    hc.idx = i;
    hc.entry = G.h[i];
    hc.plus_series = expand_matrix(hc.entry, -W, W, true);
    hc.minus_series = expand_matrix(hc.entry, -W, W, false);
    cs.h[size_t(i)] = std::move(hc);
  }
  RatFunc u = RatFunc::var(VU);
  auto make = [&](int i, int sign) {
    BilateralCurrent x;
    x.node = i;
    x.sign = sign;
    x.window = W;
    MatrixRF entry = sign > 0 ? G.e.at({i, i + 1}) : G.f.at({i + 1, i});
    if (i == n) entry = entry.scaled(sign > 0 ? u : u.inverse());
    x.plus_coeff = expand_matrix(entry, -W, W, true);
    x.minus_coeff = expand_matrix(entry, -W, W, false);
    for (int m = -W; m <= W; ++m)
      x.modes.push_back(x.plus_coeff[size_t(m + W)] - x.minus_coeff[size_t(m + W)]);
    return x;
  };
  cs.xplus.resize(size_t(n) + 1);
  cs.xminus.resize(size_t(n) + 1);
  for (int i = 1; i <= n; ++i) {
    cs.xplus[size_t(i)] = make(i, +1);
    cs.xminus[size_t(i)] = make(i, -1);
  }
  return cs;
}

// ---------------------------------------------------------------------------
// Relation checks
// ---------------------------------------------------------------------------

namespace {

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

RatFunc qpt(const CurrentSet& cs, int e) {
  return RatFunc::q_pow(e).eval_partial(cs.point);
}

// Polynomial in v with coefficients rational in u: list of (v-power, coeff).
using VPoly = std::vector<std::pair<int, RatFunc>>;

// P(u,v) A(u) X(v) = R(u,v) X(v) A(u), coefficient of v^m for every m whose
// required modes all lie inside the window.
bool exchange_holds(const MatrixRF& A, const BilateralCurrent& X, const VPoly& P,
                    const VPoly& R, std::string* inst) {
  int maxp = 0;
  for (const auto& [p, c] : P) maxp = std::max(maxp, p);
  for (const auto& [p, c] : R) maxp = std::max(maxp, p);
  for (int m = -X.window + maxp; m <= X.window; ++m) {
    MatrixRF lhs(A.rows(), A.cols()), rhs(A.rows(), A.cols());
    for (const auto& [p, c] : P) lhs = lhs + (A * X.mode(m - p)).scaled(c);
    for (const auto& [p, c] : R) rhs = rhs + (X.mode(m - p) * A).scaled(c);
    if (lhs != rhs) {
      if (inst) *inst = "v-mode " + std::to_string(m);
      return false;
    }
  }
  return true;
}

// (alpha u^d - beta v^d) Xa(u qa) Xb(v qb) = (beta u^d - alpha v^d) Xb(v qb) Xa(u qa)
bool quad_exchange(const BilateralCurrent& Xa, const BilateralCurrent& Xb, int d,
                   const RatFunc& alpha, const RatFunc& beta, const RatFunc& qa,
                   const RatFunc& qb, std::string* inst) {
  int W = Xa.window;
  for (int m = -W + d; m <= W; ++m)
    for (int l = -W + d; l <= W; ++l) {
      RatFunc sa0 = qa.pow(m - d), sa1 = qa.pow(m), sb0 = qb.pow(l), sb1 = qb.pow(l - d);
      MatrixRF lhs = (Xa.mode(m - d) * Xb.mode(l)).scaled(alpha * sa0 * sb0) -
                     (Xa.mode(m) * Xb.mode(l - d)).scaled(beta * sa1 * sb1);
      MatrixRF rhs = (Xb.mode(l) * Xa.mode(m - d)).scaled(beta * sa0 * sb0) -
                     (Xb.mode(l - d) * Xa.mode(m)).scaled(alpha * sa1 * sb1);
      if (lhs != rhs) {
        if (inst) *inst = "(m,l)=(" + std::to_string(m) + "," + std::to_string(l) + ")";
        return false;
      }
    }
  return true;
}

MatrixRF comm(const MatrixRF& a, const MatrixRF& b) { return a * b - b * a; }

std::string nsuf(const CurrentSet& cs) { return ".n" + std::to_string(cs.n); }

}  // namespace

Report check_hh_relations(const CurrentSet& cs) {
  Report rep;
  rep.suite = "currents";
  Family fam("currents.hh" + nsuf(cs));
  for (int i = 1; i <= cs.n + 1; ++i)
    for (int j = i; j <= cs.n + 1; ++j) {
      MatrixRF A = cs.h[size_t(i)].entry;
      MatrixRF B = cs.h[size_t(j)].entry.substitute(VU, RatFunc::var(VV));
      fam.record((A * B - B * A).is_zero(),
                 "(i,j)=(" + std::to_string(i) + "," + std::to_string(j) + ")");
    }
  fam.emit(rep, "[h_i(u), h_j(v)] = 0 (all +- combinations collapse at level zero)");
  return rep;
}

Report check_hx_relations(const CurrentSet& cs) {
  Report rep;
  rep.suite = "currents";
  int n = cs.n;
  CartanDatum C = build_cartan(n);
  RatFunc u = RatFunc::var(VU);
  auto run = [&](Family& fam, const MatrixRF& A, const BilateralCurrent& X,
                 VPoly P, VPoly R, const std::string& inst) {
    if (X.sign < 0) std::swap(P, R);  // conjugation is by h^{-1} for X^-
    std::string where;
    bool ok = exchange_holds(A, X, P, R, &where);
    fam.record(ok, inst + (ok ? "" : " " + where));
  };
  {  // h_i vs X_j, j < n: (u - v) h X+ = (q^a u - q^{-a} v) X+ h
    Family fam("currents.hx.hixj" + nsuf(cs));
    if (n < 2) rep.skip(fam.id, "needs a node below the branching node");
    for (int i = 1; i <= n && n >= 2; ++i)
      for (int j = 1; j <= n - 1; ++j) {
        int a = C.eps_pairing(i, j);
        VPoly P{{0, qpt(cs, a) * u}, {1, -qpt(cs, -a)}};
        VPoly R{{0, u}, {1, RatFunc(-1)}};
        for (int s : {+1, -1})
          run(fam, cs.h[size_t(i)].entry, (s > 0 ? cs.xplus : cs.xminus)[size_t(j)], P, R,
              "(i,j,s)=(" + std::to_string(i) + "," + std::to_string(j) + "," +
                  std::to_string(s) + ")");
      }
    if (n >= 2) fam.emit(rep, "(u-v) h_i(u) X_j(v) exchange with q^{(eps_i,alpha_j)}");
  }
  {  // h_i vs X_n: squared arguments
    Family fam("currents.hx.hixn" + nsuf(cs));
    for (int i = 1; i <= n; ++i) {
      int a = C.eps_pairing(i, n);
      VPoly P{{0, qpt(cs, a) * u * u}, {2, -qpt(cs, -a)}};
      VPoly R{{0, u * u}, {2, RatFunc(-1)}};
      for (int s : {+1, -1})
        run(fam, cs.h[size_t(i)].entry, (s > 0 ? cs.xplus : cs.xminus)[size_t(n)], P, R,
            "(i,s)=(" + std::to_string(i) + "," + std::to_string(s) + ")");
    }
    fam.emit(rep, "(u^2-v^2) h_i(u) X_n(v) exchange (commutes for i < n)");
  }
  {  // h_{n+1} vs X_j, j <= n-2: plain commutation
    Family fam("currents.hx.hn1xj" + nsuf(cs));
    if (n <= 2) {
      rep.skip(fam.id, "no node with j <= n-2 at this rank");
    } else {
      for (int j = 1; j <= n - 2; ++j)
        for (int s : {+1, -1})
          run(fam, cs.h[size_t(n + 1)].entry, (s > 0 ? cs.xplus : cs.xminus)[size_t(j)],
              VPoly{{0, RatFunc(1)}}, VPoly{{0, RatFunc(1)}},
              "(j,s)=(" + std::to_string(j) + "," + std::to_string(s) + ")");
      fam.emit(rep, "h_{n+1}(u) commutes with X_j(v), j <= n-2");
    }
  }
  {  // h_{n+1} vs X_{n-1}: (u + v) h X+ = (q^{-1} u + q v) X+ h
    Family fam("currents.hx.hn1xn1" + nsuf(cs));
    if (n < 2) {
      rep.skip(fam.id, "needs rank >= 2");
    } else {
      VPoly P{{0, u}, {1, RatFunc(1)}};
      VPoly R{{0, qpt(cs, -1) * u}, {1, qpt(cs, 1)}};
      for (int s : {+1, -1})
        run(fam, cs.h[size_t(n + 1)].entry, (s > 0 ? cs.xplus : cs.xminus)[size_t(n - 1)],
            P, R, "s=" + std::to_string(s));
      fam.emit(rep, "(u+v) h_{n+1}(u) X_{n-1}(v) = (q^{-1}u+qv) X_{n-1}(v) h_{n+1}(u)");
    }
  }
  {  // h_{n+1} vs X_n: (u^2 - v^2) h X+ = (q^{-2} u^2 - q^2 v^2) X+ h
    Family fam("currents.hx.hn1xn" + nsuf(cs));
    VPoly P{{0, qpt(cs, -2) * u * u}, {2, -qpt(cs, 2)}};
    VPoly R{{0, u * u}, {2, RatFunc(-1)}};
    for (int s : {+1, -1})
      run(fam, cs.h[size_t(n + 1)].entry, (s > 0 ? cs.xplus : cs.xminus)[size_t(n)], P, R,
          "s=" + std::to_string(s));
    fam.emit(rep, "(u^2-v^2) h_{n+1}(u) X_n(v) = (q^{-2}u^2-q^2v^2) X_n(v) h_{n+1}(u)");
  }
  return rep;
}

Report check_xx_relations(const CurrentSet& cs) {
  Report rep;
  rep.suite = "currents";
  int n = cs.n;
  CartanDatum C = build_cartan(n);
  {  // type A block: i, j < n, shifted arguments u q^i, v q^j
    Family fam("currents.xx.typea" + nsuf(cs));
    if (n < 2) {
      rep.skip(fam.id, "no type A block at rank 1");
    } else {
      for (int i = 1; i <= n - 1; ++i)
        for (int j = 1; j <= n - 1; ++j)
          for (int s : {+1, -1}) {
            int a = C.A[size_t(i)][size_t(j)];  // (alpha_i, alpha_j), d = 1 here
            const auto& xs = s > 0 ? cs.xplus : cs.xminus;
            std::string where;
            bool ok = quad_exchange(xs[size_t(i)], xs[size_t(j)], 1, RatFunc(1),
                                    qpt(cs, s * a), qpt(cs, i), qpt(cs, j), &where);
            fam.record(ok, "(i,j,s)=(" + std::to_string(i) + "," + std::to_string(j) +
                               "," + std::to_string(s) + ") " + where);
          }
      fam.emit(rep, "(u - q^{(ai,aj)} v) X_i(uq^i) X_j(vq^j) exchange, i,j < n");
    }
  }
  {  // branching node quadratic, i = n-1 and i = n
    Family fam("currents.xx.noden" + nsuf(cs));
    for (int i = std::max(1, n - 1); i <= n; ++i)
      for (int s : {+1, -1}) {
        int a = C.d[size_t(i)] * C.A[size_t(i)][size_t(n)];
        const auto& xs = s > 0 ? cs.xplus : cs.xminus;
        std::string where;
        bool ok = quad_exchange(xs[size_t(i)], xs[size_t(n)], 2, RatFunc(1),
                                qpt(cs, s * a), qpt(cs, i), qpt(cs, n), &where);
        fam.record(ok, "(i,s)=(" + std::to_string(i) + "," + std::to_string(s) + ") " +
                           where);
      }
    fam.emit(rep, "(u^2 - q^{(ai,an)} v^2) X_i(uq^i) X_n(vq^n) exchange");
  }
  {  // displayed form: (u^2 q^2 - v^2) X_{n-1}+ X_n+ = (u^2 - q^2 v^2) X_n+ X_{n-1}+
    Family fam("currents.xx.xn1xn" + nsuf(cs));
    if (n < 2) {
      rep.skip(fam.id, "needs rank >= 2");
    } else {
      std::string where;
      bool okp = quad_exchange(cs.xplus[size_t(n - 1)], cs.xplus[size_t(n)], 2,
                               qpt(cs, 2), RatFunc(1), qpt(cs, n - 1), qpt(cs, n), &where);
      fam.record(okp, "plus " + where);
      bool okm = quad_exchange(cs.xminus[size_t(n - 1)], cs.xminus[size_t(n)], 2,
                               RatFunc(1), qpt(cs, 2), qpt(cs, n - 1), qpt(cs, n), &where);
      fam.record(okm, "minus " + where);
      fam.emit(rep, "(u^2q^2-v^2) X_{n-1}(uq^{n-1}) X_n(vq^n) displayed exchange");
    }
  }
  {  // i < n-1 commutes with node n
    Family fam("currents.xx.commute" + nsuf(cs));
    if (n < 3) {
      rep.skip(fam.id, "no node with i < n-1 at this rank");
    } else {
      int W = cs.window;
      for (int i = 1; i <= n - 2; ++i)
        for (int s : {+1, -1}) {
          const auto& xs = s > 0 ? cs.xplus : cs.xminus;
          for (int m = -W; m <= W; ++m)
            for (int l = -W; l <= W; ++l)
              fam.record(comm(xs[size_t(i)].mode(m), xs[size_t(n)].mode(l)).is_zero(),
                         "(i,s,m,l)=(" + std::to_string(i) + "," + std::to_string(s) +
                             "," + std::to_string(m) + "," + std::to_string(l) + ")");
        }
      fam.emit(rep, "[X_i(u), X_n(v)] = 0 for i < n-1");
    }
  }
  return rep;
}

Report check_xpxm_commutators(const CurrentSet& cs) {
  Report rep;
  rep.suite = "currents";
  int n = cs.n;
  int W = cs.window;
  CartanDatum C = build_cartan(n);
  {  // off-diagonal pairs commute
    Family fam("currents.xpxm.offdiag" + nsuf(cs));
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j) {
        if (i == j) continue;
        for (int m = -W; m <= W; ++m)
          for (int l = -W; l <= W; ++l)
            fam.record(
                comm(cs.xplus[size_t(i)].mode(m), cs.xminus[size_t(j)].mode(l)).is_zero(),
                "(i,j,m,l)=(" + std::to_string(i) + "," + std::to_string(j) + "," +
                    std::to_string(m) + "," + std::to_string(l) + ")");
      }
    fam.emit(rep, "[X_i^+(u), X_j^-(v)] = 0 for i != j");
  }
  // diagonal: delta-extracted h-ratio modes
  auto gmodes = [&](const MatrixRF& g, bool at_zero) {
    return expand_matrix(g, -2 * W, 2 * W, at_zero);
  };
  {
    Family fam("currents.xpxm.diag" + nsuf(cs));
    if (n < 2) rep.skip(fam.id, "no node below the branching node");
    for (int i = 1; i <= n - 1; ++i) {
      MatrixRF g = mat_inverse(cs.h[size_t(i)].entry) * cs.h[size_t(i + 1)].entry;
      auto gp = gmodes(g, true), gm = gmodes(g, false);
      RatFunc coef = qpt(cs, 1) - qpt(cs, -1);  // q_i - q_i^{-1}, d_i = 1
      for (int m = -W; m <= W; ++m)
        for (int l = -W; l <= W; ++l) {
          MatrixRF lhs = comm(cs.xplus[size_t(i)].mode(m), cs.xminus[size_t(i)].mode(l));
          MatrixRF rhs =
              (gm[size_t(m + l + 2 * W)] - gp[size_t(m + l + 2 * W)]).scaled(coef);
          fam.record(lhs == rhs, "(i,m,l)=(" + std::to_string(i) + "," +
                                     std::to_string(m) + "," + std::to_string(l) + ")");
        }
    }
    if (n >= 2)
      fam.emit(rep, "[X_i^+, X_i^-] = (q-q^{-1}) (delta-extracted h_i^{-1} h_{i+1})");
  }
  {  // branching node: parity-doubled delta((u/v)^2), ratio h_{n+1} h_n^{-1}
    Family fam("currents.xpxm.noden" + nsuf(cs));
    MatrixRF g = cs.h[size_t(n + 1)].entry * mat_inverse(cs.h[size_t(n)].entry);
    auto gp = gmodes(g, true), gm = gmodes(g, false);
    RatFunc coef = qpt(cs, C.d[size_t(n)]) - qpt(cs, -C.d[size_t(n)]);
    for (int m = -W; m <= W; ++m)
      for (int l = -W; l <= W; ++l) {
        MatrixRF lhs = comm(cs.xplus[size_t(n)].mode(m), cs.xminus[size_t(n)].mode(l));
        MatrixRF rhs(lhs.rows(), lhs.cols());
        if (m % 2 == 0) rhs = rhs + gm[size_t(m + l + 2 * W)];
        if (l % 2 == 0) rhs = rhs - gp[size_t(m + l + 2 * W)];
        fam.record(lhs == rhs.scaled(coef), "(m,l)=(" + std::to_string(m) + "," +
                                                std::to_string(l) + ")");
      }
    fam.emit(rep, "[X_n^+, X_n^-] with delta((u/v)^2) and ratio h_{n+1} h_n^{-1}");
  }
  {  // m+l dependence, brute force on the diagonal commutators
    Family fam("currents.xpxm.mlsum" + nsuf(cs));
    for (int i = 1; i <= n; ++i) {
      auto cmat = [&](int m, int l) {
        return comm(cs.xplus[size_t(i)].mode(m), cs.xminus[size_t(i)].mode(l));
      };
      int step = i < n ? 1 : 2;  // keep the node-n parity pattern fixed
      for (int m = -W + step; m <= W; ++m)
        for (int l = -W; l <= W - step; ++l)
          fam.record(cmat(m, l) == cmat(m - step, l + step),
                     "(i,m,l)=(" + std::to_string(i) + "," + std::to_string(m) + "," +
                         std::to_string(l) + ")");
    }
    fam.emit(rep, "diagonal commutator modes depend on m+l only (fixed parity)");
  }
  return rep;
}

Report check_serre(const CurrentSet& cs) {
  Report rep;
  rep.suite = "currents";
  int n = cs.n;
  int W = cs.window;
  CartanDatum C = build_cartan(n);
  {  // r = 2 Serre family for A_ij = -1
    Family fam("currents.serre.r2" + nsuf(cs));
    bool any = false;
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j) {
        if (i == j || C.A[size_t(i)][size_t(j)] != -1) continue;
        any = true;
        RatFunc two = qpt(cs, C.d[size_t(i)]) + qpt(cs, -C.d[size_t(i)]);  // [2]_{q_i}
        for (int s : {+1, -1}) {
          const auto& xs = s > 0 ? cs.xplus : cs.xminus;
          const BilateralCurrent &Xi = xs[size_t(i)], &Xj = xs[size_t(j)];
          for (int m1 = -W; m1 <= W; ++m1)
            for (int m2 = m1; m2 <= W; ++m2)
              for (int k = -W; k <= W; ++k) {
                MatrixRF sum(Xi.mode(0).rows(), Xi.mode(0).cols());
                for (auto [a, b] : {std::pair{m1, m2}, std::pair{m2, m1}}) {
                  sum = sum + Xj.mode(k) * Xi.mode(a) * Xi.mode(b) -
                        (Xi.mode(a) * Xj.mode(k) * Xi.mode(b)).scaled(two) +
                        Xi.mode(a) * Xi.mode(b) * Xj.mode(k);
                }
                fam.record(sum.is_zero(),
                           "(i,j,s,m1,m2,k)=(" + std::to_string(i) + "," +
                               std::to_string(j) + "," + std::to_string(s) + "," +
                               std::to_string(m1) + "," + std::to_string(m2) + "," +
                               std::to_string(k) + ")");
              }
        }
      }
    if (any)
      fam.emit(rep, "quadratic Serre sums vanish for A_ij = -1");
    else
      rep.skip(fam.id, "no pair with A_ij = -1 at this rank");
  }
  {  // weighted cubic between nodes n-1 and n
    Family fam("currents.serre.cubic" + nsuf(cs));
    if (n < 2) {
      rep.skip(fam.id, "needs rank >= 2");
    } else {
      RatFunc two2 = qpt(cs, 2) + qpt(cs, -2);  // [2]_{q^2}
      for (int s : {+1, -1}) {
        // the u_1 weight follows the sign of the currents: q^{+-2}
        RatFunc q2 = qpt(cs, 2 * s);
        const auto& xs = s > 0 ? cs.xplus : cs.xminus;
        const BilateralCurrent &Xa = xs[size_t(n - 1)], &Xn = xs[size_t(n)];
        auto T = [&](int a, int b, int k) {
          return Xn.mode(k) * Xa.mode(a) * Xa.mode(b) -
                 (Xa.mode(a) * Xn.mode(k) * Xa.mode(b)).scaled(two2) +
                 Xa.mode(a) * Xa.mode(b) * Xn.mode(k);
        };
        for (int m1 = -W + 1; m1 <= W; ++m1)
          for (int m2 = -W + 1; m2 <= W; ++m2)
            for (int k = -W; k <= W; ++k) {
              // coefficient of u1^{m1} u2^{m2} v^k of the symmetrized weighted sum
              MatrixRF sum = T(m1 - 1, m2, k).scaled(q2) + T(m1, m2 - 1, k) +
                             T(m2 - 1, m1, k).scaled(q2) + T(m2, m1 - 1, k);
              fam.record(sum.is_zero(),
                         "(s,m1,m2,k)=(" + std::to_string(s) + "," +
                             std::to_string(m1) + "," + std::to_string(m2) + "," +
                             std::to_string(k) + ")");
            }
      }
      fam.emit(rep, "(q^2 u_1 + u_2)-weighted cubic between X_{n-1} and X_n vanishes");
    }
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Suite driver and extraction self-checks
// ---------------------------------------------------------------------------

namespace {

std::array<std::optional<BigRat>, kNumVars> suite_point(Mode mode) {
  std::array<std::optional<BigRat>, kNumVars> pt{};
  if (mode == Mode::grid) {
    pt[VQ] = rat(5, 3);
    pt[VA] = rat(7, 2);
  }
  return pt;
}

}  // namespace

Report check_currents_suite(int n, Mode mode, int window,
                            const std::optional<BigRat>& eval_param) {
  if (n < 2) throw BadArgument("currents suite needs rank >= 2");
  if (window < 1) throw BadArgument("window must be >= 1");
  Report rep;
  rep.suite = "currents";
  rep.params["n"] = std::to_string(n);
  rep.params["mode"] = mode == Mode::symbolic ? "symbolic" : "grid";
  rep.params["window"] = std::to_string(window);
  auto pt = suite_point(mode);
  RatFunc a = mode == Mode::grid ? RatFunc(rat(7, 2)) : RatFunc::var(VA);
  if (eval_param) {
    pt[VA] = *eval_param;
    a = RatFunc(*eval_param);
    rep.params["a"] = eval_param->get_str();
  }
  LOperator L = build_l_operator(n, a, pt);
  GaussFactors G = gauss_decompose(L.block_at(RatFunc::var(VU)));
  CurrentSet cs = extract_currents(n, G, window, pt);
  int W = window;
  std::string sn = ".n" + std::to_string(n);

  {  // the denominator annihilates every bilateral table (independent oracle)
    Family fam("currents.extract.annihilate" + sn);
    RatFunc u = RatFunc::var(VU);
    auto run = [&](const BilateralCurrent& x, const MatrixRF& entry, const char* tag) {
      for (int r = 0; r < entry.rows(); ++r)
        for (int c = 0; c < entry.cols(); ++c) {
          const MPoly& D = entry.at(r, c).den();
          int dlo = D.lowdeg(VU), dhi = D.deg(VU);
          auto dc = u_coeffs(D, dlo, dhi);
          for (int m = -W + dhi; m <= W + dlo; ++m) {
            RatFunc s;
            for (int p = dlo; p <= dhi; ++p)
              s += RatFunc(dc[size_t(p - dlo)]) * x.mode(m - p).at(r, c);
            fam.record(s.is_zero(), std::string(tag) + std::to_string(x.node) + " entry (" +
                                        std::to_string(r) + "," + std::to_string(c) +
                                        ") mode " + std::to_string(m));
          }
        }
    };
    for (int i = 1; i <= n; ++i) {
      MatrixRF ep = G.e.at({i, i + 1}), fm = G.f.at({i + 1, i});
      if (i == n) {
        ep = ep.scaled(u);
        fm = fm.scaled(u.inverse());
      }
      run(cs.xplus[size_t(i)], ep, "x+");
      run(cs.xminus[size_t(i)], fm, "x-");
    }
    fam.emit(rep, "denominator convolution annihilates every bilateral mode table");
  }
  {  // h series invert to the identity within the window
    Family fam("currents.extract.hinv" + sn);
    for (int i = 1; i <= n + 1; ++i) {
      MatrixRF hinv = mat_inverse(cs.h[size_t(i)].entry);
      auto hp = cs.h[size_t(i)].plus_series;
      auto ip = expand_matrix(hinv, -W, W, true);
      int N = hinv.rows();
      for (int m = -W; m < 0; ++m)  // regularity at u = 0 makes the check honest
        fam.record(hp[size_t(m + W)].is_zero() && ip[size_t(m + W)].is_zero(),
                   "i=" + std::to_string(i) + " negative order " + std::to_string(m));
      for (int m = 0; m <= W; ++m) {
        MatrixRF conv(N, N);
        for (int k = 0; k <= m; ++k)
          conv = conv + hp[size_t(k + W)] * ip[size_t(m - k + W)];
        fam.record(conv == (m == 0 ? MatrixRF::identity(N) : MatrixRF(N, N)),
                   "i=" + std::to_string(i) + " order " + std::to_string(m));
      }
    }
    fam.emit(rep, "h_i(u) h_i(u)^{-1} = 1 order by order at u = 0");
  }
  {  // odd modes of the branching-node currents vanish
    Family fam("currents.xodd" + sn);
    for (int m = -W; m <= W; ++m) {
      if (m % 2 == 0) continue;
      fam.record(cs.xplus[size_t(n)].mode(m).is_zero(), "X+ mode " + std::to_string(m));
      fam.record(cs.xminus[size_t(n)].mode(m).is_zero(), "X- mode " + std::to_string(m));
    }
    fam.emit(rep, "X_n modes vanish for odd m");
  }

  rep.merge(check_hh_relations(cs));
  rep.merge(check_hx_relations(cs));
  rep.merge(check_xx_relations(cs));
  rep.merge(check_xpxm_commutators(cs));
  rep.merge(check_serre(cs));
  rep.sort_checks();
  return rep;
}

}  // namespace qav
