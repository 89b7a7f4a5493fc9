#include "qav/repv.hpp"

#include <algorithm>
#include <string>
#include <vector>

#include "qav/errors.hpp"
#include "qav/qcomb.hpp"
#include "qav/series.hpp"

namespace qav {

namespace {

MatrixRF unit_at(int N, int i, int j, const RatFunc& v) {
  MatrixRF m(N, N);
  m.at(i - 1, j - 1) = v;
  return m;
}

RatFunc qp(int k) { return RatFunc::q_pow(k); }

// xi^k = (-1)^k q^{-2nk}
RatFunc xi_pow(int n, int k) {
  RatFunc v = qp(-2 * n * k);
  return (k % 2 == 0) ? v : -v;
}

}  // namespace

MatrixRF RepV::x_plus(int i, int k) const {
  int N = 2 * n;
  if (i < 1 || i > n) throw BadIndex("x_plus node");
  if (i == n) {
    if (k % 2 != 0) return MatrixRF(N, N);  // x_{n,odd} = 0
    int m = k / 2;  // q_n = q^2: image -q_n^{-nm} e_{n+1,n}
    return unit_at(N, n + 1, n, -qp(-2 * n * m));
  }
  auto p = [this](int j) { return cartan.prime(j); };
  MatrixRF r = unit_at(N, i + 1, i, -qp(-i * k));
  r = r + unit_at(N, p(i), p(i + 1), xi_pow(n, k) * qp(i * k));
  return r;
}

MatrixRF RepV::x_minus(int i, int k) const {
  int N = 2 * n;
  if (i < 1 || i > n) throw BadIndex("x_minus node");
  if (i == n) {
    if (k % 2 != 0) return MatrixRF(N, N);
    int m = k / 2;
    return unit_at(N, n, n + 1, -qp(-2 * n * m));
  }
  auto p = [this](int j) { return cartan.prime(j); };
  MatrixRF r = unit_at(N, i, i + 1, -qp(-i * k));
  r = r + unit_at(N, p(i + 1), p(i), xi_pow(n, k) * qp(i * k));
  return r;
}

MatrixRF RepV::a_mode(int i, int k) const {
  int N = 2 * n;
  if (i < 1 || i > n) throw BadIndex("a_mode node");
  if (k == 0) throw BadArgument("a_mode requires k != 0");
  if (i == n) {
    if (k % 2 != 0) throw OddMode("a_{n,k} with odd k");
    int m = k / 2;  // [m]_{q_n}/m * q_n^{-nm} (q_n^{-m} e_{n+1,n+1} - q_n^m e_nn)
    RatFunc pre = q_number_base(m, qp(2)) * RatFunc(rat(1, m)) * qp(-2 * n * m);
    MatrixRF r = unit_at(N, n + 1, n + 1, pre * qp(-2 * m));
    return r - unit_at(N, n, n, pre * qp(2 * m));
  }
  auto p = [this](int j) { return cartan.prime(j); };
  RatFunc pre = q_number(k) * RatFunc(rat(1, k));
  MatrixRF r = unit_at(N, i + 1, i + 1, pre * qp(-i * k - k));
  r = r - unit_at(N, i, i, pre * qp(-i * k + k));
  r = r + unit_at(N, p(i), p(i), pre * xi_pow(n, k) * qp(i * k - k));
  r = r - unit_at(N, p(i + 1), p(i + 1), pre * xi_pow(n, k) * qp(i * k + k));
  return r;
}

MatrixRF RepV::k_cartan(int i, int sign) const {
  int N = 2 * n;
  if (i < 1 || i > n) throw BadIndex("k_cartan node");
  if (sign != 1 && sign != -1) throw BadArgument("k_cartan sign");
  MatrixRF r(N, N);
  for (int j = 1; j <= N; ++j) r.at(j - 1, j - 1) = RatFunc(1);
  if (i == n) {
    r.at(n, n) = qp(2 * sign);          // e_{n+1,n+1}
    r.at(n - 1, n - 1) = qp(-2 * sign); // e_{nn}
    return r;
  }
  int ip = cartan.prime(i), i1p = cartan.prime(i + 1);
  r.at(i, i) = qp(sign);            // e_{i+1,i+1}
  r.at(ip - 1, ip - 1) = qp(sign);  // e_{i'i'}
  r.at(i - 1, i - 1) = qp(-sign);
  r.at(i1p - 1, i1p - 1) = qp(-sign);
  return r;
}

RepV build_repv(int n) {
  if (n < 2) throw BadArgument("build_repv requires n >= 2");
  return RepV{n, build_cartan(n)};
}

namespace {

// Per-family aggregation: counts instances, remembers the first failure.
struct Family {
  explicit Family(std::string id_) : id(std::move(id_)) {}
  std::string id;
  int instances = 0;
  int skipped = 0;
  bool ok = true;
  std::string ce;

  void record(bool pass, const std::string& where) {
    ++instances;
    if (!pass && ok) {
      ok = false;
      ce = where;
    }
  }
  void skip() { ++skipped; }
  void emit(Report& rep) const {
    std::string detail = std::to_string(instances) + " instances";
    if (skipped) detail += ", " + std::to_string(skipped) + " skipped (non-integer q-bracket)";
    if (ok)
      rep.pass(id, detail);
    else
      rep.fail(id, detail, ce);
    if (skipped) rep.skip(id + ".skipped", std::to_string(skipped) + " non-integer q-bracket instances");
  }
};

std::string inst(int i, int j, std::initializer_list<int> modes) {
  std::string s = "(i=" + std::to_string(i) + ", j=" + std::to_string(j) + ", modes";
  for (int m : modes) s += " " + std::to_string(m);
  return s + ")";
}

}  // namespace

Report check_drinfeld_relations(const RepV& rep, int window) {
  if (window < 1) throw BadArgument("window must be >= 1");
  Report out;
  out.suite = "rep";
  int n = rep.n;
  const CartanDatum& C = rep.cartan;
  int N = 2 * n;
  MatrixRF Id = MatrixRF::identity(N);
  auto qi = [&](int i) { return RatFunc::q_pow(C.d[i]); };

  // admissible modes per node (parity at the branching node)
  auto modes_of = [&](int i, bool nonzero) {
    std::vector<int> ms;
    for (int m = -window; m <= window; ++m) {
      if (nonzero && m == 0) continue;
      if (i == n && m % 2 != 0) continue;
      ms.push_back(m);
    }
    return ms;
  };

  {  // structural parity at the branching node
    Family f("rep.parity");
    for (int m = -window; m <= window; ++m)
      if (m % 2 != 0) {
        f.record(rep.x_plus(n, m).is_zero() && rep.x_minus(n, m).is_zero(),
                 "x_{n," + std::to_string(m) + "}");
        bool threw = false;
        try {
          rep.a_mode(n, m);
        } catch (const OddMode&) {
          threw = true;
        }
        f.record(threw, "a_{n," + std::to_string(m) + "} accepted");
      }
    f.emit(out);
  }

  {  // k_i k_i^{-1} = 1, k_i k_j = k_j k_i
    Family f("rep.k.inv");
    Family g("rep.k.comm");
    for (int i = 1; i <= n; ++i) {
      f.record(rep.k_cartan(i, 1) * rep.k_cartan(i, -1) == Id, inst(i, i, {}));
      for (int j = 1; j <= n; ++j)
        g.record(rep.k_cartan(i, 1) * rep.k_cartan(j, 1) ==
                     rep.k_cartan(j, 1) * rep.k_cartan(i, 1),
                 inst(i, j, {}));
    }
    f.emit(out);
    g.emit(out);
  }

  {  // k_i a_{j,k} = a_{j,k} k_i
    Family f("rep.k.a");
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j)
        for (int m : modes_of(j, true))
          f.record(rep.k_cartan(i, 1) * rep.a_mode(j, m) ==
                       rep.a_mode(j, m) * rep.k_cartan(i, 1),
                   inst(i, j, {m}));
    f.emit(out);
  }

  {  // k_i x^pm_{j,m} k_i^{-1} = q_i^{pm A_ij} x^pm_{j,m}
    Family f("rep.k.x");
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j)
        for (int m : modes_of(j, false))
          for (int s : {+1, -1}) {
            MatrixRF x = s > 0 ? rep.x_plus(j, m) : rep.x_minus(j, m);
            MatrixRF lhs = rep.k_cartan(i, 1) * x * rep.k_cartan(i, -1);
            MatrixRF rhs = x.scaled(qi(i).pow(s * C.A[i][j]));
            f.record(lhs == rhs, inst(i, j, {m}) + (s > 0 ? "+" : "-"));
          }
    f.emit(out);
  }

  {  // [a_{i,m}, a_{j,l}] = 0 at q^c = 1
    Family f("rep.aa");
    for (int i = 1; i <= n; ++i)
      for (int j = i; j <= n; ++j)
        for (int m : modes_of(i, true))
          for (int l : modes_of(j, true))
            f.record(rep.a_mode(i, m) * rep.a_mode(j, l) ==
                         rep.a_mode(j, l) * rep.a_mode(i, m),
                     inst(i, j, {m, l}));
    f.emit(out);
  }

  {  // [a_{i,m}, x^pm_{j,l}] = pm (d_ij [m A_ij / d_ij]_{q_i} / m) x^pm_{j,m+l}
    Family f("rep.ax");
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j) {
        int dij = std::max(C.d[i], C.d[j]);
        for (int m : modes_of(i, true))
          for (int l : modes_of(j, false)) {
            if ((m * C.A[i][j]) % dij != 0) {
              f.skip();
              continue;
            }
            RatFunc coef = RatFunc(rat(dij, m)) *
                           q_number_base(m * C.A[i][j] / dij, qi(i));
            for (int s : {+1, -1}) {
              auto x = [&](int mode) {
                return s > 0 ? rep.x_plus(j, mode) : rep.x_minus(j, mode);
              };
              MatrixRF lhs = rep.a_mode(i, m) * x(l) - x(l) * rep.a_mode(i, m);
              MatrixRF rhs = x(m + l).scaled(s > 0 ? coef : -coef);
              f.record(lhs == rhs, inst(i, j, {m, l}) + (s > 0 ? "+" : "-"));
            }
          }
      }
    f.emit(out);
  }

  {  // x^+_{i,m} x^-_{j,l} - x^-_{j,l} x^+_{i,m} =
     //   delta_ij delta_{d_j | l} (phi^+_{i,m+l} - phi^-_{i,m+l})/(q_i - q_i^{-1})
    Family f("rep.xpxm");
    std::vector<MatSeries> phip(n + 1), phim(n + 1);
    for (int i = 1; i <= n; ++i) {
      phip[i] = phi_modes(rep, i, +1, 2 * window);
      phim[i] = phi_modes(rep, i, -1, 2 * window);
    }
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j)
        for (int m : modes_of(i, false))
          for (int l : modes_of(j, false)) {
            MatrixRF lhs = rep.x_plus(i, m) * rep.x_minus(j, l) -
                           rep.x_minus(j, l) * rep.x_plus(i, m);
            MatrixRF rhs(N, N);
            if (i == j && l % C.d[j] == 0) {
              int k = m + l;
              MatrixRF num(N, N);
              if (k >= 0) num = num + phip[i].coeff(k);
              if (k <= 0) num = num - phim[i].coeff(-k);
              rhs = num.scaled((qi(i) - qi(i).inverse()).inverse());
            }
            f.record(lhs == rhs, inst(i, j, {m, l}));
          }
    f.emit(out);
  }

  {  // x^pm_{i,m+dij} x^pm_{j,l} - q_i^{A_ij} x^pm_{j,l} x^pm_{i,m+dij}
     //   = q_i^{A_ij} x^pm_{i,m} x^pm_{j,l+dij} - x^pm_{j,l+dij} x^pm_{i,m}
    Family f("rep.xx.quad");
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j) {
        int dij = std::max(C.d[i], C.d[j]);
        RatFunc qa = qi(i).pow(C.A[i][j]);
        for (int m : modes_of(i, false))
          for (int l : modes_of(j, false))
            for (int s : {+1, -1}) {
              auto xi_ = [&](int mode) {
                return s > 0 ? rep.x_plus(i, mode) : rep.x_minus(i, mode);
              };
              auto xj = [&](int mode) {
                return s > 0 ? rep.x_plus(j, mode) : rep.x_minus(j, mode);
              };
              // the conjugation factor is q_i^{+A_ij} for x^+ and
              // q_i^{-A_ij} for x^-
              RatFunc qas = s > 0 ? qa : qa.inverse();
              MatrixRF lhs =
                  xi_(m + dij) * xj(l) - (xj(l) * xi_(m + dij)).scaled(qas);
              MatrixRF rhs =
                  (xi_(m) * xj(l + dij)).scaled(qas) - xj(l + dij) * xi_(m);
              f.record(lhs == rhs, inst(i, j, {m, l}) + (s > 0 ? "+" : "-"));
            }
      }
    f.emit(out);
  }

  {  // Serre, A_ij in {0,-1}, r = 1 - A_ij, i != j
    Family f("rep.serre");
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j) {
        if (i == j || (C.A[i][j] != 0 && C.A[i][j] != -1)) continue;
        int r = 1 - C.A[i][j];
        std::vector<int> mi = modes_of(i, false), mj = modes_of(j, false);
        // mode tuples (s_1..s_r) for node i, m for node j
        std::vector<std::vector<int>> tuples;
        if (r == 1) {
          for (int s : mi) tuples.push_back({s});
        } else {
          for (int s1 : mi)
            for (int s2 : mi)
              if (s1 <= s2) tuples.push_back({s1, s2});
        }
        for (const auto& tup : tuples)
          for (int m : mj)
            for (int sgn : {+1, -1}) {
              auto xi_ = [&](int mode) {
                return sgn > 0 ? rep.x_plus(i, mode) : rep.x_minus(i, mode);
              };
              MatrixRF xjm = sgn > 0 ? rep.x_plus(j, m) : rep.x_minus(j, m);
              MatrixRF sum(N, N);
              std::vector<int> perm(tup);
              std::sort(perm.begin(), perm.end());
              do {
                for (int l = 0; l <= r; ++l) {
                  RatFunc coef = q_binomial(r, l, qi(i));
                  if (l % 2 == 1) coef = -coef;
                  MatrixRF term = Id;
                  for (int t = 0; t < l; ++t) term = term * xi_(perm[t]);
                  term = term * xjm;
                  for (int t = l; t < r; ++t) term = term * xi_(perm[t]);
                  sum = sum + term.scaled(coef);
                }
              } while (std::next_permutation(perm.begin(), perm.end()));
              f.record(sum.is_zero(),
                       inst(i, j, {tup[0], r > 1 ? tup[1] : m, m}) +
                           (sgn > 0 ? "+" : "-"));
            }
      }
    f.emit(out);
  }

  {  // the double-sum relation at A_ij = -2 (i repeated, j at the branching node)
    Family f("rep.serre.a2");
    RatFunc two_q2 = q_number_base(2, RatFunc::q_pow(2));
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j) {
        if (C.A[i][j] != -2) continue;
        for (int r1 : modes_of(i, false))
          for (int r2 : modes_of(i, false)) {
            if (r1 > r2) continue;
            for (int s : modes_of(j, false))
              for (int sgn : {+1, -1}) {
                auto xi_ = [&](int mode) {
                  return sgn > 0 ? rep.x_plus(i, mode) : rep.x_minus(i, mode);
                };
                MatrixRF xjs = sgn > 0 ? rep.x_plus(j, s) : rep.x_minus(j, s);
                MatrixRF sum(N, N);
                int rr[2] = {r1, r2};
                for (int p = 0; p < 2; ++p) {
                  int a = rr[p], b = rr[1 - p];
                  // q * (x_js x_{a+sgn} x_b - [2]_{q^2} x_{a+sgn} x_js x_b
                  //      + x_{a+sgn} x_b x_js)
                  MatrixRF t1 = xjs * xi_(a + sgn) * xi_(b) -
                                (xi_(a + sgn) * xjs * xi_(b)).scaled(two_q2) +
                                xi_(a + sgn) * xi_(b) * xjs;
                  // q^{-1} * (x_js x_a x_{b+sgn} - [2]_{q^2} x_a x_js x_{b+sgn}
                  //      + x_a x_{b+sgn} x_js)
                  MatrixRF t2 = xjs * xi_(a) * xi_(b + sgn) -
                                (xi_(a) * xjs * xi_(b + sgn)).scaled(two_q2) +
                                xi_(a) * xi_(b + sgn) * xjs;
                  sum = sum + t1.scaled(RatFunc::q_pow(1)) +
                        t2.scaled(RatFunc::q_pow(-1));
                }
                f.record(sum.is_zero(),
                         inst(i, j, {r1, r2, s}) + (sgn > 0 ? "+" : "-"));
              }
          }
      }
    f.emit(out);
  }

  return out;
}

}  // namespace qav
