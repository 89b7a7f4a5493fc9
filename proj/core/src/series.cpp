#include "qav/series.hpp"

#include "qav/errors.hpp"
#include "qav/qcomb.hpp"
#include "qav/repv.hpp"

namespace qav {

TruncSeries TruncSeries::constant(const RatFunc& v, int hi) {
  TruncSeries s;
  s.lo = 0;
  s.hi = hi;
  if (!v.is_zero()) s.c[0] = v;
  return s;
}

TruncSeries TruncSeries::monomial(const RatFunc& v, int e, int hi) {
  TruncSeries s;
  s.lo = e;
  s.hi = hi;
  if (!v.is_zero()) s.c[e] = v;
  return s;
}

RatFunc TruncSeries::coeff(int e) const {
  if (!known(e)) throw BadArgument("coefficient outside the known window");
  auto it = c.find(e);
  return it == c.end() ? RatFunc() : it->second;
}

void TruncSeries::set(int e, const RatFunc& v) {
  if (v.is_zero())
    c.erase(e);
  else
    c[e] = v;
}

TruncSeries TruncSeries::operator+(const TruncSeries& o) const {
  TruncSeries r;
  r.lo = std::min(lo, o.lo);
  r.hi = std::min(hi, o.hi);
  for (int e = r.lo; e <= r.hi; ++e) r.set(e, coeff(e) + o.coeff(e));
  return r;
}

TruncSeries TruncSeries::operator-(const TruncSeries& o) const {
  return *this + o.scale(RatFunc(-1));
}

TruncSeries TruncSeries::operator*(const TruncSeries& o) const {
  TruncSeries r;
  r.lo = lo + o.lo;
  // coefficient at e needs both operands throughout [lo, e - o.lo] x [o.lo, e - lo]
  r.hi = std::min(hi + o.lo, o.hi + lo);
  for (int e = r.lo; e <= r.hi; ++e) {
    RatFunc s;
    for (int k = lo; k <= e - o.lo; ++k) {
      RatFunc a = coeff(k);
      if (a.is_zero()) continue;
      s += a * o.coeff(e - k);
    }
    r.set(e, s);
  }
  return r;
}

TruncSeries TruncSeries::scale(const RatFunc& v) const {
  TruncSeries r;
  r.lo = lo;
  r.hi = hi;
  for (const auto& [e, x] : c) r.set(e, x * v);
  return r;
}

TruncSeries TruncSeries::scale_var(const RatFunc& alpha) const {
  TruncSeries r;
  r.lo = lo;
  r.hi = hi;
  for (const auto& [e, x] : c) r.set(e, x * alpha.pow(e));
  return r;
}

TruncSeries TruncSeries::inverse() const {
  if (hi < lo) throw BadArgument("inverse of an unknown series");
  RatFunc head = coeff(lo);
  if (head.is_zero()) throw DivisionByZero("series inverse: zero leading coefficient");
  TruncSeries r;
  r.lo = -lo;
  r.hi = hi - 2 * lo;
  RatFunc hinv = head.inverse();
  for (int e = r.lo; e <= r.hi; ++e) {
    // (sum_{k >= lo} c_k z^k)(sum r_m z^m) = 1
    RatFunc s = (e == r.lo) ? RatFunc(1) : RatFunc();
    for (int k = lo + 1; k <= e + 2 * lo; ++k) s -= coeff(k) * r.coeff(e + lo - k);
    r.set(e, s * hinv);
  }
  return r;
}

TruncSeries TruncSeries::truncated(int new_hi) const {
  TruncSeries r;
  r.lo = lo;
  r.hi = std::min(hi, new_hi);
  for (const auto& [e, x] : c)
    if (e <= r.hi) r.c.emplace(e, x);
  return r;
}

bool TruncSeries::is_one() const {
  for (int e = lo; e <= hi; ++e)
    if (coeff(e) != (e == 0 ? RatFunc(1) : RatFunc())) return false;
  return true;
}

TruncSeries geometric(const RatFunc& alpha, int order) {
  TruncSeries s;
  s.lo = 0;
  s.hi = order;
  RatFunc p(1);
  for (int e = 0; e <= order; ++e) {
    s.set(e, p);
    p = p * alpha;
  }
  return s;
}

namespace {

RatFunc qp(int k) { return RatFunc::q_pow(k); }

RatFunc xi_rf(int n) { return -qp(-2 * n); }

}  // namespace

TruncSeries f_series(int n, int order) {
  if (order < 0) throw BadArgument("order must be >= 0");
  RatFunc xi = xi_rf(n);
  // power sums of log: t_k = -(1/k) [ (1 - q^{-2k})
  //   + xi^k (q^{2k} + q^{-2k} - 2) + xi^{2k} (1 - q^{2k}) ] / (1 - xi^{2k})
  std::vector<RatFunc> t(order + 1);
  for (int k = 1; k <= order; ++k) {
    RatFunc xik = xi.pow(k), xi2k = xik * xik;
    RatFunc num = (RatFunc(1) - qp(-2 * k)) +
                  xik * (qp(2 * k) + qp(-2 * k) - RatFunc(2)) +
                  xi2k * (RatFunc(1) - qp(2 * k));
    t[k] = RatFunc(rat(-1, k)) * num / (RatFunc(1) - xi2k);
  }
  // exp recurrence: m a_m = sum_{k=1}^m k t_k a_{m-k}
  std::vector<RatFunc> a(order + 1);
  a[0] = RatFunc(1);
  for (int m = 1; m <= order; ++m) {
    RatFunc s;
    for (int k = 1; k <= m; ++k) s += RatFunc(k) * t[k] * a[m - k];
    a[m] = s * RatFunc(rat(1, m));
  }
  TruncSeries f;
  f.lo = 0;
  f.hi = order;
  RatFunc head = xi * qp(-2);
  for (int m = 0; m <= order; ++m) f.set(m, head * a[m]);
  return f;
}

Report check_f_identity(int n, int order) {
  if (order < 1) throw BadArgument("order must be >= 1");
  Report rep;
  rep.suite = "series";
  RatFunc xi = xi_rf(n);
  TruncSeries f = f_series(n, order);
  TruncSeries lhs = f * f.scale_var(xi);
  RatFunc head = (xi * qp(-2)).pow(2);
  // (1 - u q^2 xi)(1 - u) as a short polynomial series
  TruncSeries num;
  num.lo = 0;
  num.hi = order;
  num.set(0, RatFunc(1));
  num.set(1, -(qp(2) * xi + RatFunc(1)));
  num.set(2, qp(2) * xi);
  TruncSeries rhs =
      (num * geometric(qp(-2), order) * geometric(xi, order)).scale(head);
  std::string id = "fid.n" + std::to_string(n) + ".o" + std::to_string(order);
  for (int e = 0; e <= std::min(lhs.hi, rhs.hi); ++e)
    if (lhs.coeff(e) != rhs.coeff(e)) {
      rep.fail(id, "f(u) f(u xi) product identity",
               "coefficient of u^" + std::to_string(e));
      return rep;
    }
  rep.pass(id, "f(u) f(u xi) = (xi q^{-2})^2 (1-u q^2 xi)(1-u)/((1-u q^{-2})(1-u xi)), " +
                   std::to_string(order + 1) + " coefficients");
  return rep;
}

TruncSeries qexp(const TruncSeries& arg, const RatFunc& base, int order) {
  if (arg.lo < 1) {
    // a nonzero constant term makes the q-exponential ill-defined
    if (!(arg.known(0) && arg.coeff(0).is_zero()))
      throw BadArgument("qexp requires a series without constant term");
  }
  TruncSeries r = TruncSeries::constant(RatFunc(1), std::min(order, arg.hi));
  TruncSeries pw = TruncSeries::constant(RatFunc(1), std::min(order, arg.hi));
  RatFunc fact(1);
  int kmax = arg.lo >= 1 ? order / arg.lo + 1 : order + 1;
  for (int k = 1; k <= kmax; ++k) {
    pw = pw * arg;
    // [k]_conv = 1 + base + ... + base^{k-1}
    RatFunc bracket;
    for (int s = 0; s < k; ++s) bracket += base.pow(s);
    fact = fact * bracket;
    r = r + pw.scale(fact.inverse());
    r.hi = std::min(r.hi, order);
    if (pw.lo > order) break;
  }
  return r.truncated(order);
}

MatrixRF MatSeries::coeff(int e) const {
  if (!known(e)) throw BadArgument("matrix coefficient outside the known window");
  auto it = c.find(e);
  return it == c.end() ? MatrixRF(dim, dim) : it->second;
}

MatSeries phi_modes(const RepV& rep, int i, int sign, int order) {
  if (sign != 1 && sign != -1) throw BadArgument("phi sign");
  int N = 2 * rep.n;
  MatrixRF k = rep.k_cartan(i, sign);
  RatFunc qi = RatFunc::q_pow(rep.cartan.d[i]);
  RatFunc pre = (qi - qi.inverse()) * RatFunc(sign);
  // z = u^{-sign}; the a_{i, sign*s} images are diagonal, so the exponential
  // is taken entrywise on the diagonal.
  std::vector<TruncSeries> diag(N);
  for (int j = 0; j < N; ++j) {
    TruncSeries arg;
    arg.lo = 1;
    arg.hi = order;
    for (int s = 1; s <= order; ++s) {
      if (i == rep.n && s % 2 != 0) continue;  // odd a-modes are absent
      MatrixRF am = rep.a_mode(i, sign * s);
      for (int r = 0; r < N; ++r)
        for (int cidx = 0; cidx < N; ++cidx)
          if (r != cidx && !am.at(r, cidx).is_zero())
            throw BadArgument("a-mode image is not diagonal");
      arg.set(s, pre * am.at(j, j));
    }
    // ordinary exponential: diagonal entries commute
    TruncSeries e = TruncSeries::constant(RatFunc(1), order);
    TruncSeries pw = TruncSeries::constant(RatFunc(1), order);
    BigRat fact(1);
    for (int kk = 1; kk <= order; ++kk) {
      pw = (pw * arg).truncated(order);
      fact *= kk;
      e = e + pw.scale(RatFunc(BigRat(1) / fact));
      if (pw.lo > order) break;
    }
    diag[j] = e.scale(k.at(j, j)).truncated(order);
  }
  MatSeries out;
  out.lo = 0;
  out.hi = order;
  out.dim = N;
  for (int e = 0; e <= order; ++e) {
    MatrixRF m(N, N);
    bool nz = false;
    for (int j = 0; j < N; ++j) {
      RatFunc v = diag[j].coeff(e);
      if (!v.is_zero()) nz = true;
      m.at(j, j) = v;
    }
    if (nz) out.c[e] = m;
  }
  return out;
}

}  // namespace qav
