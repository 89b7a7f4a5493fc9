#include "qav/mpoly.hpp"

#include <algorithm>
#include <cstdint>
#include <map>

#include "qav/errors.hpp"

namespace qav {

const char* var_name(Var v) {
  static const char* names[kNumVars] = {"q", "u", "v", "w", "a"};
  return names[v];
}

BigRat pow_rat(const BigRat& r, long k) {
  if (k == 0) return BigRat(1);
  BigRat base = r;
  if (k < 0) {
    if (r == 0) throw DivisionByZero("0 raised to negative power");
    base = BigRat(1) / r;
    k = -k;
  }
  BigRat acc(1);
  while (k > 0) {
    if (k & 1) acc *= base;
    base *= base;
    k >>= 1;
  }
  return acc;
}

bool exp_less(const Exp& a, const Exp& b) {
  long ta = 0, tb = 0;
  for (int i = 0; i < kNumVars; ++i) {
    ta += a[i];
    tb += b[i];
  }
  if (ta != tb) return ta < tb;
  for (int i = 0; i < kNumVars; ++i)
    if (a[i] != b[i]) return a[i] < b[i];
  return false;
}

static bool exp_greater(const Exp& a, const Exp& b) { return exp_less(b, a); }

MPoly MPoly::from_sorted(std::vector<Term> ts) {
  MPoly p;
  p.t_ = std::move(ts);
  return p;
}

MPoly MPoly::constant(const BigRat& c) {
  MPoly p;
  if (c != 0) p.t_.push_back({Exp{}, c});
  return p;
}

MPoly MPoly::var_pow(Var v, int k) {
  if (k < 0 && v != VQ) throw BadArgument("negative exponent only allowed for q");
  MPoly p;
  Exp e{};
  e[v] = k;
  p.t_.push_back({e, BigRat(1)});
  return p;
}

bool MPoly::is_constant() const {
  return t_.empty() || (t_.size() == 1 && t_[0].e == Exp{});
}

const BigRat& MPoly::constant_value() const {
  static const BigRat kZero(0);
  if (t_.empty()) return kZero;
  return t_[0].c;
}

int MPoly::deg(Var v) const {
  int d = 0;
  bool first = true;
  for (const auto& t : t_) {
    if (first || t.e[v] > d) d = t.e[v];
    first = false;
  }
  return d;
}

int MPoly::lowdeg(Var v) const {
  int d = 0;
  bool first = true;
  for (const auto& t : t_) {
    if (first || t.e[v] < d) d = t.e[v];
    first = false;
  }
  return d;
}

bool MPoly::uses(Var v) const {
  for (const auto& t : t_)
    if (t.e[v] != 0) return true;
  return false;
}

MPoly MPoly::operator-() const {
  MPoly p = *this;
  for (auto& t : p.t_) t.c = -t.c;
  return p;
}

MPoly MPoly::operator+(const MPoly& o) const {
  std::vector<Term> out;
  out.reserve(t_.size() + o.t_.size());
  size_t i = 0, j = 0;
  while (i < t_.size() && j < o.t_.size()) {
    if (t_[i].e == o.t_[j].e) {
      BigRat c = t_[i].c + o.t_[j].c;
      if (c != 0) out.push_back({t_[i].e, std::move(c)});
      ++i, ++j;
    } else if (exp_greater(t_[i].e, o.t_[j].e)) {
      out.push_back(t_[i++]);
    } else {
      out.push_back(o.t_[j++]);
    }
  }
  for (; i < t_.size(); ++i) out.push_back(t_[i]);
  for (; j < o.t_.size(); ++j) out.push_back(o.t_[j]);
  return from_sorted(std::move(out));
}

MPoly MPoly::operator-(const MPoly& o) const { return *this + (-o); }

MPoly MPoly::operator*(const MPoly& o) const {
  if (is_zero() || o.is_zero()) return MPoly();
  // Fast path: monomial times polynomial keeps the sorted order.
  if (t_.size() == 1 || o.t_.size() == 1) {
    const MPoly& mono = t_.size() == 1 ? *this : o;
    const MPoly& poly = t_.size() == 1 ? o : *this;
    std::vector<Term> out;
    out.reserve(poly.t_.size());
    for (const auto& t : poly.t_) {
      Exp e = t.e;
      for (int k = 0; k < kNumVars; ++k) e[k] += mono.t_[0].e[k];
      out.push_back({e, t.c * mono.t_[0].c});
    }
    return from_sorted(std::move(out));
  }
  std::map<Exp, BigRat, bool (*)(const Exp&, const Exp&)> acc(exp_greater);
  for (const auto& s : t_)
    for (const auto& t : o.t_) {
      Exp e = s.e;
      for (int k = 0; k < kNumVars; ++k) e[k] += t.e[k];
      auto [it, fresh] = acc.emplace(e, s.c * t.c);
      if (!fresh) it->second += s.c * t.c;
    }
  std::vector<Term> out;
  out.reserve(acc.size());
  for (auto& [e, c] : acc)
    if (c != 0) out.push_back({e, std::move(c)});
  return from_sorted(std::move(out));
}

MPoly MPoly::operator*(const BigRat& c) const {
  if (c == 0) return MPoly();
  MPoly p = *this;
  for (auto& t : p.t_) t.c *= c;
  return p;
}

MPoly MPoly::pow(int k) const {
  if (k < 0) throw BadArgument("MPoly::pow requires k >= 0");
  MPoly acc = constant(1);
  MPoly base = *this;
  while (k > 0) {
    if (k & 1) acc = acc * base;
    base = base * base;
    k >>= 1;
  }
  return acc;
}

MPoly MPoly::shifted(Var v, int k) const {
  if (k == 0) return *this;
  if (v != VQ && lowdeg(v) + k < 0)
    throw BadArgument("shift would create negative exponent");
  MPoly p = *this;
  for (auto& t : p.t_) t.e[v] += k;
  return p;
}

std::optional<MPoly> MPoly::exact_div(const MPoly& o) const {
  if (o.is_zero()) throw DivisionByZero("exact_div by zero polynomial");
  MPoly r = *this;
  std::vector<Term> q;
  const Term& lo = o.leading();
  while (!r.is_zero()) {
    const Term& lr = r.leading();
    Exp e;
    for (int k = 0; k < kNumVars; ++k) {
      e[k] = lr.e[k] - lo.e[k];
      if (k != VQ && e[k] < 0) return std::nullopt;
    }
    Term t{e, lr.c / lo.c};
    q.push_back(t);
    MPoly m;
    m.t_.push_back(t);
    r = r - m * o;
  }
  std::sort(q.begin(), q.end(),
            [](const Term& x, const Term& y) { return exp_greater(x.e, y.e); });
  return from_sorted(std::move(q));
}

BigRat MPoly::eval(const std::array<std::optional<BigRat>, kNumVars>& pt) const {
  BigRat acc(0);
  for (const auto& t : t_) {
    BigRat v = t.c;
    for (int k = 0; k < kNumVars; ++k) {
      if (t.e[k] == 0) continue;
      if (!pt[k]) throw BadArgument(std::string("unassigned variable ") + var_name(Var(k)));
      v *= pow_rat(*pt[k], t.e[k]);
    }
    acc += v;
  }
  return acc;
}

MPoly MPoly::eval_partial(const std::array<std::optional<BigRat>, kNumVars>& pt) const {
  MPoly acc;
  for (const auto& t : t_) {
    BigRat c = t.c;
    Exp e = t.e;
    for (int k = 0; k < kNumVars; ++k) {
      if (e[k] != 0 && pt[k]) {
        c *= pow_rat(*pt[k], e[k]);
        e[k] = 0;
      }
    }
    MPoly m;
    if (c != 0) m.t_.push_back({e, c});
    acc = acc + m;
  }
  return acc;
}

BigRat MPoly::content() const {
  if (t_.empty()) return BigRat(0);
  // gcd of |coefficients| (as rationals: gcd of numerators / lcm of
  // denominators), signed like the leading coefficient.
  mpz_class num_gcd(0), den_lcm(1);
  for (const auto& t : t_) {
    mpz_class n = abs(t.c.get_num());
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), n.get_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), t.c.get_den().get_mpz_t());
  }
  BigRat g(num_gcd, den_lcm);
  g.canonicalize();
  if (t_[0].c < 0) g = -g;
  return g;
}

std::string MPoly::str() const {
  if (t_.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& t : t_) {
    BigRat c = t.c;
    if (first) {
      if (c < 0) {
        s += "-";
        c = -c;
      }
    } else {
      s += (c < 0) ? " - " : " + ";
      if (c < 0) c = -c;
    }
    first = false;
    std::string mono;
    for (int k = 0; k < kNumVars; ++k) {
      if (t.e[k] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += var_name(Var(k));
      if (t.e[k] != 1) mono += "^" + std::to_string(t.e[k]);
    }
    if (mono.empty()) {
      s += to_string(c);
    } else {
      if (c != 1) s += to_string(c) + "*";
      s += mono;
    }
  }
  return s;
}

// ---------------------------------------------------------------------------
// GCD
// ---------------------------------------------------------------------------

namespace {

// Strip per-variable minimal exponents (the monomial content), returning the
// stripped polynomial; mins are reported through `low`.
MPoly strip_monomial(const MPoly& p, Exp& low) {
  low = Exp{};
  for (int k = 0; k < kNumVars; ++k) low[k] = p.lowdeg(Var(k));
  std::vector<Term> ts = p.terms();
  for (auto& t : ts)
    for (int k = 0; k < kNumVars; ++k) t.e[k] -= low[k];
  return MPoly::from_sorted(std::move(ts));
}

// Unit-normalize: lowdeg_q = 0 and leading coefficient 1.
MPoly unit_normalize(const MPoly& p) {
  if (p.is_zero()) return p;
  MPoly r = p.shifted(VQ, -p.lowdeg(VQ));
  return r * (BigRat(1) / r.leading().c);
}

// View as univariate in x: dense coefficient list, index = exponent in x.
std::vector<MPoly> uni_coeffs(const MPoly& p, Var x) {
  std::vector<MPoly> cs(static_cast<size_t>(p.deg(x)) + 1);
  for (const auto& t : p.terms()) {
    Exp e = t.e;
    int k = e[x];
    e[x] = 0;
    MPoly m = MPoly::from_sorted({Term{e, t.c}});
    cs[k] = cs[k] + m;
  }
  return cs;
}

MPoly from_uni(const std::vector<MPoly>& cs, Var x) {
  MPoly acc;
  for (size_t k = 0; k < cs.size(); ++k) acc = acc + cs[k].shifted(x, int(k));
  return acc;
}

int uni_deg(const std::vector<MPoly>& cs) {
  for (int k = int(cs.size()) - 1; k >= 0; --k)
    if (!cs[k].is_zero()) return k;
  return -1;
}

MPoly content_wrt(const MPoly& p, Var x) {
  MPoly g;
  for (const auto& c : uni_coeffs(p, x)) {
    if (c.is_zero()) continue;
    g = g.is_zero() ? unit_normalize(c) : mpoly_gcd(g, c);
    if (g.is_constant()) break;
  }
  return g;
}

// Pseudo-remainder of a by b in variable x (deg_x a >= deg_x b >= 0).
MPoly prem(const MPoly& a, const MPoly& b, Var x) {
  std::vector<MPoly> ra = uni_coeffs(a, x);
  std::vector<MPoly> rb = uni_coeffs(b, x);
  int db = uni_deg(rb);
  const MPoly& lb = rb[db];
  int da = uni_deg(ra);
  while (da >= db) {
    MPoly la = ra[da];
    // r := lb*r - la*b*x^(da-db)
    for (int k = 0; k <= da; ++k) ra[k] = ra[k] * lb;
    for (int k = 0; k <= db; ++k) ra[k + da - db] = ra[k + da - db] - la * rb[k];
    int nd = -1;
    for (int k = da; k >= 0; --k)
      if (!ra[k].is_zero()) {
        nd = k;
        break;
      }
    if (nd == da) nd = da - 1;  // leading term must have cancelled
    da = nd;
    if (da < 0) break;
    ra.resize(da + 1);
  }
  if (da < 0) return MPoly();
  return from_uni(ra, x);
}

MPoly primitive_part(const MPoly& p, Var x) {
  if (p.is_zero()) return p;
  Exp low;
  MPoly s = strip_monomial(p, low);
  MPoly c = content_wrt(s, x);
  if (c.is_constant()) return unit_normalize(s);
  auto q = s.exact_div(c);
  if (!q) throw std::logic_error("content does not divide polynomial");
  return unit_normalize(*q);
}

// ---------------------------------------------------------------------------
// Univariate fast path: modular gcd with CRT lifting and a division check.
// The PRS below is fine for the small multivariate gcds that occur in matrix
// entries, but pseudo-remainder coefficient growth makes it hopeless for the
// dense degree-several-thousand polynomials in q produced by series work.
// ---------------------------------------------------------------------------

using u64 = uint64_t;

u64 mulm(u64 a, u64 b, u64 p) { return u64((unsigned __int128)a * b % p); }
u64 subm(u64 a, u64 b, u64 p) { return a >= b ? a - b : a + p - b; }

u64 powm(u64 a, u64 e, u64 p) {
  u64 r = 1;
  while (e) {
    if (e & 1) r = mulm(r, a, p);
    a = mulm(a, a, p);
    e >>= 1;
  }
  return r;
}

u64 next_prime_u64(u64 p) {
  mpz_class z(p);
  mpz_nextprime(z.get_mpz_t(), z.get_mpz_t());
  return mpz_get_ui(z.get_mpz_t());
}

void trim_zz(std::vector<u64>& v) {
  while (!v.empty() && v.back() == 0) v.pop_back();
}

// Monic gcd in F_p[x], dense little-endian coefficients.
std::vector<u64> gcd_mod_p(std::vector<u64> a, std::vector<u64> b, u64 p) {
  trim_zz(a);
  trim_zz(b);
  while (!b.empty()) {
    u64 inv = powm(b.back(), p - 2, p);
    while (a.size() >= b.size()) {
      u64 f = mulm(a.back(), inv, p);
      size_t off = a.size() - b.size();
      for (size_t i = 0; i < b.size(); ++i)
        a[off + i] = subm(a[off + i], mulm(f, b[i], p), p);
      trim_zz(a);
    }
    std::swap(a, b);
  }
  if (!a.empty()) {
    u64 inv = powm(a.back(), p - 2, p);
    for (auto& c : a) c = mulm(c, inv, p);
  }
  return a;
}

// Dense primitive Z[x] image of a poly using only variable x (lowdeg may be
// nonzero; the monomial factor is a unit here and is dropped).
std::vector<mpz_class> uni_to_zz(const MPoly& p, Var x) {
  int low = p.lowdeg(x);
  std::vector<mpz_class> c(size_t(p.deg(x) - low) + 1, mpz_class(0));
  mpz_class den(1);
  for (const auto& t : p.terms())
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), t.c.get_den().get_mpz_t());
  for (const auto& t : p.terms()) {
    mpq_class v = t.c * mpq_class(den);
    c[size_t(t.e[x] - low)] = v.get_num();
  }
  mpz_class cont(0);
  for (const auto& z : c) mpz_gcd(cont.get_mpz_t(), cont.get_mpz_t(), z.get_mpz_t());
  if (sgn(c.back()) < 0) cont = -cont;
  for (auto& z : c) z /= cont;
  return c;
}

// Exact division test in Z[x] (both primitive): remainder must be zero and
// every quotient coefficient integral.
bool divides_zz(const std::vector<mpz_class>& a, const std::vector<mpz_class>& g) {
  if (g.size() > a.size()) return false;
  std::vector<mpz_class> r = a;
  const mpz_class& lg = g.back();
  for (size_t i = a.size() - g.size() + 1; i-- > 0;) {
    mpz_class& top = r[i + g.size() - 1];
    if (top == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), lg.get_mpz_t())) return false;
    mpz_class f = top / lg;
    for (size_t j = 0; j < g.size(); ++j) r[i + j] -= f * g[j];
  }
  for (const auto& z : r)
    if (z != 0) return false;
  return true;
}

std::optional<MPoly> uni_gcd_modular(const MPoly& a, const MPoly& b, Var x) {
  std::vector<mpz_class> A = uni_to_zz(a, x), B = uni_to_zz(b, x);
  mpz_class gamma;  // lc(gcd) divides gcd of leading coefficients
  mpz_gcd(gamma.get_mpz_t(), A.back().get_mpz_t(), B.back().get_mpz_t());
  auto reduce = [](const std::vector<mpz_class>& v, u64 p) {
    std::vector<u64> r(v.size());
    for (size_t i = 0; i < v.size(); ++i) {
      r[i] = mpz_fdiv_ui(v[i].get_mpz_t(), p);
    }
    return r;
  };
  u64 p = u64(1) << 62;
  int dbest = -1;
  mpz_class M(0);
  std::vector<mpz_class> G, prev;
  for (int iter = 0; iter < 256; ++iter) {
    p = next_prime_u64(p);
    if (mpz_fdiv_ui(A.back().get_mpz_t(), p) == 0 ||
        mpz_fdiv_ui(B.back().get_mpz_t(), p) == 0)
      continue;
    std::vector<u64> gp = gcd_mod_p(reduce(A, p), reduce(B, p), p);
    int dg = int(gp.size()) - 1;
    if (dg == 0) return MPoly::constant(1);
    if (dbest >= 0 && dg > dbest) continue;  // unlucky prime
    u64 gmp_ = mpz_fdiv_ui(gamma.get_mpz_t(), p);
    if (dbest < 0 || dg < dbest) {
      // start (or restart, if earlier primes were unlucky) the CRT lift
      dbest = dg;
      M = p;
      G.assign(gp.size(), mpz_class(0));
      for (size_t i = 0; i < gp.size(); ++i) G[i] = mulm(gp[i], gmp_, p);
      prev.clear();
    } else {
      u64 minv = powm(mpz_fdiv_ui(M.get_mpz_t(), p), p - 2, p);
      for (size_t i = 0; i < G.size(); ++i) {
        u64 want = mulm(gp[i], gmp_, p);
        u64 have = mpz_fdiv_ui(G[i].get_mpz_t(), p);
        G[i] += M * mulm(subm(want, have, p), minv, p);
      }
      M *= p;
    }
    // symmetric lift, then primitive part
    std::vector<mpz_class> cand(G.size());
    for (size_t i = 0; i < G.size(); ++i)
      cand[i] = 2 * G[i] >= M ? mpz_class(G[i] - M) : G[i];
    mpz_class cont(0);
    for (const auto& z : cand)
      mpz_gcd(cont.get_mpz_t(), cont.get_mpz_t(), z.get_mpz_t());
    if (sgn(cand.back()) < 0) cont = -cont;
    for (auto& z : cand) z /= cont;
    if (cand == prev && divides_zz(A, cand) && divides_zz(B, cand)) {
      std::vector<Term> ts;
      for (size_t i = cand.size(); i-- > 0;) {
        if (cand[i] == 0) continue;
        Exp e{};
        e[x] = int(i);
        ts.push_back(Term{e, BigRat(mpq_class(cand[i]))});
      }
      return unit_normalize(MPoly::from_sorted(std::move(ts)));
    }
    prev = std::move(cand);
  }
  return std::nullopt;  // give up, let the PRS handle it
}

MPoly gcd_core(MPoly a, MPoly b);

MPoly gcd_with_monomials(const MPoly& a, const MPoly& b) {
  Exp la, lb;
  MPoly sa = strip_monomial(a, la);
  MPoly sb = strip_monomial(b, lb);
  MPoly g = gcd_core(std::move(sa), std::move(sb));
  Exp shift{};
  for (int k = 0; k < kNumVars; ++k)
    if (k != VQ) shift[k] = std::min(la[k], lb[k]);
  std::vector<Term> ts = g.terms();
  for (auto& t : ts)
    for (int k = 0; k < kNumVars; ++k) t.e[k] += shift[k];
  return unit_normalize(MPoly::from_sorted(std::move(ts)));
}

MPoly gcd_core(MPoly a, MPoly b) {
  if (a.is_constant() || b.is_constant()) return MPoly::constant(1);
  // Main variable: used by both, minimizing the larger degree.
  int best = -1, best_deg = 0;
  for (int k = 0; k < kNumVars; ++k) {
    Var v = Var(k);
    if (!a.uses(v) || !b.uses(v)) continue;
    int d = std::max(a.deg(v) - a.lowdeg(v), b.deg(v) - b.lowdeg(v));
    if (best < 0 || d < best_deg) {
      best = k;
      best_deg = d;
    }
  }
  if (best < 0) return MPoly::constant(1);
  Var x = Var(best);
  bool uni = true;
  for (int k = 0; k < kNumVars && uni; ++k)
    if (k != best && (a.uses(Var(k)) || b.uses(Var(k)))) uni = false;
  if (uni)
    if (auto g = uni_gcd_modular(a, b, x)) return *g;
  MPoly ca = content_wrt(a, x);
  MPoly cb = content_wrt(b, x);
  MPoly A = a, B = b;
  if (!ca.is_constant()) A = unit_normalize(*a.exact_div(ca));
  if (!cb.is_constant()) B = unit_normalize(*b.exact_div(cb));
  MPoly cg = mpoly_gcd(ca, cb);
  if (A.deg(x) < B.deg(x)) std::swap(A, B);
  // Primitive polynomial remainder sequence.
  while (!B.is_zero()) {
    MPoly r = prem(A, B, x);
    A = B;
    B = r.is_zero() ? MPoly() : primitive_part(r, x);
  }
  if (A.deg(x) == 0) A = MPoly::constant(1);  // degenerated to a unit
  return unit_normalize(A * cg);
}

}  // namespace

MPoly mpoly_gcd(const MPoly& a, const MPoly& b) {
  if (a.is_zero()) return unit_normalize(b);
  if (b.is_zero()) return unit_normalize(a);
  if (a.is_constant() || b.is_constant()) return MPoly::constant(1);
  return gcd_with_monomials(a, b);
}

}  // namespace qav
