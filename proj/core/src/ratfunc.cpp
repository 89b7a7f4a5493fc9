#include "qav/ratfunc.hpp"

#include "qav/errors.hpp"

namespace qav {

const BigRat& PowerCache::pw(int v, int e) const {
  if (!pt_[v]) throw BadArgument(std::string("unassigned variable ") + var_name(Var(v)));
  auto& tab = e >= 0 ? pos_[v] : neg_[v];
  size_t k = size_t(e >= 0 ? e : -e);
  if (tab.empty()) {
    tab.push_back(BigRat(1));
    if (e < 0) {
      if (*pt_[v] == 0) throw DivisionByZero("negative power of 0");
      tab.push_back(BigRat(1) / *pt_[v]);
    } else {
      tab.push_back(*pt_[v]);
    }
  }
  while (tab.size() <= k) tab.push_back(tab.back() * tab[1]);
  return tab[k];
}

BigRat eval_poly(const MPoly& p, const PowerCache& pc) {
  BigRat acc(0);
  for (const auto& t : p.terms()) {
    BigRat v = t.c;
    for (int k = 0; k < kNumVars; ++k)
      if (t.e[k] != 0) v *= pc.pw(k, t.e[k]);
    acc += v;
  }
  return acc;
}

namespace {

// Enforce the canonical denominator unit: lowdeg_q(den) = 0, monic den.
void unit_fix(MPoly& num, MPoly& den) {
  int s = den.lowdeg(VQ);
  if (s != 0) {
    den = den.shifted(VQ, -s);
    num = num.shifted(VQ, -s);
  }
  const BigRat& lc = den.leading().c;
  if (lc != 1) {
    BigRat inv = BigRat(1) / lc;
    num = num * inv;
    den = den * inv;
  }
}

}  // namespace

RatFunc::RatFunc(MPoly num, MPoly den) : num_(std::move(num)), den_(std::move(den)) {
  normalize();
}

void RatFunc::normalize() {
  if (den_.is_zero()) throw DivisionByZero("zero denominator");
  if (num_.is_zero()) {
    den_ = MPoly::constant(1);
    return;
  }
  MPoly g = mpoly_gcd(num_, den_);
  if (!g.is_constant()) {
    num_ = *num_.exact_div(g);
    den_ = *den_.exact_div(g);
  }
  unit_fix(num_, den_);
}

bool RatFunc::is_one() const { return den_.is_constant() && num_ == den_; }

RatFunc RatFunc::operator-() const {
  RatFunc r = *this;
  r.num_ = -r.num_;
  return r;
}

RatFunc RatFunc::operator+(const RatFunc& o) const {
  if (is_zero()) return o;
  if (o.is_zero()) return *this;
  RatFunc r;
  MPoly g = mpoly_gcd(den_, o.den_);
  if (g.is_constant()) {
    r.num_ = num_ * o.den_ + o.num_ * den_;
    r.den_ = den_ * o.den_;
    if (r.num_.is_zero()) {
      r.den_ = MPoly::constant(1);
      return r;
    }
    // coprime denominators: the sum is already reduced
    unit_fix(r.num_, r.den_);
    return r;
  }
  MPoly db = *den_.exact_div(g);
  MPoly dd = *o.den_.exact_div(g);
  MPoly num = num_ * dd + o.num_ * db;
  if (num.is_zero()) return RatFunc();
  MPoly h = mpoly_gcd(num, g);
  MPoly den;
  if (h.is_constant()) {
    den = g * db * dd;
  } else {
    num = *num.exact_div(h);
    den = *g.exact_div(h) * db * dd;
  }
  r.num_ = std::move(num);
  r.den_ = std::move(den);
  unit_fix(r.num_, r.den_);
  return r;
}

RatFunc RatFunc::operator-(const RatFunc& o) const { return *this + (-o); }

RatFunc RatFunc::operator*(const RatFunc& o) const {
  if (is_zero() || o.is_zero()) return RatFunc();
  // Cross-cancel so the product of reduced pairs is already reduced.
  MPoly n1 = num_, d2 = o.den_;
  MPoly g1 = mpoly_gcd(n1, d2);
  if (!g1.is_constant()) {
    n1 = *n1.exact_div(g1);
    d2 = *d2.exact_div(g1);
  }
  MPoly n2 = o.num_, d1 = den_;
  MPoly g2 = mpoly_gcd(n2, d1);
  if (!g2.is_constant()) {
    n2 = *n2.exact_div(g2);
    d1 = *d1.exact_div(g2);
  }
  RatFunc r;
  r.num_ = n1 * n2;
  r.den_ = d1 * d2;
  unit_fix(r.num_, r.den_);
  return r;
}

RatFunc RatFunc::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of zero rational function");
  RatFunc r;
  r.num_ = den_;
  r.den_ = num_;
  unit_fix(r.num_, r.den_);
  return r;
}

RatFunc RatFunc::operator/(const RatFunc& o) const { return *this * o.inverse(); }

RatFunc RatFunc::pow(int k) const {
  if (k < 0) return inverse().pow(-k);
  RatFunc acc(1);
  RatFunc base = *this;
  while (k > 0) {
    if (k & 1) acc = acc * base;
    base = base * base;
    k >>= 1;
  }
  return acc;
}

namespace {

RatFunc subst_poly(const MPoly& p, Var v, const RatFunc& val) {
  RatFunc acc;
  for (const auto& t : p.terms()) {
    Exp e = t.e;
    int k = e[v];
    e[v] = 0;
    RatFunc term(MPoly::from_sorted({Term{e, t.c}}));
    if (k != 0) term = term * val.pow(k);
    acc = acc + term;
  }
  return acc;
}

}  // namespace

RatFunc RatFunc::substitute(Var v, const RatFunc& val) const {
  if (!uses(v)) return *this;
  RatFunc dn = subst_poly(den_, v, val);
  if (dn.is_zero()) throw DivisionByZero("denominator vanishes under substitution");
  return subst_poly(num_, v, val) / dn;
}

BigRat RatFunc::eval(const PowerCache& pc) const {
  BigRat d = eval_poly(den_, pc);
  if (d == 0) throw PoleAtSamplePoint(str());
  return eval_poly(num_, pc) / d;
}

RatFunc RatFunc::eval_partial(const std::array<std::optional<BigRat>, kNumVars>& pt) const {
  MPoly d = den_.eval_partial(pt);
  if (d.is_zero()) throw PoleAtSamplePoint(str());
  return RatFunc(num_.eval_partial(pt), std::move(d));
}

int RatFunc::bound_deg(Var v) const {
  int wn = num_.deg(v) - num_.lowdeg(v);
  int wd = den_.deg(v) - den_.lowdeg(v);
  return std::max(wn, wd);
}

std::string RatFunc::str() const {
  if (is_polynomial()) {
    if (den_.constant_value() == 1) return num_.str();
  }
  return "(" + num_.str() + ")/(" + den_.str() + ")";
}

}  // namespace qav
