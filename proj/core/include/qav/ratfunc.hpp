#pragma once
#include <array>
#include <optional>
#include <string>
#include <vector>

#include "qav/mpoly.hpp"

namespace qav {

// Evaluation point with memoized powers, shared across many entry
// evaluations at the same grid point.
class PowerCache {
 public:
  explicit PowerCache(std::array<std::optional<BigRat>, kNumVars> pt)
      : pt_(std::move(pt)) {}
  const std::array<std::optional<BigRat>, kNumVars>& point() const { return pt_; }
  const BigRat& pw(int v, int e) const;  // pt[v]^e

 private:
  std::array<std::optional<BigRat>, kNumVars> pt_;
  mutable std::array<std::vector<BigRat>, kNumVars> pos_, neg_;
};

BigRat eval_poly(const MPoly& p, const PowerCache& pc);

// Normalized rational function in Q(q, u, v, w, a):
//   den != 0, gcd(num, den) = 1, den has lowdeg_q = 0 and leading
//   coefficient 1.  The representation is canonical, so equality is
//   structural; cross-multiplication equality is available as a second
//   (independent) decision procedure.
class RatFunc {
 public:
  RatFunc() : num_(), den_(MPoly::constant(1)) {}          // zero
  RatFunc(long c) : num_(MPoly::constant(c)), den_(MPoly::constant(1)) {}
  explicit RatFunc(const BigRat& c)
      : num_(MPoly::constant(c)), den_(MPoly::constant(1)) {}
  explicit RatFunc(MPoly num) : num_(std::move(num)), den_(MPoly::constant(1)) {}
  RatFunc(MPoly num, MPoly den);  // normalizes

  static RatFunc var(Var v) { return RatFunc(MPoly::var_pow(v, 1)); }
  static RatFunc q_pow(int k) { return RatFunc(MPoly::var_pow(VQ, k)); }

  const MPoly& num() const { return num_; }
  const MPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const;
  bool is_polynomial() const { return den_.is_constant(); }

  RatFunc operator-() const;
  RatFunc operator+(const RatFunc& o) const;
  RatFunc operator-(const RatFunc& o) const;
  RatFunc operator*(const RatFunc& o) const;
  RatFunc operator/(const RatFunc& o) const;  // DivisionByZero if o == 0
  RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
  RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
  RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
  RatFunc inverse() const;                    // DivisionByZero if zero
  RatFunc pow(int k) const;                   // any sign; DivisionByZero on 0^-k

  bool operator==(const RatFunc& o) const { return num_ == o.num_ && den_ == o.den_; }
  bool operator!=(const RatFunc& o) const { return !(*this == o); }
  // Independent equality decision by cross-multiplication.
  bool equals_cross(const RatFunc& o) const { return num_ * o.den_ == o.num_ * den_; }

  // Exact composition: replace variable v by the rational function val.
  RatFunc substitute(Var v, const RatFunc& val) const;

  // Full evaluation; throws PoleAtSamplePoint when the denominator vanishes.
  BigRat eval(const PowerCache& pc) const;
  // Partial evaluation: assigned variables become constants, the rest stay
  // symbolic.  Throws PoleAtSamplePoint when the denominator collapses to 0.
  RatFunc eval_partial(const std::array<std::optional<BigRat>, kNumVars>& pt) const;

  bool uses(Var v) const { return num_.uses(v) || den_.uses(v); }
  // Degree data for PIT bounds: for q the width (deg - lowdeg) is what
  // matters, for the ordinary variables the plain degree.
  int bound_deg(Var v) const;      // max of num/den widths in v
  int num_deg(Var v) const { return num_.deg(v); }
  int den_deg(Var v) const { return den_.deg(v); }

  std::string str() const;  // canonical: "num" or "(num)/(den)"

 private:
  MPoly num_, den_;
  void normalize();
};

inline RatFunc operator*(const BigRat& c, const RatFunc& f) { return RatFunc(c) * f; }

}  // namespace qav
