#pragma once
#include <map>

#include "qav/matrix.hpp"
#include "qav/report.hpp"

namespace qav {

struct RepV;

// Truncated formal series sum_e c_e z^e over RatFunc.  The series is known
// exactly for exponents in [lo, hi] and is identically zero below lo; above
// hi it is unknown.  The formal variable z is u or 1/u by caller convention
// (phi-currents expand in 1/u), which keeps the window one-sided.
struct TruncSeries {
  int lo = 0;
  int hi = -1;  // hi < lo means the empty (all-unknown) window
  std::map<int, RatFunc> c;  // zero coefficients omitted

  static TruncSeries constant(const RatFunc& v, int hi);
  static TruncSeries monomial(const RatFunc& v, int e, int hi);

  bool known(int e) const { return e < lo || e <= hi; }
  // Coefficient of z^e; BadArgument if e is outside the known range.
  RatFunc coeff(int e) const;
  void set(int e, const RatFunc& v);

  TruncSeries operator+(const TruncSeries& o) const;
  TruncSeries operator-(const TruncSeries& o) const;
  TruncSeries operator*(const TruncSeries& o) const;
  TruncSeries scale(const RatFunc& v) const;
  // z -> alpha z: multiplies the coefficient of z^e by alpha^e.
  TruncSeries scale_var(const RatFunc& alpha) const;
  // Multiplicative inverse; the lowest known coefficient must be nonzero.
  TruncSeries inverse() const;
  TruncSeries truncated(int new_hi) const;
  bool is_one() const;
};

// 1/(1 - alpha z) = sum alpha^e z^e up to order.
TruncSeries geometric(const RatFunc& alpha, int order);

// The scalar factor relating the universal R-matrix image to the rational
// form: an infinite product over shifted powers of xi = -q^{-2n}.  Each
// u-coefficient receives contributions from every factor, so the product is
// resummed exactly: log f has power-sum coefficients that are geometric
// series in xi^k, summed in closed form in Q(q), and f is recovered by the
// exp recurrence.  Coefficients are exact rational functions of q.
TruncSeries f_series(int n, int order);

// f(u) f(u xi) = (xi q^{-2})^2 (1-u q^2 xi)(1-u) / ((1-u q^{-2})(1-u xi))
// as truncated series, coefficient by coefficient.
Report check_f_identity(int n, int order);

// q-exponential sum_k x^k / [k]!_conv with [s]_conv = 1 + q + ... + q^{s-1}
// in the given base.  The convention is quarantined: no verified identity
// depends on it.  arg must have no constant term (lo >= 1).
TruncSeries qexp(const TruncSeries& arg, const RatFunc& base, int order);

// Matrix-valued truncated series (diagonal matrices throughout).
struct MatSeries {
  int lo = 0;
  int hi = -1;
  std::map<int, MatrixRF> c;
  int dim = 0;
  bool known(int e) const { return e < lo || e <= hi; }
  MatrixRF coeff(int e) const;  // zero matrix if absent within the window
};

// phi^{sign}_i as a series in z = u^{-sign}: coefficient at z^m is the
// image of phi^{sign}_{i, sign*m}.  All a-mode images are diagonal, so the
// exponential is taken entrywise.
MatSeries phi_modes(const RepV& rep, int i, int sign, int order);

}  // namespace qav
