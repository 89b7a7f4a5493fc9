#pragma once
#include <array>
#include <optional>
#include <string>
#include <vector>

#include "qav/bigrat.hpp"

namespace qav {

// The fixed ambient variable set.  q is Laurent (negative exponents allowed);
// the spectral/evaluation variables u, v, w, a are ordinary polynomial
// variables (exponent >= 0).
enum Var : int { VQ = 0, VU = 1, VV = 2, VW = 3, VA = 4 };
constexpr int kNumVars = 5;
const char* var_name(Var v);

using Exp = std::array<int, kNumVars>;

// Graded-lex on exponent vectors (total degree first, then lex q>u>v>w>a).
// Translation-invariant, so it stays a valid term order with Laurent q.
bool exp_less(const Exp& a, const Exp& b);

struct Term {
  Exp e;
  BigRat c;
  bool operator==(const Term& o) const { return e == o.e && c == o.c; }
};

// Sparse multivariate Laurent polynomial over Q.  Terms are kept sorted in
// strictly descending graded-lex order with no zero coefficients: the
// representation is canonical, so operator== is structural.
class MPoly {
 public:
  MPoly() = default;  // zero
  static MPoly constant(const BigRat& c);
  static MPoly constant(long c) { return constant(BigRat(c)); }
  static MPoly var_pow(Var v, int k);  // v^k (k<0 only for VQ)

  bool is_zero() const { return t_.empty(); }
  bool is_constant() const;
  const BigRat& constant_value() const;  // requires is_constant (zero gives 0)
  size_t term_count() const { return t_.size(); }
  const std::vector<Term>& terms() const { return t_; }
  const Term& leading() const { return t_.front(); }

  int deg(Var v) const;     // max exponent of v (0 if poly is zero)
  int lowdeg(Var v) const;  // min exponent of v (0 if poly is zero)
  bool uses(Var v) const;

  MPoly operator-() const;
  MPoly operator+(const MPoly& o) const;
  MPoly operator-(const MPoly& o) const;
  MPoly operator*(const MPoly& o) const;
  MPoly operator*(const BigRat& c) const;
  MPoly pow(int k) const;  // k >= 0
  MPoly shifted(Var v, int k) const;  // multiply by v^k (k<0 requires lowdeg>=−k unless v==VQ)

  bool operator==(const MPoly& o) const { return t_ == o.t_; }
  bool operator!=(const MPoly& o) const { return !(*this == o); }

  // Exact division: returns quotient iff o divides *this exactly.
  std::optional<MPoly> exact_div(const MPoly& o) const;

  // Evaluate with every used variable assigned.  q must be assigned a
  // nonzero value when negative q-exponents occur.
  BigRat eval(const std::array<std::optional<BigRat>, kNumVars>& pt) const;
  // Substitute values for a subset of the variables, keep the rest symbolic.
  MPoly eval_partial(const std::array<std::optional<BigRat>, kNumVars>& pt) const;

  std::string str() const;  // canonical text form

  // Content: gcd of coefficients, carrying the sign of the leading term.
  BigRat content() const;

  // Built from pre-sorted, zero-free term list (internal fast path).
  static MPoly from_sorted(std::vector<Term> ts);

 private:
  std::vector<Term> t_;
};

inline MPoly operator*(const BigRat& c, const MPoly& p) { return p * c; }

// GCD in Q[q^{±1}, u, v, w, a], normalized so that lowdeg_q = 0 and the
// leading coefficient is 1 (gcd over a field is unique up to units only).
MPoly mpoly_gcd(const MPoly& a, const MPoly& b);

}  // namespace qav
