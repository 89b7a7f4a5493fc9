#pragma once
#include <vector>

#include "qav/gauss.hpp"
#include "qav/matrix.hpp"
#include "qav/report.hpp"

namespace qav {

// Exact Laurent expansion of a rational function of u around u = 0: the
// coefficients of u^m for lo <= m <= hi (zero below the order of f).
std::vector<RatFunc> expand_at_zero(const RatFunc& f, int lo, int hi);
// Same around u = infinity (expansion in u^{-1}).
std::vector<RatFunc> expand_at_inf(const RatFunc& f, int lo, int hi);

// Two-sided mode family of a current at level zero: the mode X_m is the
// coefficient of u^m in (expansion at 0) - (expansion at infinity) of the
// underlying rational Gauss entry, carrying the u^{+-1} prefactor at the
// branching node.  Only |m| <= window is asserted.
struct BilateralCurrent {
  int node = 0;
  int sign = +1;  // +1 for X^+, -1 for X^-
  int window = 0;
  std::vector<MatrixRF> modes;  // index m + window, m in [-window, window]
  // provenance: the two expansions the table was differenced from
  std::vector<MatrixRF> plus_coeff, minus_coeff;  // same indexing
  const MatrixRF& mode(int m) const { return modes[size_t(m + window)]; }
  bool in_window(int m) const { return m >= -window && m <= window; }
};

// Diagonal Gauss entry h_i with its two expansions.
struct HCurrent {
  int idx = 0;
  MatrixRF entry;  // rational in u
  std::vector<MatrixRF> plus_series, minus_series;  // coefficient of u^m at m + window
};

struct CurrentSet {
  int n = 0;
  int window = 0;
  std::array<std::optional<BigRat>, kNumVars> point{};
  std::vector<HCurrent> h;              // 1-based, size n + 2
  std::vector<BilateralCurrent> xplus;  // 1-based, size n + 1
  std::vector<BilateralCurrent> xminus;
};

// Build all currents from the Gauss factors of an evaluation L-operator.
CurrentSet extract_currents(int n, const GaussFactors& G, int window,
                            const std::array<std::optional<BigRat>, kNumVars>& point = {});

// Relation families (level zero, denominator-cleared, mode-wise).
Report check_hh_relations(const CurrentSet& cs);
Report check_hx_relations(const CurrentSet& cs);
Report check_xx_relations(const CurrentSet& cs);
Report check_xpxm_commutators(const CurrentSet& cs);
Report check_serre(const CurrentSet& cs);

// Everything above plus the extraction self-checks, on a freshly built
// evaluation L-operator (symbolic a for symbolic mode, numeric q, a for grid).
// `eval_param` overrides the evaluation parameter a with a fixed rational.
Report check_currents_suite(int n, Mode mode, int window,
                            const std::optional<BigRat>& eval_param = std::nullopt);

}  // namespace qav
