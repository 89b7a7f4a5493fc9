#include "qav/pit.hpp"

#include <algorithm>

#include "qav/errors.hpp"

namespace qav {

DegreeBound DegreeBound::operator+(const DegreeBound& o) const {
  DegreeBound r;
  for (int k = 0; k < kNumVars; ++k) r.b[k] = b[k] + o.b[k];
  return r;
}

DegreeBound DegreeBound::max_with(const DegreeBound& o) const {
  DegreeBound r;
  for (int k = 0; k < kNumVars; ++k) r.b[k] = std::max(b[k], o.b[k]);
  return r;
}

DegreeBound DegreeBound::of(const RatFunc& f) {
  DegreeBound r;
  for (int k = 0; k < kNumVars; ++k) {
    Var v = Var(k);
    r.b[k] = (f.num().deg(v) - f.num().lowdeg(v)) + (f.den().deg(v) - f.den().lowdeg(v));
  }
  return r;
}

namespace {

std::string point_str(const std::array<std::optional<BigRat>, kNumVars>& pt) {
  std::string s;
  for (int k = 0; k < kNumVars; ++k) {
    if (!pt[k]) continue;
    if (!s.empty()) s += ", ";
    s += std::string(var_name(Var(k))) + " = " + to_string(*pt[k]);
  }
  return s;
}

}  // namespace

IdentityResult identity_holds(const RatFunc& lhs, const RatFunc& rhs, Mode mode,
                              const DegreeBound& bound, int retry_limit) {
  IdentityResult res;
  if (mode == Mode::symbolic) {
    res.equal = (lhs - rhs).is_zero();
    if (!res.equal) res.counterexample = "symbolic difference nonzero";
    return res;
  }
  std::array<bool, kNumVars> used{};
  for (int k = 0; k < kNumVars; ++k)
    used[k] = lhs.uses(Var(k)) || rhs.uses(Var(k));
  std::array<int, kNumVars> offset{};
  for (int attempt = 0;; ++attempt) {
    std::array<int, kNumVars> idx{};
    bool done = false;
    bool restarted = false;
    while (!done) {
      std::array<std::optional<BigRat>, kNumVars> pt{};
      for (int k = 0; k < kNumVars; ++k)
        if (used[k]) pt[k] = BigRat(2 * (offset[k] + idx[k]) + 3, 2);  // offset + idx + 3/2
      PowerCache pc(pt);
      try {
        ++res.grid_points;
        if (lhs.eval(pc) != rhs.eval(pc)) {
          res.equal = false;
          res.counterexample = point_str(pt);
          return res;
        }
      } catch (const PoleAtSamplePoint&) {
        if (attempt >= retry_limit)
          throw PoleAtSamplePoint("retry limit exhausted at " + point_str(pt));
        // Deterministic restart: shift every used variable's grid by a
        // variable-dependent offset so the same collision cannot recur.
        ++res.retries;
        for (int k = 0; k < kNumVars; ++k)
          if (used[k]) offset[k] += 1 + k;
        restarted = true;
        break;
      }
      // odometer increment
      done = true;
      for (int k = 0; k < kNumVars; ++k) {
        if (!used[k]) continue;
        if (idx[k] < bound[Var(k)]) {
          ++idx[k];
          done = false;
          break;
        }
        idx[k] = 0;
      }
    }
    if (!restarted) break;
  }
  res.equal = true;
  return res;
}

}  // namespace qav
