#pragma once
#include <optional>
#include <string>

#include "qav/ratfunc.hpp"

namespace qav {

enum class Mode { symbolic, grid };

// Per-variable total-degree bounds for deterministic grid identity testing.
// For q (Laurent) the bound is on the exponent width deg - lowdeg, which is
// what controls the number of roots of q^m * p(q).
struct DegreeBound {
  std::array<int, kNumVars> b{};
  int& operator[](Var v) { return b[v]; }
  int operator[](Var v) const { return b[v]; }
  DegreeBound operator+(const DegreeBound& o) const;   // multiplication of values
  DegreeBound max_with(const DegreeBound& o) const;    // addition of values
  static DegreeBound of(const RatFunc& f);             // width(num)+width(den) per var
};

struct IdentityResult {
  bool equal = false;
  // Counterexample point (variable assignments) when equal == false.
  std::optional<std::string> counterexample;
  int grid_points = 0;  // number of evaluations performed (grid mode)
  int retries = 0;      // grid shifts forced by PoleAtSamplePoint
};

// Decide lhs == rhs.  Symbolic mode normalizes the difference.  Grid mode
// evaluates both sides on a deterministic tensor grid of (bound+1) points per
// used variable, at points offset + k + 3/2; a pole at a sample point shifts
// that variable's offset and restarts (up to retry_limit shifts).
IdentityResult identity_holds(const RatFunc& lhs, const RatFunc& rhs, Mode mode,
                              const DegreeBound& bound, int retry_limit = 32);

}  // namespace qav
