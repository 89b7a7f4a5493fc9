#pragma once
#include "qav/ratfunc.hpp"

namespace qav {

// [k] = (q^k - q^{-k})/(q - q^{-1}), expanded to a Laurent polynomial in q.
RatFunc q_number(int k);

// [k] in an arbitrary base b: sum b^{k-1-2j}, j = 0..k-1 (antisymmetric in k).
RatFunc q_number_base(int k, const RatFunc& base);

// [k]! / ([r]! [k-r]!) in the given base; requires 0 <= r <= k.
RatFunc q_binomial(int k, int r, const RatFunc& base);

RatFunc q_factorial(int k, const RatFunc& base);

}  // namespace qav
