#include "qav/qcomb.hpp"

#include "qav/errors.hpp"

namespace qav {

RatFunc q_number_base(int k, const RatFunc& base) {
  if (k == 0) return RatFunc();
  int a = k > 0 ? k : -k;
  RatFunc acc;
  for (int j = 0; j < a; ++j) acc += base.pow(a - 1 - 2 * j);
  return k > 0 ? acc : -acc;
}

RatFunc q_number(int k) { return q_number_base(k, RatFunc::var(VQ)); }

RatFunc q_factorial(int k, const RatFunc& base) {
  if (k < 0) throw BadArgument("q_factorial of negative integer");
  RatFunc acc(1);
  for (int j = 2; j <= k; ++j) acc *= q_number_base(j, base);
  return acc;
}

RatFunc q_binomial(int k, int r, const RatFunc& base) {
  if (k < 0 || r < 0 || r > k) throw BadArgument("q_binomial requires 0 <= r <= k");
  // Product form avoids building large factorials just to cancel them.
  RatFunc acc(1);
  for (int j = 1; j <= r; ++j)
    acc = acc * q_number_base(k - r + j, base) / q_number_base(j, base);
  return acc;
}

}  // namespace qav
