#pragma once
#include <gmpxx.h>

#include <string>

namespace qav {

// Arbitrary-precision rational, always stored canonically
// (gcd(|num|,den)=1, den>0).  mpq_class already maintains that invariant
// provided canonicalize() runs after raw construction; all arithmetic on
// mpq_class keeps results canonical.
using BigRat = mpq_class;

inline BigRat rat(long num, long den = 1) {
  BigRat r(num, den);
  r.canonicalize();
  return r;
}

inline std::string to_string(const BigRat& r) { return r.get_str(); }

// r^k for integer k (negative allowed when r != 0).
BigRat pow_rat(const BigRat& r, long k);

}  // namespace qav
