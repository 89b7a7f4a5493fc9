#pragma once
#include "qav/cartan.hpp"
#include "qav/matrix.hpp"
#include "qav/report.hpp"

namespace qav {

// The vector representation on C^{2n} at level zero (q^{c/2} acts as 1).
// Generator images are N x N matrices with entries Laurent in q.
struct RepV {
  int n = 0;
  CartanDatum cartan;

  // Images of x^+_{i,k} / x^-_{i,k}.  At the branching node i = n the odd
  // modes are absent from the presentation; the image is the zero matrix.
  MatrixRF x_plus(int i, int k) const;
  MatrixRF x_minus(int i, int k) const;
  // Image of a_{i,k}, k != 0 (BadArgument otherwise); odd modes at i = n
  // raise OddMode.
  MatrixRF a_mode(int i, int k) const;
  // Image of k_i^{sign}, sign = +1 or -1.
  MatrixRF k_cartan(int i, int sign) const;
};

RepV build_repv(int n);

// Instantiates every displayed relation family of the Drinfeld presentation
// at q^c = 1 over modes |m|, |l| <= window and checks the generator images
// satisfy them.  Instances whose q-bracket argument is not an integer are
// reported as skipped, never silently passed.
Report check_drinfeld_relations(const RepV& rep, int window);

}  // namespace qav
