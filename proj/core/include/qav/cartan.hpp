#pragma once
#include <vector>

#include "qav/qcomb.hpp"
#include "qav/ratfunc.hpp"
#include "qav/report.hpp"

namespace qav {

// Rank-indexed combinatorial data for the folded root system: the C_n Cartan
// matrix obtained by folding sl_{2n} under i -> 2n-i, its symmetrizers, the
// inverse symmetrized matrix, index involutions and sign data.
// All containers are 1-based (slot 0 unused) to match the index conventions
// used throughout the formulas.
struct CartanDatum {
  int n = 0;  // rank
  int N = 0;  // 2n, dimension of the vector module
  std::vector<std::vector<int>> A;       // n x n folded Cartan matrix
  std::vector<int> d;                    // symmetrizers (1,...,1,2)
  std::vector<std::vector<BigRat>> Btilde;  // (diag(d) A)^{-1}
  RatFunc xi;                            // -q^{-2n}
  std::vector<int> o;                    // alternating sign map, o(n) = -1
  std::vector<int> bar;                  // (n-1,...,1,0,0,-1,...,-(n-1))
  int prime(int i) const { return N + 1 - i; }
  // Pairing (eps_i, alpha_j) in the symplectic weight convention:
  // delta_{ij} - delta_{i,j+1} for j < n, and 2*delta_{in} for j = n.
  int eps_pairing(int i, int j) const;
};

CartanDatum build_cartan(int n);

// The matrices Z^k entering the diagonal factor of the universal R-matrix.
// Entries for i >= j follow the four-case formula; entries for i < j are
// extended by the symmetry z^k_{ij} d_j = z^k_{ji} d_i (the literal formula
// does not satisfy its own symmetry note there).
struct ZMatrix {
  int n = 0;
  int k = 0;
  std::vector<std::vector<RatFunc>> z;  // 1-based n x n
};

ZMatrix zmatrix(int n, int k);

// Structural invariants of the combinatorial data: symmetrizability, the
// closed-form inverse, sign/involution bookkeeping, and the Z^k symmetry.
Report check_cartan_suite(int n);

}  // namespace qav
