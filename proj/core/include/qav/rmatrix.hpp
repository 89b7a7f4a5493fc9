#pragma once
#include "qav/matrix.hpp"
#include "qav/report.hpp"

namespace qav {

// The normalized rational R-matrix on C^{2n} (x) C^{2n} with spectral
// variable u: five summand bands (identity, diagonal, two exchange bands,
// and the a_{ij} band on e_{i'j'} (x) e_{ij} with denominator
// (u - q^{-2})(u - xi)), xi = -q^{-2n}.
TensorOp rbar(int n);
// Same with the spectral variable replaced by an arbitrary argument.
TensorOp rbar_at(int n, const RatFunc& arg);

// (uq - q^{-1})/(u - 1) * rbar(u) evaluated at u = at.  The zero of the
// prefactor cancels the simple pole of the last band at u = q^{-2}, so that
// point is admitted (exact limit); any other pole raises NonRemovablePole.
TensorOp rhat(int n, const RatFunc& at);

// The rank-1 block in its displayed two-index form, built on C^2 (indices
// relabeled (n, n+1) -> (1, 2)).
TensorOp rank1_block_displayed();

// Four-band type-A R-matrix on C^size (x) C^size.
TensorOp r_type_a(int size);

// Identity suites.  Reports use stable check ids.
Report check_ybe(int n, Mode mode);
Report check_unitarity_crossing(int n, Mode mode);
// Both rank-reduction identities (ket and bra forms) over all basis pairs
// |1,i,1,j>, 2 <= i,j <= 2n-1, with the rank-(n-1) matrix taken at the same
// spectral argument and xi^{[n-1]} = -q^{-2(n-1)}.
Report check_reduction(int n, Mode mode);
// rbar(1) == displayed rank-1 block; the type-A corner; the kernel vector of
// rhat at q^{-2}.
Report check_structure(int n, Mode mode);

}  // namespace qav
