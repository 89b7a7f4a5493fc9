#pragma once
#include <vector>

#include "qav/cartan.hpp"
#include "qav/pit.hpp"
#include "qav/ratfunc.hpp"

namespace qav {

// Dense rectangular matrix over RatFunc.  Entry indices are 0-based; the
// 1-based index conventions of the displayed formulas live in the callers.
class MatrixRF {
 public:
  MatrixRF() = default;
  MatrixRF(int rows, int cols) : rows_(rows), cols_(cols), e_(size_t(rows) * cols) {}
  static MatrixRF identity(int size);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  RatFunc& at(int r, int c) { return e_[size_t(r) * cols_ + c]; }
  const RatFunc& at(int r, int c) const { return e_[size_t(r) * cols_ + c]; }

  MatrixRF operator+(const MatrixRF& o) const;
  MatrixRF operator-(const MatrixRF& o) const;
  MatrixRF operator*(const MatrixRF& o) const;  // zero-skipping dense product
  MatrixRF scaled(const RatFunc& c) const;
  bool operator==(const MatrixRF& o) const;
  bool operator!=(const MatrixRF& o) const { return !(*this == o); }
  bool is_zero() const;
  bool is_scalar(RatFunc* value = nullptr) const;  // multiple of the identity

  MatrixRF transpose_plain() const;
  MatrixRF substitute(Var v, const RatFunc& val) const;
  MatrixRF eval_partial(const std::array<std::optional<BigRat>, kNumVars>& pt) const;

  // Location (r, c) of the first entry where *this and o differ, or nullopt.
  std::optional<std::pair<int, int>> first_difference(const MatrixRF& o) const;

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<RatFunc> e_;
};

// Operator on (C^N)^{tensor m}, N = 2n.  Factor 1 is the most significant
// tensor slot: basis vector |i_1,...,i_m> has flat index
// sum (i_k - 1) N^(m-k).
struct TensorOp {
  int n = 0;  // rank (N = 2n)
  int m = 0;  // number of tensor factors
  MatrixRF mat;
  int N() const { return 2 * n; }
  long dim() const;
};

TensorOp tensor_identity(int n, int m);
// Matrix unit e_{ij} (1-based) on C^{2n}.
TensorOp unit(int i, int j, int n);
// Kronecker product placing a's factors before b's.
TensorOp kron(const TensorOp& a, const TensorOp& b);
// Place op's tensor slots at the given (1-based, distinct) factor positions
// of an m = total operator, identity elsewhere.
TensorOp embed(const TensorOp& op, const std::vector<int>& positions, int total);
// Partial transpose on one factor in the priming convention e_{ij} -> e_{j'i'}.
TensorOp partial_transpose(const TensorOp& op, int factor);
// diag(q^{bar(1)}, ..., q^{bar(2n)}).
TensorOp dmatrix(int n);
// Compression of op to the band [lo, N+1-lo] in every factor.  The band is
// symmetric, so the result is again a TensorOp of rank n - lo + 1.
TensorOp restrict_band(const TensorOp& op, int lo);
// The flip P = sum e_{ij} (x) e_{ji}.
TensorOp flip(int n);

// --- numeric (grid) path -------------------------------------------------

// Sparse matrix over BigRat, row-major adjacency.
struct NumSparse {
  int rows = 0, cols = 0;
  std::vector<std::vector<std::pair<int, BigRat>>> row;  // (col, value), sorted
  static NumSparse identity(int size);
  NumSparse operator*(const NumSparse& o) const;
  bool operator==(const NumSparse& o) const;
  NumSparse scaled(const BigRat& c) const;
  // y = (*this) x for sparse vectors (index -> value, sorted).
  std::vector<std::pair<int, BigRat>> apply(
      const std::vector<std::pair<int, BigRat>>& x) const;
  // y^T = x^T (*this)
  std::vector<std::pair<int, BigRat>> apply_left(
      const std::vector<std::pair<int, BigRat>>& x) const;
};

NumSparse eval_matrix(const MatrixRF& m, const PowerCache& pc);
// Numeric analogue of embed() for a two-factor operator.
NumSparse num_embed(const NumSparse& two_factor, int N, const std::vector<int>& positions,
                    int total);

// --- product identity checking -------------------------------------------

// One side of a product identity: scalar * F1 * F2 * ... * Fk.
struct ProductSide {
  RatFunc scalar{1};
  std::vector<MatrixRF> factors;
};

// Degree bound (per variable) sufficient to clear every denominator of the
// matrix: max entry numerator width plus the widths of the distinct entry
// denominators (their product is a multiple of the lcm).
DegreeBound matrix_clear_bound(const MatrixRF& m);

// Degree bound for the polynomial identity obtained by clearing the
// denominators of  ls * L1...Lk = rs * R1...Rm.  When both sides need the
// same clearing multiplier (common situation: the same factor matrices appear
// on both sides in a different order) the bound is the larger of the two
// cleared product degrees; otherwise each side additionally absorbs the other
// side's clearing multiplier.
DegreeBound cleared_product_bound(const ProductSide& lhs, const ProductSide& rhs);

// Decide lhs == rhs where each side is a matrix product.  Symbolic mode
// multiplies out over RatFunc; grid mode evaluates the factors on a
// deterministic tensor grid dominating the cleared degrees and multiplies
// numerically (PoleAtSamplePoint shifts the grid and restarts).
IdentityResult product_identity_holds(const ProductSide& lhs, const ProductSide& rhs,
                                      Mode mode, int retry_limit = 32);

}  // namespace qav
