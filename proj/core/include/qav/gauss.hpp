#pragma once
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "qav/matrix.hpp"
#include "qav/report.hpp"
#include "qav/rmatrix.hpp"

namespace qav {

// Square matrix over the noncommutative ring of N x N MatrixRF blocks.
// Block indices are 1-based to match the displayed formulas.
struct BlockMat {
  int k = 0;  // number of block rows/cols
  int N = 0;  // inner (module) dimension
  std::vector<MatrixRF> b;
  BlockMat() = default;
  BlockMat(int k, int N);
  MatrixRF& at(int i, int j) { return b[size_t(i - 1) * k + (j - 1)]; }
  const MatrixRF& at(int i, int j) const { return b[size_t(i - 1) * k + (j - 1)]; }
  BlockMat operator*(const BlockMat& o) const;
  bool operator==(const BlockMat& o) const;
  BlockMat substitute(Var v, const RatFunc& val) const;
};

// Exact inverse via Gauss-Jordan elimination over the entry field; throws
// SingularComplement when the matrix is singular.
MatrixRF mat_inverse(const MatrixRF& m);

// |M|_{ij} = m_ij - r_i^j (M^{ij})^{-1} c_j^i with the complement inverted
// after flattening the blocks (entries commute inside a block; the
// noncommutativity lives at the block level).
MatrixRF quasideterminant(const BlockMat& m, int i, int j);

// Evaluation L-operator L(u) = Rbar(u/a): auxiliary space = tensor factor 1,
// module space = factor 2, spectral variable u symbolic.  q (and anything
// else) may be specialized numerically through `point` for grid work.
struct LOperator {
  int n = 0;
  RatFunc a_param;
  TensorOp body;                                        // m = 2
  std::array<std::optional<BigRat>, kNumVars> point{};  // numeric specializations
  MatrixRF entry(int i, int j) const;                   // l_ij(u), 1-based
  MatrixRF entry_at(int i, int j, const RatFunc& arg) const;
  BlockMat block_at(const RatFunc& arg) const;          // full L(arg)
};

LOperator build_l_operator(int n, const RatFunc& a_param,
                           const std::array<std::optional<BigRat>, kNumVars>& point = {});

// Gauss factors of a k x k block matrix: L = F H E with F lower-unitriangular,
// H diagonal, E upper-unitriangular; entries are functions of the symbolic u.
struct GaussFactors {
  int k = 0;
  int N = 0;
  std::vector<MatrixRF> h;                       // 1-based, size k+1
  std::map<std::pair<int, int>, MatrixRF> e;     // e[{i,j}], i < j
  std::map<std::pair<int, int>, MatrixRF> f;     // f[{j,i}], j > i
  MatrixRF h_at(int i, const RatFunc& arg) const;
  MatrixRF e_at(int i, int j, const RatFunc& arg) const;
  MatrixRF f_at(int j, int i, const RatFunc& arg) const;
  BlockMat fmat() const;
  BlockMat hmat() const;
  BlockMat emat() const;
};

GaussFactors gauss_decompose(const BlockMat& L);

// Matrix element <rows| Rhat-chain L_1(arg) L_2(arg q^2) ... L_k(arg q^{2k-2})
// |cols> as a module matrix (the k-fold quantum minor).
MatrixRF quantum_minor(const LOperator& L, const std::vector<int>& rows,
                       const std::vector<int>& cols, const RatFunc& arg);

// psi_m image: block matrix of bordered quasideterminants of L(u) over
// indices m+1 <= i,j <= (m+1)', relabelled to 1..2(n-m).
BlockMat psi_embed(const BlockMat& L, int m);

// Identity suites.  `mode` selects fully symbolic work (intended for n = 2)
// or a deterministic numeric specialization of q and a with u, v symbolic.
// `eval_param` overrides the evaluation parameter a with a fixed rational.
Report check_gauss_suite(int n, Mode mode,
                         const std::optional<BigRat>& eval_param = std::nullopt);
Report check_central_suite(int n, Mode mode,
                           const std::optional<BigRat>& eval_param = std::nullopt);
// The psi-embedding subset (sub-RTT, corner commutation, factor consistency)
// on its own, for the CLI's embed suite.
Report check_embed_suite(int n, Mode mode,
                         const std::optional<BigRat>& eval_param = std::nullopt);

}  // namespace qav
