#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qav/matrix.hpp"

using namespace qav;

static RatFunc Q(int k) { return RatFunc::q_pow(k); }

TEST_CASE("matrix units") {
  TensorOp e11 = unit(1, 1, 1);
  CHECK(e11.mat.at(0, 0) == RatFunc(1));
  CHECK(e11.mat.at(1, 1).is_zero());
  TensorOp e12 = unit(1, 2, 1);
  TensorOp e21 = unit(2, 1, 1);
  CHECK(e12.mat * e21.mat == e11.mat);
  // trace of e_ii
  RatFunc tr;
  for (int r = 0; r < 2; ++r) tr += e11.mat.at(r, r);
  CHECK(tr == RatFunc(1));
}

TEST_CASE("kron and embed index conventions") {
  int n = 1;
  TensorOp e12 = unit(1, 2, n);
  TensorOp e21 = unit(2, 1, n);
  // factor 1 most significant: e12 (x) e21 sends |2,1> to |1,2>
  TensorOp k = kron(e12, e21);
  CHECK(k.mat.at(0 * 2 + 1, 1 * 2 + 0) == RatFunc(1));
  // embed at [1,3] of 3 leaves the middle slot alone
  TensorOp emb = embed(k, {1, 3}, 3);
  CHECK(emb.m == 3);
  for (int mid = 0; mid < 2; ++mid)
    CHECK(emb.mat.at((0 * 2 + mid) * 2 + 1, (1 * 2 + mid) * 2 + 0) == RatFunc(1));
  // embed(e11, [3], 3) = I (x) I (x) e11
  TensorOp d = embed(unit(1, 1, n), {3}, 3);
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) {
      CHECK(d.mat.at((a * 2 + b) * 2 + 0, (a * 2 + b) * 2 + 0) == RatFunc(1));
      CHECK(d.mat.at((a * 2 + b) * 2 + 1, (a * 2 + b) * 2 + 1).is_zero());
    }
  // embed with swapped positions transposes the roles of the two slots
  TensorOp fwd = embed(k, {2, 1}, 2);
  CHECK(fwd.mat == kron(e21, e12).mat);
}

TEST_CASE("flip") {
  for (int n = 1; n <= 2; ++n) {
    TensorOp P = flip(n);
    int N = 2 * n;
    CHECK(P.mat * P.mat == MatrixRF::identity(N * N));
    // P |a,b> = |b,a>
    for (int a = 0; a < N; ++a)
      for (int b = 0; b < N; ++b) CHECK(P.mat.at(b * N + a, a * N + b) == RatFunc(1));
  }
}

TEST_CASE("partial transpose in the priming convention") {
  int n = 1;  // prime(i) = 3 - i
  TensorOp op = kron(unit(1, 2, n), unit(1, 1, n));
  TensorOp pt = partial_transpose(op, 1);
  // e_{ij} -> e_{j'i'} with i' = 3-i: e_{12} maps to row 2' = 1,
  // column 1' = 2, so it is a fixed point here.
  CHECK(pt.mat == kron(unit(1, 2, n), unit(1, 1, n)).mat);
  // e_{11} -> e_{1'1'} = e_{22}
  TensorOp op2 = kron(unit(1, 1, n), unit(1, 2, n));
  CHECK(partial_transpose(op2, 1).mat == kron(unit(2, 2, n), unit(1, 2, n)).mat);
  // involution
  CHECK(partial_transpose(pt, 1).mat == op.mat);
  CHECK(partial_transpose(partial_transpose(op2, 2), 2).mat == op2.mat);
}

TEST_CASE("dmatrix") {
  TensorOp d2 = dmatrix(2);
  std::vector<int> bar2 = {1, 0, 0, -1};
  for (int i = 0; i < 4; ++i) CHECK(d2.mat.at(i, i) == Q(bar2[i]));
  TensorOp d3 = dmatrix(3);
  std::vector<int> bar3 = {2, 1, 0, 0, -1, -2};
  for (int i = 0; i < 6; ++i) CHECK(d3.mat.at(i, i) == Q(bar3[i]));
}

TEST_CASE("band restriction") {
  // restrict(I, band) = smaller I
  TensorOp id = tensor_identity(2, 2);
  TensorOp r = restrict_band(id, 2);
  CHECK(r.n == 1);
  CHECK(r.mat == MatrixRF::identity(4));
  // restrict(e_22 at n=2, band [2,3]) = e_11 of size 2
  TensorOp e = restrict_band(unit(2, 2, 2), 2);
  CHECK(e.mat == unit(1, 1, 1).mat);
}

TEST_CASE("numeric sparse path agrees with symbolic") {
  std::array<std::optional<BigRat>, kNumVars> pt{};
  pt[VQ] = rat(5, 2);
  pt[VU] = rat(7, 3);
  PowerCache pc(pt);
  MatrixRF m(2, 2);
  m.at(0, 0) = Q(2);
  m.at(0, 1) = RatFunc(1) / (RatFunc::var(VU) - RatFunc(1));
  m.at(1, 0) = RatFunc(3);
  MatrixRF p = m * m;
  NumSparse nm = eval_matrix(m, pc);
  NumSparse np = eval_matrix(p, pc);
  CHECK(nm * nm == np);
  // num_embed matches symbolic embed
  TensorOp two = kron(unit(1, 2, 1), unit(2, 1, 1));
  NumSparse lhs = num_embed(eval_matrix(two.mat, pc), 2, {1, 3}, 3);
  NumSparse rhs = eval_matrix(embed(two, {1, 3}, 3).mat, pc);
  CHECK(lhs == rhs);
}

TEST_CASE("product identity checker") {
  int n = 1;
  TensorOp P = flip(n);
  ProductSide lhs, rhs;
  lhs.factors = {P.mat, P.mat};
  rhs.factors = {MatrixRF::identity(4)};
  CHECK(product_identity_holds(lhs, rhs, Mode::symbolic).equal);
  CHECK(product_identity_holds(lhs, rhs, Mode::grid).equal);
  ProductSide bad;
  bad.scalar = Q(1);
  bad.factors = {MatrixRF::identity(4)};
  auto r = product_identity_holds(lhs, bad, Mode::symbolic);
  CHECK(!r.equal);
  CHECK(r.counterexample.has_value());
  CHECK(!product_identity_holds(lhs, bad, Mode::grid).equal);
}
