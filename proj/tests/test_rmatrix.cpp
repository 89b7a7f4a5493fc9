#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qav/errors.hpp"
#include "qav/rmatrix.hpp"

using namespace qav;

static RatFunc Q(int k) { return RatFunc::q_pow(k); }
static RatFunc U() { return RatFunc::var(VU); }

TEST_CASE("rbar entry oracles") {
  int n = 2, N = 4;
  TensorOp R = rbar(n);
  RatFunc u = U();
  RatFunc one(1);
  // e_{ii} (x) e_{jj} coefficient for i != j, j': (u-1)/(qu-q^{-1})
  RatFunc diag = (u - one) / (Q(1) * u - Q(-1));
  CHECK(R.mat.at(0 * N + 1, 0 * N + 1) == diag);  // |1,2> -> |1,2>
  // a_{ii}(u) band: (q^{-2}u - xi)(u-1)/((u-q^{-2})(u-xi)), xi = -q^{-4}
  RatFunc xi = -Q(-4);
  RatFunc aii = (Q(-2) * u - xi) * (u - one) / ((u - Q(-2)) * (u - xi));
  // e_{1'1'} (x) e_{11} = e_{44} (x) e_{11}: |4,1> -> |4,1>
  CHECK(R.mat.at(3 * N + 0, 3 * N + 0) == aii);
  // exchange band i > j: |j,i> -> |i,j| with (q-q^{-1})/(qu-q^{-1})
  CHECK(R.mat.at(1 * N + 0, 0 * N + 1) == (Q(1) - Q(-1)) / (Q(1) * u - Q(-1)));
  // |1,4>: the diag band is excluded (4 = 1'), so only the last band
  // contributes, via i = j = 4 (row (i',i) = (1,4)).
  RatFunc a44 = (Q(-2) * u - xi) * (u - one) / ((u - Q(-2)) * (u - xi));
  CHECK(R.mat.at(0 * N + 3, 0 * N + 3) == a44);
}

TEST_CASE("rbar(1) equals the displayed rank-1 block") {
  CHECK(rbar(1).mat == rank1_block_displayed().mat);
}

TEST_CASE("type-A corner") {
  TensorOp A = r_type_a(2);
  RatFunc u = U();
  CHECK(A.mat.at(0, 0) == RatFunc(1));
  // exchange at i < j: (q-q^{-1})u/(qu-q^{-1})
  CHECK(A.mat.at(0 * 2 + 1, 1 * 2 + 0) == (Q(1) - Q(-1)) * u / (Q(1) * u - Q(-1)));
  CHECK(r_type_a(1).mat == MatrixRF::identity(1));
}

TEST_CASE("rhat") {
  // rhat(n, 2) * (2-1)/(2q-q^{-1}) = rbar at u=2
  int n = 2;
  TensorOp Rh = rhat(n, RatFunc(rat(2)));
  RatFunc back = (RatFunc(2) - RatFunc(1)) / (RatFunc(2) * Q(1) - Q(-1));
  CHECK(Rh.mat.scaled(back) == rbar_at(n, RatFunc(rat(2))).mat);
  // u = q^{-2} is the removable point; |1,1> is annihilated there
  TensorOp K = rhat(n, Q(-2));
  int N = 2 * n;
  for (int r = 0; r < N * N; ++r) CHECK(K.mat.at(r, 0).is_zero());
  // u = xi = -q^{-4} is a genuine pole of the last band
  CHECK_THROWS_AS(rhat(2, -Q(-4)), NonRemovablePole);
  // u = 1 is a genuine pole of the prefactor
  CHECK_THROWS_AS(rhat(2, RatFunc(1)), NonRemovablePole);
}

TEST_CASE("ybe") {
  CHECK(check_ybe(1, Mode::symbolic).all_passed());
  CHECK(check_ybe(2, Mode::symbolic).all_passed());
}

TEST_CASE("unitarity and crossing") {
  Report r = check_unitarity_crossing(2, Mode::symbolic);
  CHECK(r.all_passed());
  CHECK(r.checks.size() == 2);
}

TEST_CASE("rank reduction") {
  Report r = check_reduction(2, Mode::symbolic);
  for (const auto& c : r.checks) {
    INFO(c.id, ": ", c.counterexample.value_or(""));
    CHECK(c.status == Status::pass);
  }
  CHECK(r.checks.size() == 2);
}

TEST_CASE("structure suite") {
  Report r = check_structure(2, Mode::symbolic);
  CHECK(r.all_passed());
}
