#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qav/cartan.hpp"
#include "qav/errors.hpp"

using namespace qav;

static RatFunc Q(int k) { return RatFunc::q_pow(k); }

TEST_CASE("folded Cartan matrix at n=2") {
  CartanDatum c = build_cartan(2);
  CHECK(c.A[1][1] == 2);
  CHECK(c.A[1][2] == -2);
  CHECK(c.A[2][1] == -1);
  CHECK(c.A[2][2] == 2);
  CHECK(c.d[1] == 1);
  CHECK(c.d[2] == 2);
  // Btilde = (diag(d) A)^{-1} = [[1,1/2],[1/2,1/2]]
  CHECK(c.Btilde[1][1] == BigRat(1));
  CHECK(c.Btilde[1][2] == rat(1, 2));
  CHECK(c.Btilde[2][1] == rat(1, 2));
  CHECK(c.Btilde[2][2] == rat(1, 2));
  CHECK(c.xi == -Q(-4));
  CHECK(c.o[1] == 1);
  CHECK(c.o[2] == -1);
}

TEST_CASE("Btilde actually inverts diag(d) A") {
  for (int n = 1; n <= 4; ++n) {
    CartanDatum c = build_cartan(n);
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j) {
        BigRat s(0);
        for (int k = 1; k <= n; ++k)
          s += BigRat(c.d[i]) * BigRat(c.A[i][k]) * c.Btilde[k][j];
        CHECK(s == BigRat(i == j ? 1 : 0));
      }
  }
}

TEST_CASE("index maps") {
  CartanDatum c = build_cartan(3);
  // bar = (2,1,0,0,-1,-2)
  std::vector<int> expect = {0, 2, 1, 0, 0, -1, -2};
  for (int i = 1; i <= 6; ++i) CHECK(c.bar[i] == expect[i]);
  for (int i = 1; i <= 6; ++i) CHECK(c.prime(c.prime(i)) == i);
  CHECK(c.prime(1) == 6);
  // o alternates and ends at o(n) = -1
  CHECK(c.o[3] == -1);
  CHECK(c.o[2] == 1);
  CHECK(c.o[1] == -1);
  // pairing: (eps_i, alpha_j) = delta_ij - delta_{i,j+1}, doubled at j=n
  CHECK(c.eps_pairing(1, 1) == 1);
  CHECK(c.eps_pairing(2, 1) == -1);
  CHECK(c.eps_pairing(3, 1) == 0);
  CHECK(c.eps_pairing(3, 3) == 2);
  CHECK(c.eps_pairing(2, 3) == 0);
  CHECK_THROWS_AS(c.eps_pairing(0, 1), BadIndex);
}

TEST_CASE("zmatrix oracle entries at n=2") {
  // odd k: z_{11} = [1][1]/[2] in base q^k
  ZMatrix z1 = zmatrix(2, 1);
  CHECK(z1.z[1][1] == RatFunc(1) / (Q(1) + Q(-1)));
  // even k: z_{nn} = [n]_{q^k} / [2]_{q^{nk}}
  ZMatrix z2 = zmatrix(2, 2);
  CHECK(z2.z[2][2] == (Q(2) + Q(-2)) / (Q(4) + Q(-4)));
  // even k, i=n > j: (-1)^{k/2} 2 [j]_{q^k} / [2]_{q^{nk}}
  CHECK(z2.z[2][1] == RatFunc(-2) / (Q(4) + Q(-4)));
  // i < j filled by z_{ij} d_j = z_{ji} d_i
  CHECK(z2.z[1][2] * RatFunc(2) == z2.z[2][1]);
  CHECK_THROWS_AS(zmatrix(0, 1), BadArgument);
  CHECK_THROWS_AS(zmatrix(2, 0), BadArgument);
}
