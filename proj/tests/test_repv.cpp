#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qav/errors.hpp"
#include "qav/repv.hpp"

using namespace qav;

static RatFunc Q(int k) { return RatFunc::q_pow(k); }

TEST_CASE("generator image oracles at n=2") {
  RepV rep = build_repv(2);
  int N = 4;
  // x^+_{1,0} = -e_{21} + e_{1',2'} = -e_{21} + e_{43}
  MatrixRF x = rep.x_plus(1, 0);
  CHECK(x.at(1, 0) == RatFunc(-1));
  CHECK(x.at(3, 2) == RatFunc(1));
  // k_n = q^2 e_{n+1,n+1} + q^{-2} e_{nn} + rest identity
  MatrixRF kn = rep.k_cartan(2, 1);
  CHECK(kn.at(2, 2) == Q(2));
  CHECK(kn.at(1, 1) == Q(-2));
  CHECK(kn.at(0, 0) == RatFunc(1));
  CHECK(kn.at(3, 3) == RatFunc(1));
  // k_1 = q(e_22 + e_{1'1'}) + q^{-1}(e_11 + e_{2'2'})
  MatrixRF k1 = rep.k_cartan(1, 1);
  CHECK(k1.at(1, 1) == Q(1));
  CHECK(k1.at(3, 3) == Q(1));
  CHECK(k1.at(0, 0) == Q(-1));
  CHECK(k1.at(2, 2) == Q(-1));
  // parity and mode errors
  CHECK(rep.x_plus(2, 1).is_zero());
  CHECK(rep.x_minus(2, -3).is_zero());
  CHECK_THROWS_AS(rep.a_mode(2, 1), OddMode);
  CHECK_THROWS_AS(rep.a_mode(1, 0), BadArgument);
  CHECK_THROWS_AS(build_repv(1), BadArgument);
  // x^+_{n,0} = -e_{n+1,n}
  CHECK(rep.x_plus(2, 0).at(2, 1) == RatFunc(-1));
  (void)N;
}

TEST_CASE("spot relations at n=2") {
  RepV rep = build_repv(2);
  // k_n x^+_{n,0} k_n^{-1} = q^4 x^+_{n,0} (q_n^{A_nn} = (q^2)^2)
  MatrixRF lhs = rep.k_cartan(2, 1) * rep.x_plus(2, 0) * rep.k_cartan(2, -1);
  CHECK(lhs == rep.x_plus(2, 0).scaled(Q(4)));
  // [x^+_{1,0}, x^-_{1,0}] = (k_1 - k_1^{-1})/(q - q^{-1})
  MatrixRF comm = rep.x_plus(1, 0) * rep.x_minus(1, 0) -
                  rep.x_minus(1, 0) * rep.x_plus(1, 0);
  MatrixRF expect =
      (rep.k_cartan(1, 1) - rep.k_cartan(1, -1)).scaled((Q(1) - Q(-1)).inverse());
  CHECK(comm == expect);
}

TEST_CASE("full relation suite n=2 window 2") {
  Report r = check_drinfeld_relations(build_repv(2), 2);
  for (const auto& c : r.checks) {
    INFO(c.id, " ", c.detail, " ", c.counterexample.value_or(""));
    CHECK(c.status != Status::fail);
  }
  // every family present
  CHECK(r.checks.size() >= 10);
}

TEST_CASE("full relation suite n=3 window 1") {
  Report r = check_drinfeld_relations(build_repv(3), 1);
  for (const auto& c : r.checks) {
    INFO(c.id, " ", c.detail, " ", c.counterexample.value_or(""));
    CHECK(c.status != Status::fail);
  }
}
