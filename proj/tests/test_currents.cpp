#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qav/currents.hpp"
#include "qav/errors.hpp"

using namespace qav;

static RatFunc Q(int k) { return RatFunc::q_pow(k); }

TEST_CASE("Laurent expansions, closed-form oracles") {
  RatFunc u = RatFunc::var(VU);
  RatFunc geo = RatFunc(1) / (RatFunc(1) - u);
  // 1/(1-u) = 1 + u + u^2 + ... at 0
  auto z = expand_at_zero(geo, -2, 4);
  for (int m = -2; m <= 4; ++m) CHECK(z[size_t(m + 2)] == (m >= 0 ? RatFunc(1) : RatFunc()));
  // 1/(1-u) = -u^{-1} - u^{-2} - ... at infinity
  auto w = expand_at_inf(geo, -4, 2);
  for (int m = -4; m <= 2; ++m) CHECK(w[size_t(m + 4)] == (m <= -1 ? RatFunc(-1) : RatFunc()));
  // Laurent order: u^{-2}/(1 - q u) at 0 has coefficient q^{m+2} of u^m, m >= -2
  RatFunc f = u.pow(-2) / (RatFunc(1) - Q(1) * u);
  auto l = expand_at_zero(f, -4, 3);
  for (int m = -4; m <= 3; ++m) CHECK(l[size_t(m + 4)] == (m >= -2 ? Q(m + 2) : RatFunc()));
  // bilateral difference of the geometric kernel is the constant delta table
  for (int m = -3; m <= 3; ++m) {
    RatFunc d = expand_at_zero(geo, m, m)[0] - expand_at_inf(geo, m, m)[0];
    CHECK(d == RatFunc(1));
  }
  // polynomials expand to themselves and vanish at infinity below degree 0
  RatFunc p = Q(2) * u * u - RatFunc(3);
  CHECK(expand_at_zero(p, 0, 2)[2] == Q(2));
  CHECK(expand_at_inf(p, 0, 2)[2] == Q(2));
  CHECK(expand_at_inf(p, -1, -1)[0].is_zero());
}

TEST_CASE("current extraction shape and branching-node parity, n = 2") {
  std::array<std::optional<BigRat>, kNumVars> pt{};
  LOperator L = build_l_operator(2, RatFunc::var(VA), pt);
  GaussFactors G = gauss_decompose(L.block_at(RatFunc::var(VU)));
  CurrentSet cs = extract_currents(2, G, 2, pt);
  REQUIRE(cs.h.size() == 4);
  REQUIRE(cs.xplus.size() == 3);
  CHECK(cs.xplus[1].mode(0).rows() == 4);
  // branching-node currents have only even modes
  for (int m : {-1, 1}) {
    CHECK(cs.xplus[2].mode(m).is_zero());
    CHECK(cs.xminus[2].mode(m).is_zero());
  }
  // and a nonzero even mode (the u^{+-1} prefactor shifts the parity in)
  bool any = false;
  for (int m : {-2, 0, 2}) any = any || !cs.xplus[2].mode(m).is_zero();
  CHECK(any);
  CHECK_THROWS_AS(extract_currents(2, G, 0, pt), BadArgument);
}

TEST_CASE("currents suite, n = 2 symbolic") {
  Report r = check_currents_suite(2, Mode::symbolic, 2);
  for (const auto& c : r.checks)
    INFO(c.id, ": ", c.detail, " ", c.counterexample.value_or(""));
  CHECK(r.all_passed());
  CHECK(r.checks.size() >= 15);
}

TEST_CASE("currents suite, n = 3 grid") {
  Report r = check_currents_suite(3, Mode::grid, 2);
  CHECK(r.all_passed());
  CHECK(r.failures() == 0);
}
