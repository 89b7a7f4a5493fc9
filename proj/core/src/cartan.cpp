#include "qav/cartan.hpp"

#include "qav/errors.hpp"

namespace qav {

int CartanDatum::eps_pairing(int i, int j) const {
  if (i < 1 || i > n || j < 1 || j > n) throw BadIndex("eps_pairing index");
  if (j == n) return i == n ? 2 : 0;
  return (i == j ? 1 : 0) - (i == j + 1 ? 1 : 0);
}

CartanDatum build_cartan(int n) {
  if (n < 1) throw BadArgument("rank must be >= 1");
  CartanDatum c;
  c.n = n;
  c.N = 2 * n;

  // Fold the sl_{2n} Cartan matrix A' (size 2n-1) under sigma(i) = 2n-i:
  //   A_{ij} = 2 (A'_{ij} + A'_{sigma(i) j}) / (A'_{ii} + A'_{sigma(i) i}).
  auto ap = [n](int i, int j) -> int {
    if (i < 1 || i > 2 * n - 1 || j < 1 || j > 2 * n - 1) return 0;
    if (i == j) return 2;
    if (i == j + 1 || j == i + 1) return -1;
    return 0;
  };
  c.A.assign(n + 1, std::vector<int>(n + 1, 0));
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      int num = ap(i, j) + ap(2 * n - i, j);
      int den = ap(i, i) + ap(2 * n - i, i);
      if ((2 * num) % den != 0) throw std::logic_error("folding not integral");
      c.A[i][j] = 2 * num / den;
    }

  c.d.assign(n + 1, 1);
  c.d[n] = 2;

  // Inverse of diag(d) A, given in closed form.
  c.Btilde.assign(n + 1, std::vector<BigRat>(n + 1, BigRat(0)));
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      int a = std::min(i, j), b = std::max(i, j);  // value depends on (min, max)
      if (b == n && a == n)
        c.Btilde[i][j] = rat(n, 4);
      else if (b == n)
        c.Btilde[i][j] = rat(a, 2);
      else
        c.Btilde[i][j] = BigRat(a);
    }

  c.xi = -RatFunc::q_pow(-2 * n);

  c.o.assign(n + 1, 0);
  for (int i = 1; i <= n; ++i) c.o[i] = ((n + 1 - i) % 2 == 0) ? 1 : -1;

  c.bar.assign(c.N + 1, 0);
  for (int i = 1; i <= c.N; ++i) c.bar[i] = (i <= n) ? n - i : n + 1 - i;

  return c;
}

ZMatrix zmatrix(int n, int k) {
  if (n < 1 || k < 1) throw BadArgument("zmatrix requires n >= 1, k >= 1");
  ZMatrix zm;
  zm.n = n;
  zm.k = k;
  zm.z.assign(n + 1, std::vector<RatFunc>(n + 1));
  RatFunc qk = RatFunc::q_pow(k);
  RatFunc qnk = RatFunc::q_pow(n * k);
  std::vector<int> d(n + 1, 1);
  d[n] = 2;
  // i >= j: the four displayed cases.
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= i; ++j) {
      RatFunc v;
      if (k % 2 == 1) {
        v = q_number_base(n - i, qk) * q_number_base(j, qk) / q_number_base(n, qk);
      } else if (i == n && j == n) {
        v = q_number_base(n, qk) / q_number_base(2, qnk);
      } else if (i == n) {
        v = RatFunc(2 * ((k / 2) % 2 == 0 ? 1 : -1)) * q_number_base(j, qk) /
            q_number_base(2, qnk);
      } else {
        v = q_number_base(2, RatFunc::q_pow((n - i) * k)) * q_number_base(j, qk) /
            q_number_base(2, qnk);
      }
      zm.z[i][j] = v;
    }
  // i < j by the symmetry z_{ij} d_j = z_{ji} d_i.
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      zm.z[i][j] = zm.z[j][i] * RatFunc(rat(d[i], d[j]));
  return zm;
}

Report check_cartan_suite(int n) {
  if (n < 1) throw BadArgument("rank must be >= 1");
  Report rep;
  rep.suite = "cartan";
  rep.params["n"] = std::to_string(n);
  std::string sn = ".n" + std::to_string(n);
  CartanDatum c = build_cartan(n);

  auto family = [&](const std::string& id, const std::string& what, auto&& body) {
    std::optional<std::string> bad;
    int count = 0;
    body([&](bool ok, const std::string& inst) {
      ++count;
      if (!ok && !bad) bad = inst;
    });
    if (bad)
      rep.fail(id, what, *bad);
    else
      rep.pass(id, what + ", " + std::to_string(count) + " instances");
  };

  family("cartan.symm" + sn, "d_i A_ij = d_j A_ji", [&](auto rec) {
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j)
        rec(c.d[i] * c.A[i][j] == c.d[j] * c.A[j][i],
            "(" + std::to_string(i) + "," + std::to_string(j) + ")");
  });
  family("cartan.btilde" + sn, "Btilde (diag(d) A) = identity", [&](auto rec) {
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j) {
        BigRat s(0);
        for (int k = 1; k <= n; ++k) s += c.Btilde[i][k] * c.d[k] * c.A[k][j];
        rec(s == BigRat(i == j ? 1 : 0),
            "(" + std::to_string(i) + "," + std::to_string(j) + ")");
      }
  });
  family("cartan.signs" + sn, "o alternates on adjacent nodes, o(n) = -1",
         [&](auto rec) {
           rec(c.o[n] == -1, "o(n)");
           for (int i = 1; i <= n; ++i)
             for (int j = 1; j <= n; ++j)
               if (c.A[i][j] < 0)
                 rec(c.o[i] == -c.o[j],
                     "(" + std::to_string(i) + "," + std::to_string(j) + ")");
         });
  family("cartan.bar" + sn, "bar pattern and involution symmetry", [&](auto rec) {
    for (int i = 1; i <= c.N; ++i) {
      rec(c.bar[i] == (i <= n ? n - i : n + 1 - i), "bar " + std::to_string(i));
      rec(c.bar[c.prime(i)] == -c.bar[i], "bar prime " + std::to_string(i));
      rec(c.prime(c.prime(i)) == i, "prime involution " + std::to_string(i));
    }
  });
  if (c.xi == -RatFunc::q_pow(-2 * n))
    rep.pass("cartan.xi" + sn, "xi = -q^{-2n}");
  else
    rep.fail("cartan.xi" + sn, "xi = -q^{-2n}", "value mismatch");
  family("cartan.eps" + sn, "eps pairing matches the symplectic convention",
         [&](auto rec) {
           for (int i = 1; i <= n; ++i)
             for (int j = 1; j <= n; ++j) {
               int want = j == n ? 2 * (i == n) : (i == j) - (i == j + 1);
               rec(c.eps_pairing(i, j) == want,
                   "(" + std::to_string(i) + "," + std::to_string(j) + ")");
             }
         });
  family("cartan.zsym" + sn, "z^k_ij d_j = z^k_ji d_i for k <= 6", [&](auto rec) {
    for (int k = 1; k <= 6; ++k) {
      ZMatrix zm = zmatrix(n, k);
      for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
          rec(zm.z[i][j] * RatFunc(BigRat(c.d[j])) ==
                  zm.z[j][i] * RatFunc(BigRat(c.d[i])),
              "k=" + std::to_string(k) + " (" + std::to_string(i) + "," +
                  std::to_string(j) + ")");
    }
  });

  rep.sort_checks();
  return rep;
}

}  // namespace qav
