// Acceptance gate: one line per criterion, exit 0 iff all pass.
#include <chrono>
#include <cstdio>
#include <string>

#include "qav/cartan.hpp"
#include "qav/currents.hpp"
#include "qav/gauss.hpp"
#include "qav/repv.hpp"
#include "qav/rmatrix.hpp"
#include "qav/series.hpp"

using namespace qav;

namespace {

int failures_total = 0;

void line(int num, const std::string& name, bool ok, const std::string& detail) {
  printf("criterion %2d %-28s %s  %s\n", num, name.c_str(), ok ? "PASS" : "FAIL",
         detail.c_str());
  if (!ok) ++failures_total;
}

struct Timed {
  Report rep;
  long ms = 0;
};

template <typename F>
Timed timed(F&& f) {
  auto t0 = std::chrono::steady_clock::now();
  Timed t;
  t.rep = f();
  t.ms = (long)std::chrono::duration_cast<std::chrono::milliseconds>(
             std::chrono::steady_clock::now() - t0)
             .count();
  return t;
}

bool has_pass(const Report& r, const std::string& id) {
  for (const auto& c : r.checks)
    if (c.id == id) return c.status == Status::pass;
  return false;
}

std::string summarize(const Report& r, long ms) {
  size_t f = r.failures();
  return std::to_string(r.checks.size()) + " checks, " + std::to_string(f) +
         " failed, " + std::to_string(ms) + " ms";
}

}  // namespace

int main() {
  auto t_start = std::chrono::steady_clock::now();

  {  // 1: Yang-Baxter, symbolic n=1,2 under 60 s, grid n=3 under 300 s
    Timed y1 = timed([] { return check_ybe(1, Mode::symbolic); });
    Timed y2 = timed([] { return check_ybe(2, Mode::symbolic); });
    Timed y3 = timed([] { return check_ybe(3, Mode::grid); });
    bool ok = y1.rep.all_passed() && y2.rep.all_passed() && y3.rep.all_passed() &&
              y1.ms < 60000 && y2.ms < 60000 && y3.ms < 300000;
    line(1, "yang-baxter", ok,
         "n=1 " + std::to_string(y1.ms) + " ms, n=2 " + std::to_string(y2.ms) +
             " ms, n=3 grid " + std::to_string(y3.ms) + " ms");
  }
  {  // 2: unitarity and crossing, n=2 symbolic, n=3 grid
    Timed u2 = timed([] { return check_unitarity_crossing(2, Mode::symbolic); });
    Timed u3 = timed([] { return check_unitarity_crossing(3, Mode::grid); });
    line(2, "unitarity+crossing", u2.rep.all_passed() && u3.rep.all_passed(),
         summarize(u2.rep, u2.ms) + " / " + summarize(u3.rep, u3.ms));
  }
  Timed st = timed([] { return check_structure(2, Mode::symbolic); });
  {  // 3: rank-1 block matches the displayed matrix entrywise
    line(3, "rank-1 block", has_pass(st.rep, "rank1.match"), summarize(st.rep, st.ms));
  }
  {  // 4: reduction lemma, both forms, all basis pairs
    Timed r2 = timed([] { return check_reduction(2, Mode::symbolic); });
    Timed r3 = timed([] { return check_reduction(3, Mode::grid); });
    line(4, "reduction lemma", r2.rep.all_passed() && r3.rep.all_passed(),
         summarize(r2.rep, r2.ms) + " / " + summarize(r3.rep, r3.ms));
  }
  {  // 5: f-identity to order 30
    Timed f2 = timed([] { return check_f_identity(2, 30); });
    Timed f3 = timed([] { return check_f_identity(3, 30); });
    line(5, "f-identity order 30", f2.rep.all_passed() && f3.rep.all_passed(),
         summarize(f2.rep, f2.ms) + " / " + summarize(f3.rep, f3.ms));
  }
  {  // 6: vector representation relation suite, window 3
    Timed p2 = timed([] { return check_drinfeld_relations(build_repv(2), 3); });
    Timed p3 = timed([] { return check_drinfeld_relations(build_repv(3), 3); });
    line(6, "vector rep relations", p2.rep.all_passed() && p3.rep.all_passed(),
         summarize(p2.rep, p2.ms) + " / " + summarize(p3.rep, p3.ms));
  }
  {  // 7: gauss suite, n=2 symbolic and n=3 grid
    Timed g2 = timed([] { return check_gauss_suite(2, Mode::symbolic); });
    Timed g3 = timed([] { return check_gauss_suite(3, Mode::grid); });
    line(7, "gauss suite", g2.rep.all_passed() && g3.rep.all_passed(),
         summarize(g2.rep, g2.ms) + " / " + summarize(g3.rep, g3.ms));
  }
  {  // 8: central element suite
    Timed c2 = timed([] { return check_central_suite(2, Mode::symbolic); });
    Timed c3 = timed([] { return check_central_suite(3, Mode::grid); });
    line(8, "central suite", c2.rep.all_passed() && c3.rep.all_passed(),
         summarize(c2.rep, c2.ms) + " / " + summarize(c3.rep, c3.ms));
  }
  {  // 9: currents suite, window 2, zero failures
    Timed x2 = timed([] { return check_currents_suite(2, Mode::symbolic, 2); });
    Timed x3 = timed([] { return check_currents_suite(3, Mode::grid, 2); });
    line(9, "currents suite", x2.rep.all_passed() && x3.rep.all_passed(),
         summarize(x2.rep, x2.ms) + " / " + summarize(x3.rep, x3.ms));
  }
  {  // 10: Rhat(q^{-2}) kills |1,1>
    line(10, "rhat kernel vector", has_pass(st.rep, "rhat.kernel"),
         "from the structure suite");
  }
  {  // 11: determinism of the full default run and the global time budget
    auto full = [] {
      Report rep;
      rep.suite = "all";
      rep.merge(check_cartan_suite(2));
      rep.merge(check_structure(2, Mode::symbolic));
      rep.merge(check_ybe(2, Mode::symbolic));
      rep.merge(check_unitarity_crossing(2, Mode::symbolic));
      rep.merge(check_reduction(2, Mode::symbolic));
      rep.merge(check_f_identity(2, 30));
      rep.merge(check_drinfeld_relations(build_repv(2), 3));
      rep.merge(check_gauss_suite(2, Mode::symbolic));
      rep.merge(check_central_suite(2, Mode::symbolic));
      rep.merge(check_embed_suite(2, Mode::symbolic));
      rep.merge(check_currents_suite(2, Mode::symbolic, 3));
      rep.sort_checks();
      return rep.to_json(false);
    };
    Timed dummy;
    auto t0 = std::chrono::steady_clock::now();
    std::string a = full(), b = full();
    long ms = (long)std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - t0)
                  .count();
    (void)dummy;
    bool ok = a == b && ms < 15 * 60000;
    line(11, "determinism", ok,
         std::string(a == b ? "byte-identical" : "reports differ") + ", two runs in " +
             std::to_string(ms) + " ms");
  }

  long total = (long)std::chrono::duration_cast<std::chrono::milliseconds>(
                   std::chrono::steady_clock::now() - t_start)
                   .count();
  printf("acceptance: %s (%ld ms total)\n",
         failures_total == 0 ? "ALL CRITERIA PASS" : "FAILURES PRESENT", total);
  return failures_total == 0 ? 0 : 1;
}
