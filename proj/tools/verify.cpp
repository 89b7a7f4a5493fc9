#include <CLI11.hpp>
#include <cstdio>
#include <fstream>
#include <functional>
#include <future>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "qav/cartan.hpp"
#include "qav/currents.hpp"
#include "qav/errors.hpp"
#include "qav/gauss.hpp"
#include "qav/repv.hpp"
#include "qav/rmatrix.hpp"
#include "qav/series.hpp"

using namespace qav;

namespace {

struct Config {
  std::string suite;
  int n = 2;
  Mode mode = Mode::symbolic;
  bool mode_explicit = false;
  int window = 3;
  int trunc = 30;
  std::optional<BigRat> eval_param;
  int threads = 1;
  std::string out;
};

Report run_rmatrix(const Config& c) {
  Report rep;
  rep.suite = "rmatrix";
  rep.params["n"] = std::to_string(c.n);
  rep.params["mode"] = c.mode == Mode::symbolic ? "symbolic" : "grid";
  rep.merge(check_structure(c.n, c.mode));
  rep.merge(check_ybe(c.n, c.mode));
  rep.merge(check_unitarity_crossing(c.n, c.mode));
  rep.merge(check_reduction(c.n, c.mode));
  rep.sort_checks();
  return rep;
}

Report run_rep(const Config& c) {
  if (c.n < 2) throw BadArgument("rep suite needs rank >= 2");
  RepV rv = build_repv(c.n);
  return check_drinfeld_relations(rv, c.window);
}

Report run_one(const Config& c, const std::string& suite) {
  if (suite == "cartan") return check_cartan_suite(c.n);
  if (suite == "rmatrix") return run_rmatrix(c);
  if (suite == "series") return check_f_identity(c.n, c.trunc);
  if (suite == "rep") return run_rep(c);
  if (suite == "gauss") return check_gauss_suite(c.n, c.mode, c.eval_param);
  if (suite == "central") return check_central_suite(c.n, c.mode, c.eval_param);
  if (suite == "embed") return check_embed_suite(c.n, c.mode, c.eval_param);
  if (suite == "currents")
    return check_currents_suite(c.n, c.mode, c.window, c.eval_param);
  throw BadArgument("unknown suite " + suite);
}

Report run_all(const Config& c) {
  const std::vector<std::string> suites = {"cartan", "rmatrix", "series",  "rep",
                                           "gauss",  "central", "embed", "currents"};
  Report rep;
  rep.suite = "all";
  rep.params["n"] = std::to_string(c.n);
  rep.params["mode"] = c.mode == Mode::symbolic ? "symbolic" : "grid";
  rep.params["window"] = std::to_string(c.window);
  rep.params["trunc"] = std::to_string(c.trunc);
  std::vector<Report> parts(suites.size());
  if (c.threads > 1) {
    std::vector<std::future<Report>> fut;
    for (const auto& s : suites)
      fut.push_back(std::async(std::launch::async, [&c, s] { return run_one(c, s); }));
    for (size_t i = 0; i < fut.size(); ++i) parts[i] = fut[i].get();
  } else {
    for (size_t i = 0; i < suites.size(); ++i) parts[i] = run_one(c, suites[i]);
  }
  // aggregation order is fixed by the suite list, then globally sorted by id
  for (const auto& p : parts) rep.merge(p);
  rep.sort_checks();
  return rep;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"verify: machine-check the R-matrix / Gaussian-generator identity suites"};
  Config cfg;
  std::string mode_s = "symbolic", eval_s = "symbolic";
  app.add_option("suite", cfg.suite, "one of cartan|rmatrix|series|rep|gauss|central|embed|currents|all")
      ->required()
      ->check(CLI::IsMember({"cartan", "rmatrix", "series", "rep", "gauss", "central",
                             "embed", "currents", "all"}));
  app.add_option("--n", cfg.n, "rank (default 2)")->check(CLI::PositiveNumber);
  auto* mode_opt =
      app.add_option("--mode", mode_s, "symbolic or grid (default symbolic)")
          ->check(CLI::IsMember({"symbolic", "grid"}));
  app.add_option("--window", cfg.window, "mode window for rep/currents (default 3)")
      ->check(CLI::PositiveNumber);
  app.add_option("--trunc", cfg.trunc, "series truncation order (default 30)")
      ->check(CLI::PositiveNumber);
  app.add_option("--eval-param", eval_s,
                 "evaluation parameter a: 'symbolic' or a rational like 7/2");
  app.add_option("--threads", cfg.threads, "worker threads for the all suite")
      ->check(CLI::PositiveNumber);
  app.add_option("--out", cfg.out, "write the JSON report to this path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  cfg.mode = mode_s == "grid" ? Mode::grid : Mode::symbolic;
  cfg.mode_explicit = mode_opt->count() > 0;
  if (eval_s != "symbolic") {
    try {
      mpq_class v(eval_s);
      v.canonicalize();
      cfg.eval_param = v;
    } catch (const std::exception&) {
      std::cerr << "error: --eval-param must be 'symbolic' or a rational\n";
      return 2;
    }
  }
  // fully symbolic work grows quickly with the rank; prefer grid PIT there
  bool heavy = cfg.suite == "rmatrix" || cfg.suite == "gauss" || cfg.suite == "central" ||
               cfg.suite == "embed" || cfg.suite == "currents" || cfg.suite == "all";
  if (!cfg.mode_explicit && cfg.n >= 3 && heavy && cfg.mode == Mode::symbolic) {
    std::cerr << "notice: n >= 3, selecting grid mode (pass --mode symbolic to override)\n";
    cfg.mode = Mode::grid;
  }

  Report rep;
  try {
    rep = cfg.suite == "all" ? run_all(cfg) : run_one(cfg, cfg.suite);
  } catch (const BadArgument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  std::string json = rep.to_json(false);  // byte-stable across identical runs
  if (!cfg.out.empty()) {
    std::ofstream f(cfg.out, std::ios::binary);
    if (!f) {
      std::cerr << "error: cannot write " << cfg.out << "\n";
      return 2;
    }
    f << json << "\n";
  } else {
    std::cout << json << "\n";
  }
  size_t fails = rep.failures();
  std::cerr << rep.suite << ": " << rep.checks.size() << " checks, " << fails
            << " failed\n";
  return fails == 0 ? 0 : 1;
}
