#include <benchmark/benchmark.h>

#include "qav/currents.hpp"
#include "qav/gauss.hpp"
#include "qav/rmatrix.hpp"
#include "qav/series.hpp"

using namespace qav;

namespace {

std::array<std::optional<BigRat>, kNumVars> grid_pt() {
  std::array<std::optional<BigRat>, kNumVars> pt{};
  pt[VQ] = rat(5, 3);
  pt[VA] = rat(7, 2);
  return pt;
}

}  // namespace

static void BM_rbar_build(benchmark::State& state) {
  int n = (int)state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(rbar(n));
}
BENCHMARK(BM_rbar_build)->Arg(1)->Arg(2)->Arg(3);

static void BM_ratfunc_product(benchmark::State& state) {
  // representative entry arithmetic: products of R-matrix band entries
  TensorOp R = rbar(2);
  std::vector<RatFunc> entries;
  for (int r = 0; r < R.mat.rows() && entries.size() < 12; ++r)
    for (int c = 0; c < R.mat.cols() && entries.size() < 12; ++c)
      if (!R.mat.at(r, c).is_zero() && !R.mat.at(r, c).is_one())
        entries.push_back(R.mat.at(r, c));
  for (auto _ : state) {
    RatFunc acc(1);
    for (const auto& e : entries) acc = acc * e + e;
    benchmark::DoNotOptimize(acc);
  }
}
BENCHMARK(BM_ratfunc_product);

static void BM_ybe_grid(benchmark::State& state) {
  int n = (int)state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(check_ybe(n, Mode::grid));
}
BENCHMARK(BM_ybe_grid)->Arg(2)->Unit(benchmark::kMillisecond);

static void BM_gauss_decompose(benchmark::State& state) {
  int n = (int)state.range(0);
  LOperator L = build_l_operator(n, RatFunc(rat(7, 2)), grid_pt());
  BlockMat Lb = L.block_at(RatFunc::var(VU));
  for (auto _ : state) benchmark::DoNotOptimize(gauss_decompose(Lb));
}
BENCHMARK(BM_gauss_decompose)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

static void BM_quantum_minor(benchmark::State& state) {
  LOperator L = build_l_operator(2, RatFunc(rat(7, 2)), grid_pt());
  for (auto _ : state)
    benchmark::DoNotOptimize(quantum_minor(L, {1, 2}, {1, 2}, RatFunc::var(VU)));
}
BENCHMARK(BM_quantum_minor)->Unit(benchmark::kMillisecond);

static void BM_currents_extract(benchmark::State& state) {
  int n = (int)state.range(0);
  LOperator L = build_l_operator(n, RatFunc(rat(7, 2)), grid_pt());
  GaussFactors G = gauss_decompose(L.block_at(RatFunc::var(VU)));
  for (auto _ : state) benchmark::DoNotOptimize(extract_currents(n, G, 2, grid_pt()));
}
BENCHMARK(BM_currents_extract)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

static void BM_f_series(benchmark::State& state) {
  int order = (int)state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(f_series(2, order));
}
BENCHMARK(BM_f_series)->Arg(10)->Arg(30)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
