#include <benchmark/benchmark.h>

#include "large_atlas/bounds.hpp"
#include "large_atlas/catalog.hpp"
#include "large_atlas/largeness.hpp"
#include "large_atlas/orders.hpp"
#include "large_atlas/sweep.hpp"

using namespace large_atlas;

static void BM_OrderParse(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(order(parse_group("POmega+(8,2)")));
}
BENCHMARK(BM_OrderParse);

static void BM_OrderLarge(benchmark::State& st) {
  const int n = static_cast<int>(st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(psl_order(n, 256));
}
BENCHMARK(BM_OrderLarge)->Arg(8)->Arg(64)->Arg(256);

static void BM_Candidates(benchmark::State& st) {
  const GroupId g = GroupId::pomega(12, 9, Sign::plus);
  for (auto _ : st) benchmark::DoNotOptimize(candidates(g));
}
BENCHMARK(BM_Candidates);

static void BM_IsLargeH1(benchmark::State& st) {
  const GroupId g = GroupId::psl(12, 7);
  const SubgroupEntry e = instantiate(g, "psl-c2-wr", Params{.m = 4, .t = 3});
  for (auto _ : st) benchmark::DoNotOptimize(is_large_h1(g, e));
}
BENCHMARK(BM_IsLargeH1);

static void BM_Sandwich(benchmark::State& st) {
  for (auto _ : st)
    for (const auto& pp : prime_powers_upto(256)) benchmark::DoNotOptimize(sandwich(RatioCase::PSL_C2_t3, pp.q));
}
BENCHMARK(BM_Sandwich);

static void BM_SweepCase(benchmark::State& st, const char* id) {
  for (auto _ : st) benchmark::DoNotOptimize(compute_case(id, SweepOptions{1, 0}));
}
BENCHMARK_CAPTURE(BM_SweepCase, psl_c2_t3, "psl-c2-t3")->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_SweepCase, psp_c6, "psp-c6")->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_SweepCase, tablea_cutoff, "tableA-cutoff")->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
