#include <benchmark/benchmark.h>

#include "ipts/enumerate.hpp"
#include "ipts/lp.hpp"
#include "ipts/staircase.hpp"
#include "ipts/testset.hpp"

namespace {

using namespace ipts;

const IntMatrix kCoin = {{1, 1, 1, 1}, {1, 5, 10, 25}};
const IntVector kCoinCost{0, 1, 0, 1};

void BM_CoinGroebner(benchmark::State& state) {
  for (auto _ : state) {
    GroebnerBasis g = groebner(kCoin, TermOrder(kCoinCost));
    benchmark::DoNotOptimize(g.elements.size());
  }
}
BENCHMARK(BM_CoinGroebner);

void BM_CoinGraver(benchmark::State& state) {
  for (auto _ : state) {
    GraverBasis gr = graver(kCoin);
    benchmark::DoNotOptimize(gr.elements.size());
  }
}
BENCHMARK(BM_CoinGraver);

void BM_CoinReduce(benchmark::State& state) {
  GroebnerBasis g = groebner(kCoin, TermOrder(kCoinCost));
  IntVector u{100, 100, 100, 100};
  for (auto _ : state) {
    IntVector best = reduce(u, g);
    benchmark::DoNotOptimize(best);
  }
}
BENCHMARK(BM_CoinReduce);

void BM_CoinGap(benchmark::State& state) {
  for (auto _ : state) {
    Rat gap = ip_gap(kCoin, kCoinCost);
    benchmark::DoNotOptimize(gap);
  }
}
BENCHMARK(BM_CoinGap);

void BM_CoinCount(benchmark::State& state) {
  Fiber f{kCoin, IntVector{200, 1500}};
  for (auto _ : state) {
    Int count = count_feasible(f);
    benchmark::DoNotOptimize(count);
  }
}
BENCHMARK(BM_CoinCount);

void BM_CoinRelaxation(benchmark::State& state) {
  LPProblem p;
  p.equalities = kCoin;
  p.rhs = RatVector(IntVector{10, 114});
  p.objective = RatVector(kCoinCost);
  for (auto _ : state) {
    LPResult r = lp_solve(p);
    benchmark::DoNotOptimize(r.value);
  }
}
BENCHMARK(BM_CoinRelaxation);

}  // namespace

int main(int argc, char** argv) {
  benchmark::Initialize(&argc, argv);
  benchmark::RunSpecifiedBenchmarks();
  return 0;
}
