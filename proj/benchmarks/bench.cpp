#include <benchmark/benchmark.h>

#include "hzm/exact.hpp"
#include "hzm/lfun.hpp"

using namespace hzm;

// bernoulli_number memoizes globally, so benchmark the polynomial
// evaluation (fresh work every call) rather than the cached lookup
static void BM_BernoulliPoly(benchmark::State& state) {
  unsigned k = static_cast<unsigned>(state.range(0));
  Rat x = make_rat(3, 7);
  for (auto _ : state) benchmark::DoNotOptimize(bernoulli_poly(k, x));
}
BENCHMARK(BM_BernoulliPoly)->Arg(8)->Arg(32)->Arg(128);

static void BM_MahlerTransform(benchmark::State& state) {
  std::size_t J = static_cast<std::size_t>(state.range(0));
  LpContext ctx = make_context(5, 1, 3, 7, 10, 24, J);
  MomentMeasure mu = hurwitz_moments(ctx, J + 1);
  for (auto _ : state) {
    auto c = mahler_coefficients(mu, J);
    benchmark::DoNotOptimize(c);
  }
}
BENCHMARK(BM_MahlerTransform)->Arg(32)->Arg(64)->Arg(128);

static void BM_Teichmuller(benchmark::State& state) {
  Int p(2147483659);  // large prime: iteration cost dominates
  Padic b = Padic::from_int(1234567, p, 8);
  for (auto _ : state) benchmark::DoNotOptimize(teichmuller(b));
}
BENCHMARK(BM_Teichmuller);

static void BM_CosetMass(benchmark::State& state) {
  LpContext ctx = make_context(3, 1, 3, 7, 10, 24, 128);
  MomentMeasure mu = hurwitz_moments(ctx, 129);
  for (auto _ : state) {
    auto r = coset_mass_adaptive(mu, 1, 1, 3, 10, 128);
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(BM_CosetMass);

static void BM_LValue(benchmark::State& state) {
  LpContext ctx = make_context(5, 1, 3, 7, 10, 24, 128);
  for (auto _ : state) {
    LpValue v = lp_beta(ctx, 0, Rat(-3));
    benchmark::DoNotOptimize(v);
  }
}
BENCHMARK(BM_LValue);

BENCHMARK_MAIN();
