#include <benchmark/benchmark.h>

#include "klrbraid/klr.hpp"
#include "klrbraid/klr_quotient.hpp"
#include "klrbraid/uqfull.hpp"

namespace {

using namespace klrbraid;

// Pivot basis and pairing rows of U^- in one weight, from a cold cache.
void BM_WeightBasis(benchmark::State& state) {
  const CartanDatum c = CartanDatum::from_type("B2");
  const RootVec beta{static_cast<int>(state.range(0)), static_cast<int>(state.range(0))};
  for (auto _ : state) {
    UqMinus m(c, 12);
    benchmark::DoNotOptimize(m.dim(beta));
  }
}
BENCHMARK(BM_WeightBasis)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

// T_1 T_2 T_1 T_2 applied to f_1 in G2, including straightening.
void BM_ApplyBraid(benchmark::State& state) {
  const CartanDatum c = CartanDatum::from_type("G2");
  const BraidWord w = {{0, false}, {1, false}, {0, false}, {1, false}};
  for (auto _ : state) {
    UqFull u(c);
    benchmark::DoNotOptimize(u.apply_braid(w, u.f(0)));
  }
}
BENCHMARK(BM_ApplyBraid)->Unit(benchmark::kMillisecond);

// A tau-string times its reverse, which straightens through the quadratic relations.
void BM_KLRMultiply(benchmark::State& state) {
  const KLRAlgebra r(CartanDatum::from_type("A2"));
  Word cur = {0, 1, 0, 1};
  KLRElem fwd = r.e(cur);
  const std::vector<int> ks = {0, 2, 1};
  for (int k : ks) {
    fwd = r.mul(r.tau_e(cur, k), fwd);
    std::swap(cur[k], cur[k + 1]);
  }
  KLRElem back = r.e(cur);
  for (auto it = ks.rbegin(); it != ks.rend(); ++it) {
    back = r.mul(r.tau_e(cur, *it), back);
    std::swap(cur[*it], cur[*it + 1]);
  }
  for (auto _ : state) benchmark::DoNotOptimize(r.mul(back, fwd));
  state.counters["terms"] = static_cast<double>(r.mul(back, fwd).terms().size());
}
BENCHMARK(BM_KLRMultiply)->Unit(benchmark::kMicrosecond);

// Graded dimensions of R(n alpha) / <x_1^l>.
void BM_CyclotomicNilHecke(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(cyclotomic_nilhecke(n, n).total());
}
BENCHMARK(BM_CyclotomicNilHecke)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
