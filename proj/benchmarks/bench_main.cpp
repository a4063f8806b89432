#include <benchmark/benchmark.h>

#include "rocoh/cellular_oracle.hpp"
#include "rocoh/free_space.hpp"
#include "rocoh/point_ring.hpp"
#include "rocoh/rep_complex.hpp"

using namespace rocoh;

static void BM_PointRingProducts(benchmark::State& state) {
  const Prime p(static_cast<int>(state.range(0)));
  const auto monos = window_monomials(p, 6);
  for (auto _ : state) {
    int nonzero = 0;
    for (const auto& x : monos) {
      for (const auto& y : monos) nonzero += multiply(RingElement(p, x), RingElement(p, y)).is_zero() ? 0 : 1;
    }
    benchmark::DoNotOptimize(nonzero);
  }
  state.SetItemsProcessed(state.iterations() * static_cast<long>(monos.size() * monos.size()));
}
BENCHMARK(BM_PointRingProducts)->Arg(2)->Arg(3)->Arg(5);

// One full window of the oracle: 169 degrees.
static void BM_OracleWindow(benchmark::State& state) {
  const Prime p(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    int total = 0;
    for (int m = -6; m <= 6; ++m)
      for (int n = -6; n <= 6; ++n) total += point_ro(p, m, n);
    benchmark::DoNotOptimize(total);
  }
}
BENCHMARK(BM_OracleWindow)->Arg(2)->Arg(3)->Arg(5)->Unit(benchmark::kMillisecond);

static void BM_SmithNormalFormSmash(benchmark::State& state) {
  const Prime p(3);
  const auto x = smash_with_sphere(model_sphere(p, 2), p, static_cast<int>(state.range(0)));
  for (auto _ : state) {
    int total = 0;
    for (int d = 0; d <= x.max_dim(); ++d) total += cohomology_int(x, 9, d, Level::Fixed).length();
    benchmark::DoNotOptimize(total);
  }
}
BENCHMARK(BM_SmithNormalFormSmash)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

static void BM_LensInvariants(benchmark::State& state) {
  const auto x = lens_space(Prime(5), static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(n_invariant(x));
    benchmark::DoNotOptimize(fh_first_index(x));
  }
}
BENCHMARK(BM_LensInvariants)->Arg(2)->Arg(8)->Arg(16);

static void BM_RankProfile(benchmark::State& state) {
  const Prime p(3);
  RepComplex x;
  x.p = p;
  x.cells = {{"pt", {}, {}},
             {"w1", parse_rep(p, "2"), {}},
             {"w2", parse_rep(p, "4"), {}},
             {"v", parse_rep(p, "3x"),
              {{"w1", RingElement(p, ConeMonomial::bottom_plain(1, 2))},
               {"w2", RingElement(p, ConeMonomial::bottom_plain(2, 1))}}}};
  for (auto _ : state) {
    const auto profile = rank_profile(x);
    benchmark::DoNotOptimize(is_free_profile(p, profile, default_window(x)));
  }
}
BENCHMARK(BM_RankProfile)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
