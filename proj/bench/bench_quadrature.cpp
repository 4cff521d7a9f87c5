#include <benchmark/benchmark.h>

#include "lcsynth/hypotheses.hpp"
#include "lcsynth/quadrature.hpp"
#include "lcsynth/stability.hpp"

namespace {

// three-cycle pair, middle band
struct Fixture {
  lcs::UniPoly p, q;
  lcs::BandIntegrand integrand;

  static Fixture make() {
    const lcs::UniPoly x = lcs::UniPoly::x();
    const lcs::UniPoly one = lcs::UniPoly::constant(1);
    const lcs::UniPoly p = (one - x * x) * (lcs::UniPoly::constant(4) - x * x) * (lcs::UniPoly::constant(9) - x * x);
    const lcs::UniPoly q = x * lcs::Rational(1, 100);
    const auto bands = lcs::find_bands(p);
    const auto [xe, xd] = lcs::band_endpoints(p, bands[1]);
    return {p, q, lcs::BandIntegrand(p, q, xe, xd)};
  }
};

const Fixture& fixture() {
  static const Fixture f = Fixture::make();
  return f;
}

void run(benchmark::State& state, bool parallel) {
  const auto& f = fixture();
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    const double v = parallel ? lcs::kernels::gauss_chebyshev_parallel(f.integrand, lcs::kEq6Integrand, n)
                              : lcs::kernels::gauss_chebyshev_serial(f.integrand, lcs::kEq6Integrand, n);
    benchmark::DoNotOptimize(v);
  }
  state.SetItemsProcessed(state.iterations() * n);
}

void BM_Serial(benchmark::State& state) { run(state, false); }
void BM_Parallel(benchmark::State& state) { run(state, true); }

void BM_CheckBands(benchmark::State& state) {
  const auto& f = fixture();
  for (auto _ : state) benchmark::DoNotOptimize(lcs::check_theorem1(f.p, f.q));
}

}  // namespace

BENCHMARK(BM_Serial)->RangeMultiplier(8)->Range(64, 1 << 18);
BENCHMARK(BM_Parallel)->RangeMultiplier(8)->Range(64, 1 << 18)->UseRealTime();
BENCHMARK(BM_CheckBands)->UseRealTime();

BENCHMARK_MAIN();
