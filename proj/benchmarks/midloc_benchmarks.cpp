#include <benchmark/benchmark.h>

#include <vector>

#include "midloc/cantor_maps.hpp"
#include "midloc/digits.hpp"
#include "midloc/primes.hpp"
#include "midloc/simulator.hpp"

namespace {

using namespace midloc;

void BM_DeltaClass(benchmark::State& state) {
  const auto k = static_cast<std::size_t>(state.range(0));
  const Rational d(BigInt(1), primorial(k));
  for (auto _ : state) benchmark::DoNotOptimize(delta_class(d));
}
BENCHMARK(BM_DeltaClass)->Arg(4)->Arg(64)->Arg(512);

void BM_HMap(benchmark::State& state) {
  const Rational x(1, state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(h_map(x, HFlavor::odd));
}
BENCHMARK(BM_HMap)->Arg(5)->Arg(127)->Arg(2053);

void BM_IsCantor(benchmark::State& state) {
  const Rational x(2, state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(is_cantor(x));
}
BENCHMARK(BM_IsCantor)->Arg(7)->Arg(2187)->Arg(65537);

template <class Num>
void run_left_end(benchmark::State& state, const StrategyKind& kind, Num d, std::optional<Num> radius = {}) {
  const Instance<Num> inst{d, -d, radius};
  for (auto _ : state) benchmark::DoNotOptimize(run(kind, inst));
}

void BM_RunAlgebraic(benchmark::State& state) { run_left_end(state, strategy::Algebraic{}, EExtNumber(Rational(19, 2))); }
void BM_RunEpsOmit(benchmark::State& state) {
  run_left_end(state, strategy::EpsOmit{Rational(1, 10)}, Rational(41, 10));
}
void BM_RunOneBit(benchmark::State& state) { run_left_end(state, strategy::OneBit{}, Rational(13, 5)); }
void BM_RunNonCantor(benchmark::State& state) { run_left_end(state, strategy::NonCantor{}, Rational(12, 5)); }
void BM_RunConverge(benchmark::State& state) {
  run_left_end(state, strategy::Converge{}, Rational(5, 2), std::optional<Rational>(Rational(1, 10)));
}
BENCHMARK(BM_RunAlgebraic);
BENCHMARK(BM_RunEpsOmit);
BENCHMARK(BM_RunOneBit);
BENCHMARK(BM_RunNonCantor);
BENCHMARK(BM_RunConverge)->Unit(benchmark::kMillisecond);

void BM_SweepOneBit(benchmark::State& state) {
  std::vector<Rational> ds;
  for (long n = 11; n <= 100; ++n) ds.emplace_back(n, 10);
  const std::vector<StartPoint<Rational>> starts = {{Rational(-1), Rational(0)}, {Rational(1, 2), Rational(0)}};
  SweepOptions<Rational> options;
  options.threads = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(sweep(strategy::OneBit{}, ds, starts, options));
}
BENCHMARK(BM_SweepOneBit)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();

}  // namespace

BENCHMARK_MAIN();
