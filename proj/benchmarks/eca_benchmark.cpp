#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "eca/eca.hpp"

namespace {

eca::EventTimeSeries bernoulli_series(std::mt19937_64& rng, std::size_t steps, double density) {
  std::bernoulli_distribution coin(density);
  std::vector<eca::Step> v(steps);
  for (auto& s : v) s = coin(rng) ? eca::Step::kEvent : eca::Step::kNoEvent;
  return eca::EventTimeSeries(std::move(v));
}

eca::AlignedEvents make_events(std::size_t steps) {
  std::mt19937_64 rng(steps);
  return eca::align(bernoulli_series(rng, steps, 0.05), bernoulli_series(rng, steps, 0.05));
}

void BM_CountCoincidences(benchmark::State& state) {
  const auto events = make_events(static_cast<std::size_t>(state.range(0)));
  const eca::EcaParams params{3, false, 1};
  for (auto _ : state) benchmark::DoNotOptimize(eca::count_coincidences(events, params));
  state.SetItemsProcessed(state.iterations() * static_cast<long>(events.a.size() + events.b.size()));
}
BENCHMARK(BM_CountCoincidences)->Range(1 << 8, 1 << 18);

void BM_AnalyticalPValue(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(eca::analytical_pvalue(n, n, n / 10, 20.0 * static_cast<double>(n), 0, 1));
  }
}
BENCHMARK(BM_AnalyticalPValue)->Range(8, 1 << 16);

void BM_ShuffleTest(benchmark::State& state) {
  const auto events = make_events(static_cast<std::size_t>(state.range(0)));
  eca::SigConfig sig;
  sig.method = eca::SigMethod::kShuffle;
  sig.reps = 1000;
  sig.seed = 1;
  sig.threads = 1;
  for (auto _ : state) benchmark::DoNotOptimize(eca::shuffle_test(events, eca::EcaParams{}, sig));
}
BENCHMARK(BM_ShuffleTest)->Arg(218)->Arg(5000)->Unit(benchmark::kMillisecond);

void BM_WaitingTimeTest(benchmark::State& state) {
  const auto events = make_events(static_cast<std::size_t>(state.range(0)));
  eca::SigConfig sig;
  sig.method = eca::SigMethod::kSurrogate;
  sig.reps = 1000;
  sig.seed = 1;
  sig.threads = 1;
  for (auto _ : state) benchmark::DoNotOptimize(eca::waiting_time_test(events, eca::EcaParams{}, sig));
}
BENCHMARK(BM_WaitingTimeTest)->Arg(218)->Arg(5000)->Unit(benchmark::kMillisecond);

void BM_RenderSvg(benchmark::State& state) {
  std::mt19937_64 rng(7);
  const auto steps = static_cast<std::size_t>(state.range(0));
  const eca::PlotSpec spec{bernoulli_series(rng, steps, 0.1), bernoulli_series(rng, steps, 0.1),
                           eca::EcaParams{1, false, 0}, std::nullopt};
  for (auto _ : state) benchmark::DoNotOptimize(eca::render_svg(spec));
}
BENCHMARK(BM_RenderSvg)->Arg(218)->Arg(5000);

}  // namespace
BENCHMARK_MAIN();
