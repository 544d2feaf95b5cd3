// Serial reference kernels vs their OpenMP counterparts, plus the two
// end-to-end enhancement paths.

#include <benchmark/benchmark.h>
#include <omp.h>

#include <random>
#include <vector>

#include "fuzzylens/config.hpp"
#include "fuzzylens/enhancement.hpp"
#include "fuzzylens/kernels.hpp"

namespace k = fuzzylens::kernels;

namespace {

std::vector<std::uint8_t> pixels(std::size_t n, unsigned seed) {
  std::mt19937 rng(seed);
  std::vector<std::uint8_t> v(n);
  for (auto& p : v) p = static_cast<std::uint8_t>(rng());
  return v;
}

k::Table some_table() {
  k::Table t{};
  for (std::size_t i = 0; i < t.size(); ++i) t[i] = static_cast<std::uint8_t>(255 - i);
  return t;
}

template <auto Kernel>
void BM_ApplyLut(benchmark::State& state) {
  const auto in = pixels(static_cast<std::size_t>(state.range(0)), 1);
  std::vector<std::uint8_t> out(in.size());
  const auto table = some_table();
  for (auto _ : state) {
    Kernel(in, table, out);
    benchmark::DoNotOptimize(out.data());
  }
  state.SetBytesProcessed(state.iterations() * state.range(0));
}

template <auto Kernel>
void BM_Histogram(benchmark::State& state) {
  const auto in = pixels(static_cast<std::size_t>(state.range(0)), 2);
  for (auto _ : state) benchmark::DoNotOptimize(Kernel(in));
  state.SetBytesProcessed(state.iterations() * state.range(0));
}

template <auto Kernel>
void BM_SquaredDiff(benchmark::State& state) {
  const auto a = pixels(static_cast<std::size_t>(state.range(0)), 3);
  const auto b = pixels(static_cast<std::size_t>(state.range(0)), 4);
  for (auto _ : state) benchmark::DoNotOptimize(Kernel(a, b));
  state.SetBytesProcessed(state.iterations() * state.range(0) * 2);
}

void BM_BuildLut(benchmark::State& state) {
  const auto engine = fuzzylens::make_engine(fuzzylens::default_config());
  for (auto _ : state) benchmark::DoNotOptimize(fuzzylens::build_lut(engine));
}

// Per-pixel inference, the path the LUT replaces.
void BM_DirectInference(benchmark::State& state) {
  const auto engine = fuzzylens::make_engine(fuzzylens::default_config());
  const auto in = pixels(static_cast<std::size_t>(state.range(0)), 5);
  std::vector<std::uint8_t> out(in.size());
  for (auto _ : state) {
    for (std::size_t i = 0; i < in.size(); ++i) {
      const double v = in[i];
      out[i] = static_cast<std::uint8_t>(std::clamp(std::lround(v + engine.infer(v)), 0L, 255L));
    }
    benchmark::DoNotOptimize(out.data());
  }
}

constexpr std::int64_t kSmall = 1 << 16;
constexpr std::int64_t kLarge = 1 << 24;

}  // namespace

BENCHMARK(BM_ApplyLut<k::serial::apply_lut>)->Name("apply_lut/serial")->Range(kSmall, kLarge);
BENCHMARK(BM_ApplyLut<k::parallel::apply_lut>)->Name("apply_lut/omp")->Range(kSmall, kLarge)->UseRealTime();
BENCHMARK(BM_Histogram<k::serial::histogram>)->Name("histogram/serial")->Range(kSmall, kLarge);
BENCHMARK(BM_Histogram<k::parallel::histogram>)->Name("histogram/omp")->Range(kSmall, kLarge)->UseRealTime();
BENCHMARK(BM_SquaredDiff<k::serial::sum_squared_diff>)->Name("sum_squared_diff/serial")->Range(kSmall, kLarge);
BENCHMARK(BM_SquaredDiff<k::parallel::sum_squared_diff>)
    ->Name("sum_squared_diff/omp")
    ->Range(kSmall, kLarge)
    ->UseRealTime();
BENCHMARK(BM_BuildLut)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_DirectInference)->Arg(4096)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
