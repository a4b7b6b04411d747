#include <benchmark/benchmark.h>

#include <complex>
#include <numeric>
#include <vector>

#include "bitrev/bitrev.hpp"

namespace {

using bitrev::BitWidth;
using bitrev::Method;
using Element = std::complex<double>;

void BM_Permute(benchmark::State& state, Method method) {
  const BitWidth b(static_cast<unsigned>(state.range(0)));
  std::vector<Element> data(b.length());
  for (std::size_t i = 0; i < data.size(); ++i) {
    data[i] = Element(static_cast<double>(i), 0.0);
  }
  bitrev::MethodRunner<Element> runner(method, b);
  for (auto _ : state) {
    runner.run(data);
    benchmark::DoNotOptimize(data.data());
    benchmark::ClobberMemory();
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(b.length()));
}

void BM_GenerateSchedule(benchmark::State& state) {
  const BitWidth b(static_cast<unsigned>(state.range(0)));
  for (auto _ : state) {
    auto schedule = bitrev::generate_swap_schedule(b);
    benchmark::DoNotOptimize(schedule);
  }
}

void register_all() {
  for (Method m : bitrev::kAllMethods) {
    const unsigned top = m == Method::kUnrolled ? 16 : 22;
    auto* bm = benchmark::RegisterBenchmark(
        ("permute/" + std::string(bitrev::method_name(m))).c_str(), BM_Permute, m);
    bm->DenseRange(8, top, 2)->Unit(benchmark::kMicrosecond);
  }
}

const int registered = (register_all(), 0);

}  // namespace

BENCHMARK(BM_GenerateSchedule)->DenseRange(8, 20, 4)->Unit(benchmark::kMicrosecond);
BENCHMARK_MAIN();
