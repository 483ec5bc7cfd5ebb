#include <benchmark/benchmark.h>

#include <cstdint>
#include <vector>

#include "qlogic/algorithms.hpp"
#include "qlogic/random.hpp"
#include "qlogic/truth_table.hpp"
#include "qlogic/unitary.hpp"

namespace {

using qlogic::Rng;
using qlogic::TruthTable;

void BM_DeutschJozsa(benchmark::State& state) {
  const std::int64_t n = state.range(0);
  const std::int64_t size = std::int64_t{1} << n;
  std::vector<std::int64_t> values(size, 0);
  for (std::int64_t x = 0; x < size / 2; ++x) values[x] = 1;
  const TruthTable f{size, 2, values};
  for (auto _ : state) {
    benchmark::DoNotOptimize(qlogic::deutsch_jozsa(f, n));
  }
}
BENCHMARK(BM_DeutschJozsa)->Arg(4)->Arg(6)->Arg(8);

void BM_Simon(benchmark::State& state) {
  const std::int64_t n = state.range(0);
  Rng table_rng(1);
  const TruthTable f =
      qlogic::make_simon_instance(n, (std::uint64_t{1} << n) - 1, table_rng);
  Rng rng(2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(qlogic::simon(f, n, rng));
  }
}
BENCHMARK(BM_Simon)->Arg(3)->Arg(5)->Arg(7);

void BM_ShorSample(benchmark::State& state) {
  // One full round at s = 64: oracle build, transform, measurement.
  Rng rng(3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(qlogic::shor_period_sample(7, 15, state.range(0), rng));
  }
}
BENCHMARK(BM_ShorSample)->Arg(64)->Arg(128)->Arg(256);

void BM_ShorFactor(benchmark::State& state) {
  qlogic::ShorOptions options;
  options.s = 64;
  options.forced_a = 7;
  Rng rng(4);
  for (auto _ : state) {
    benchmark::DoNotOptimize(qlogic::shor_factor(15, rng, options));
  }
}
BENCHMARK(BM_ShorFactor);

void BM_ShorGeometry(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(qlogic::shor_geometry(7, 15, state.range(0)));
  }
}
BENCHMARK(BM_ShorGeometry)->Arg(64)->Arg(256);

void BM_ModMulOracle(benchmark::State& state) {
  const std::int64_t s = state.range(0);
  const qlogic::RegisterLayout layout({s, 16});
  for (auto _ : state) {
    benchmark::DoNotOptimize(qlogic::oracle_modmul_unitary(7, 15, layout));
  }
}
BENCHMARK(BM_ModMulOracle)->Arg(64)->Arg(256);

void BM_QftUnitary(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(qlogic::qft_unitary(state.range(0)));
  }
}
BENCHMARK(BM_QftUnitary)->Arg(64)->Arg(256)->Arg(1024);

}  // namespace

BENCHMARK_MAIN();
