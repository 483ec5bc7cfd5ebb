#include <benchmark/benchmark.h>

#include <cstdint>

#include "qlogic/random.hpp"
#include "qlogic/register_layout.hpp"
#include "qlogic/statevector.hpp"
#include "qlogic/unitary.hpp"

namespace {

using qlogic::RegisterLayout;
using qlogic::Rng;
using qlogic::StateVector;

StateVector uniform_state(const RegisterLayout& layout) {
  StateVector state = qlogic::basis_state(layout, std::vector<std::int64_t>(
                                                      layout.register_count(), 0));
  for (std::size_t reg = 0; reg < layout.register_count(); ++reg) {
    state = qlogic::hadamard_layer(state, reg);
  }
  return state;
}

void BM_HadamardLayer(benchmark::State& state) {
  const RegisterLayout layout({state.range(0)});
  const StateVector sv = qlogic::basis_state(layout, {0});
  for (auto _ : state) {
    benchmark::DoNotOptimize(qlogic::hadamard_layer(sv, 0));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_HadamardLayer)->RangeMultiplier(4)->Range(1 << 8, 1 << 16)->Complexity();

void BM_HadamardLayerStrided(benchmark::State& state) {
  // Same butterfly, addressed through the strided first register.
  const RegisterLayout layout({state.range(0), 16});
  const StateVector sv = qlogic::basis_state(layout, {0, 0});
  for (auto _ : state) {
    benchmark::DoNotOptimize(qlogic::hadamard_layer(sv, 0));
  }
}
BENCHMARK(BM_HadamardLayerStrided)->Arg(1 << 6)->Arg(1 << 8)->Arg(1 << 10);

void BM_MarginalDistribution(benchmark::State& state) {
  const RegisterLayout layout({state.range(0), state.range(0)});
  const StateVector sv = uniform_state(layout);
  for (auto _ : state) {
    benchmark::DoNotOptimize(qlogic::marginal_distribution(sv, 1));
  }
}
BENCHMARK(BM_MarginalDistribution)->Arg(64)->Arg(256);

void BM_Measure(benchmark::State& state) {
  const RegisterLayout layout({state.range(0)});
  const StateVector sv = uniform_state(layout);
  Rng rng(7);
  for (auto _ : state) {
    benchmark::DoNotOptimize(qlogic::measure(sv, 0, rng));
  }
}
BENCHMARK(BM_Measure)->Arg(1 << 10)->Arg(1 << 14);

void BM_ApplyFullUnitary(benchmark::State& state) {
  const std::int64_t s = state.range(0);
  const RegisterLayout layout({s});
  const qlogic::Unitary qft = qlogic::qft_unitary(s);
  const StateVector sv = uniform_state(layout);
  for (auto _ : state) {
    benchmark::DoNotOptimize(qlogic::apply(qft, sv));
  }
}
BENCHMARK(BM_ApplyFullUnitary)->Arg(64)->Arg(256)->Arg(1024);

void BM_ApplyPerRegister(benchmark::State& state) {
  // Fiberwise application against the strided input register of a two
  // register layout, the staging used by the period-finding loop.
  const std::int64_t s = state.range(0);
  const RegisterLayout layout({s, 16});
  const qlogic::Unitary qft = qlogic::qft_unitary(s);
  const StateVector sv = uniform_state(layout);
  for (auto _ : state) {
    benchmark::DoNotOptimize(qlogic::apply(qft, sv, 0));
  }
}
BENCHMARK(BM_ApplyPerRegister)->Arg(64)->Arg(256)->Arg(1024);

}  // namespace
