#include <benchmark/benchmark.h>

#include <cstdint>
#include <vector>

#include "qlogic/random.hpp"
#include "qlogic/subspace.hpp"
#include "qlogic/types.hpp"

namespace {

using qlogic::Rng;
using qlogic::Subspace;
using qlogic::Vector;

std::vector<Vector> random_vectors(std::int64_t ambient, std::int64_t count,
                                   std::uint64_t seed) {
  Rng rng(seed);
  std::vector<Vector> vectors;
  vectors.reserve(count);
  for (std::int64_t i = 0; i < count; ++i) {
    Vector v(ambient);
    for (std::int64_t k = 0; k < ambient; ++k) {
      v[k] = qlogic::Complex{qlogic::uniform_unit(rng) - 0.5,
                             qlogic::uniform_unit(rng) - 0.5};
    }
    vectors.push_back(v.normalized());
  }
  return vectors;
}

Subspace random_subspace(std::int64_t ambient, std::int64_t dim,
                         std::uint64_t seed) {
  return qlogic::span(random_vectors(ambient, dim, seed), ambient);
}

void BM_Span(benchmark::State& state) {
  const std::vector<Vector> vectors = random_vectors(64, state.range(0), 1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(qlogic::span(vectors, 64));
  }
}
BENCHMARK(BM_Span)->Arg(4)->Arg(16)->Arg(48);

void BM_Meet(benchmark::State& state) {
  // Dominated by the eigendecomposition of the projector sandwich.
  const std::int64_t ambient = state.range(0);
  const Subspace a = random_subspace(ambient, ambient / 4, 2);
  const Subspace b = random_subspace(ambient, ambient / 4, 3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(qlogic::meet(a, b));
  }
}
BENCHMARK(BM_Meet)->Arg(16)->Arg(64)->Arg(128);

void BM_Join(benchmark::State& state) {
  const std::int64_t ambient = state.range(0);
  const Subspace a = random_subspace(ambient, ambient / 4, 4);
  const Subspace b = random_subspace(ambient, ambient / 4, 5);
  for (auto _ : state) {
    benchmark::DoNotOptimize(qlogic::join(a, b));
  }
}
BENCHMARK(BM_Join)->Arg(16)->Arg(64)->Arg(128);

void BM_Orthocomplement(benchmark::State& state) {
  const std::int64_t ambient = state.range(0);
  const Subspace a = random_subspace(ambient, ambient / 4, 6);
  for (auto _ : state) {
    benchmark::DoNotOptimize(qlogic::orthocomplement(a));
  }
}
BENCHMARK(BM_Orthocomplement)->Arg(16)->Arg(64)->Arg(128);

void BM_Commutes(benchmark::State& state) {
  const std::int64_t ambient = state.range(0);
  const Subspace a = random_subspace(ambient, ambient / 4, 7);
  const Subspace b = random_subspace(ambient, ambient / 4, 8);
  for (auto _ : state) {
    benchmark::DoNotOptimize(qlogic::commutes(a, b));
  }
}
BENCHMARK(BM_Commutes)->Arg(16)->Arg(64);

void BM_Contains(benchmark::State& state) {
  const Subspace a = random_subspace(256, 64, 9);
  const Vector v = random_vectors(256, 1, 10).front();
  for (auto _ : state) {
    benchmark::DoNotOptimize(qlogic::contains(a, v));
  }
}
BENCHMARK(BM_Contains);

}  // namespace
