#include <benchmark/benchmark.h>

#include "mvsep/algebra.hpp"
#include "mvsep/separability.hpp"
#include "mvsep/terms.hpp"
#include "mvsep/topology.hpp"
#include "mvsep/verify/oracles.hpp"

namespace {

using mvsep::FiniteMV;

// Ł_m^k with m = 6: many divisibility-compatible component maps.
FiniteMV power(std::size_t k, std::int64_t m) { return FiniteMV(std::vector<std::int64_t>(k, m)); }

void BM_EnumerateHoms(benchmark::State& state) {
  const FiniteMV a = power(static_cast<std::size_t>(state.range(0)), 2);
  const FiniteMV b = power(static_cast<std::size_t>(state.range(0)), 6);
  for (auto _ : state) benchmark::DoNotOptimize(mvsep::enumerateHoms(a, b));
}
BENCHMARK(BM_EnumerateHoms)->DenseRange(1, 5);

void BM_BruteForceHoms(benchmark::State& state) {
  const mvsep::verify::CarrierTables a(power(static_cast<std::size_t>(state.range(0)), 2));
  const mvsep::verify::CarrierTables b(power(static_cast<std::size_t>(state.range(0)), 2));
  for (auto _ : state) benchmark::DoNotOptimize(mvsep::verify::bruteForceHoms(a, b));
}
BENCHMARK(BM_BruteForceHoms)->DenseRange(1, 3);

void BM_Coproduct(benchmark::State& state) {
  const FiniteMV a = power(static_cast<std::size_t>(state.range(0)), 4);
  const FiniteMV b = power(static_cast<std::size_t>(state.range(0)), 6);
  for (auto _ : state) benchmark::DoNotOptimize(mvsep::coproductFinite(a, b));
}
BENCHMARK(BM_Coproduct)->RangeMultiplier(2)->Range(1, 16);

void BM_SeparabilityWitness(benchmark::State& state) {
  std::vector<std::int64_t> orders;
  for (std::int64_t m = 1; m <= state.range(0); ++m) orders.push_back(m);
  const FiniteMV a(orders);
  for (auto _ : state) benchmark::DoNotOptimize(mvsep::separabilityWitness(a));
}
BENCHMARK(BM_SeparabilityWitness)->DenseRange(1, 6);

void BM_GeneratedSubalgebra(benchmark::State& state) {
  const auto q = state.range(0);
  const FiniteMV a({q, q + 1});
  const std::vector<mvsep::Element> gens{a.element({mvsep::Fraction(1, q), mvsep::Fraction(1, q + 1)})};
  for (auto _ : state) benchmark::DoNotOptimize(mvsep::generatedSubalgebra(a, gens));
}
BENCHMARK(BM_GeneratedSubalgebra)->RangeMultiplier(2)->Range(2, 32);

void BM_Components(benchmark::State& state) {
  const auto spaces = mvsep::verify::allTopologies(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    for (const auto& x : spaces) benchmark::DoNotOptimize(mvsep::components(x));
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * spaces.size()));
}
BENCHMARK(BM_Components)->DenseRange(3, 5);

void BM_GammaCompare(benchmark::State& state) {
  const auto spaces = mvsep::verify::topologiesUpToHomeomorphism(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    for (const auto& x : spaces) {
      for (const auto& y : spaces) benchmark::DoNotOptimize(mvsep::gammaCompare(x, y));
    }
  }
}
BENCHMARK(BM_GammaCompare)->DenseRange(2, 4);

}  // namespace

BENCHMARK_MAIN();
