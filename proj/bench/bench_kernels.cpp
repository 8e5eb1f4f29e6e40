#include <benchmark/benchmark.h>

#include "lincomb/extremal_search.hpp"
#include "lincomb/jacobi.hpp"
#include "lincomb/random.hpp"
#include "lincomb/spectrum.hpp"

using namespace lincomb;

namespace {

std::vector<double> random_adjacency(std::size_t n) {
  Rng rng = SeedStream(n).child("bench").engine();
  return random_graph(n, 0.5, rng).adjacency_matrix();
}

JacobiOptions options(std::size_t n) {
  JacobiOptions o;
  o.off_tolerance = kOffTolerancePerVertex * static_cast<double>(n);
  return o;
}

void BM_JacobiCyclicSerial(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto a = random_adjacency(n);
  for (auto _ : state) benchmark::DoNotOptimize(jacobi_cyclic_serial(a, n, options(n)));
}

void BM_JacobiRoundRobin(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto a = random_adjacency(n);
  for (auto _ : state) benchmark::DoNotOptimize(jacobi_round_robin(a, n, options(n)));
}

const LinearForm kTop2 = LinearForm::from_parts({1, 1});

void BM_ExhaustiveSerial(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(exhaustive_serial(n, kTop2, FamilyPredicate::all()));
}

void BM_ExhaustiveParallel(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(exhaustive(n, kTop2, FamilyPredicate::all()));
}

}  // namespace

BENCHMARK(BM_JacobiCyclicSerial)->Arg(8)->Arg(32)->Arg(100)->Arg(200)->Arg(400)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_JacobiRoundRobin)->Arg(8)->Arg(32)->Arg(100)->Arg(200)->Arg(400)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ExhaustiveSerial)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ExhaustiveParallel)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
