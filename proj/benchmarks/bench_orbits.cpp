#include <benchmark/benchmark.h>

#include "reductlab/lattice.hpp"
#include "reductlab/orbits.hpp"

using namespace reductlab;

static void BM_EnumerateTypes(benchmark::State& state) {
  int k = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_ktypes(k));
}
BENCHMARK(BM_EnumerateTypes)->Arg(3)->Arg(4)->Arg(5);

static void BM_OrbitPartition(benchmark::State& state) {
  int k = static_cast<int>(state.range(0));
  GenSet gs = GenSet::parse("cdgh");
  for (auto _ : state) benchmark::DoNotOptimize(orbit_partition(gs, k));
}
BENCHMARK(BM_OrbitPartition)->Arg(3)->Arg(4)->Arg(5);

static void BM_PreservesRow(benchmark::State& state) {
  OrbitPartition p = orbit_partition(GenSet::parse("cdgh"), 4);
  Relation sep = named_relation("Sep");
  for (auto _ : state) benchmark::DoNotOptimize(preserves(p, sep));
}
BENCHMARK(BM_PreservesRow);

static void BM_OracleOrbits(benchmark::State& state) {
  GenSet gs = GenSet::parse("g");
  for (auto _ : state) benchmark::DoNotOptimize(oracle_orbits(gs, 3, 16, 3));
}
BENCHMARK(BM_OracleOrbits);

static void BM_FullSignatureStore(benchmark::State& state) {
  for (auto _ : state) {
    SignatureStore store;
    store.precompute_all(static_cast<int>(state.range(0)));
    benchmark::DoNotOptimize(store.signature(kAllGens));
  }
}
BENCHMARK(BM_FullSignatureStore)->Arg(1)->Arg(2)->Unit(benchmark::kSecond);

BENCHMARK_MAIN();
