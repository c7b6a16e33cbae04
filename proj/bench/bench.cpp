// Microbenchmarks for the hot paths: the intersection pairing and the
// derived-parity series.

#include <benchmark/benchmark.h>

#include "kpar/derived.hpp"
#include "kpar/parity.hpp"
#include "kpar/surface.hpp"

using namespace kpar;

static const char* kCode41 = "O1-O2-U1-U2-O3-O4-U3-U4-";
static const char* kCode52012 = "O1-O2+O3-U1-O4-U3-O5-U4-U2+U5-";

static void BM_PairingMatrix(benchmark::State& state) {
  GaussDiagram d = parse_gauss_code(kCode52012);
  for (auto _ : state) benchmark::DoNotOptimize(pairing_matrix(d));
}
BENCHMARK(BM_PairingMatrix);

static void BM_DerivedSeries(benchmark::State& state) {
  GaussDiagram d = parse_gauss_code(kCode41);
  for (auto _ : state) benchmark::DoNotOptimize(derived_series(d, 8));
}
BENCHMARK(BM_DerivedSeries);

static void BM_ParityCycle(benchmark::State& state) {
  GaussDiagram d = parse_gauss_code(kCode41);
  Rule ip = rule_ip();
  for (auto _ : state) benchmark::DoNotOptimize(parity_cycle_of_rule(ip, d));
}
BENCHMARK(BM_ParityCycle);

BENCHMARK_MAIN();
