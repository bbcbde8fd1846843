#include <benchmark/benchmark.h>

#include "slocc/catalog.hpp"
#include "slocc/classify.hpp"
#include "slocc/conjugacy.hpp"
#include "slocc/invariants.hpp"
#include "slocc/jordan.hpp"

using namespace slocc;

namespace {

StateVector generic_state() {
  return StateVector::parse("e0000 + 2*e0011 - e0101 + 3*e1001 + e1110 + (1+i)*e1111 - 1/2*e0110");
}

void BM_Invariants(benchmark::State& state) {
  StateVector x = generic_state();
  for (auto _ : state) benchmark::DoNotOptimize(evaluate_signature(x));
}
BENCHMARK(BM_Invariants);

void BM_JordanDecompose(benchmark::State& state) {
  StateVector x = StateVector::parse("2*u1 - 2*u4 + e1110 + e1101");
  for (auto _ : state) benchmark::DoNotOptimize(jordan_decompose(x));
}
BENCHMARK(BM_JordanDecompose)->Unit(benchmark::kMillisecond);

void BM_Centralizer(benchmark::State& state) {
  StateVector x = generic_state();
  for (auto _ : state) benchmark::DoNotOptimize(centralizer(x));
}
BENCHMARK(BM_Centralizer)->Unit(benchmark::kMillisecond);

void BM_TiedPairSeparation(benchmark::State& state) {
  const Catalog& cat = Catalog::instance();
  Ideal sys = conjugacy_system(cat.nilpotent_orbit(12), cat.nilpotent_orbit(16));
  for (auto _ : state) benchmark::DoNotOptimize(contains_one(sys));
}
BENCHMARK(BM_TiedPairSeparation)->Unit(benchmark::kMillisecond);

void BM_SConjugatePart(benchmark::State& state) {
  const Catalog& cat = Catalog::instance();
  for (auto _ : state)
    benchmark::DoNotOptimize(s_conjugate(cat.nilpotent_part(10, 9), cat.d_family_nilpotent(6)));
}
BENCHMARK(BM_SConjugatePart)->Unit(benchmark::kMillisecond);

void BM_FamilyOneParameters(benchmark::State& state) {
  InvariantSignature sig = evaluate_signature(StateVector::parse("2*u1 + 3*u2 + 4*u3 + 7*u4"));
  for (auto _ : state) benchmark::DoNotOptimize(semisimple_parameters(1, sig));
}
BENCHMARK(BM_FamilyOneParameters)->Unit(benchmark::kMillisecond);

void BM_ClassifyMixed(benchmark::State& state) {
  StateVector x = representative(OrbitClassLabel::parse("mixed/10,12"));
  for (auto _ : state) benchmark::DoNotOptimize(classify_state(x));
}
BENCHMARK(BM_ClassifyMixed)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
