#include <benchmark/benchmark.h>

#include "g2dtg/g2dtg.hpp"

using namespace g2dtg;

namespace {

void BM_FactorizeKernelValues(benchmark::State &state) {
  const auto p = CaseParameter::from_n(FamilyKind::Ree, static_cast<std::uint32_t>(state.range(0)));
  const BigInt target = p.q * p.q - p.q + 1;
  for (auto _ : state)
    benchmark::DoNotOptimize(factorize(target));
}
BENCHMARK(BM_FactorizeKernelValues)->DenseRange(1, 8);

void BM_ExpCompare(benchmark::State &state) {
  const auto n = static_cast<std::uint32_t>(state.range(0));
  const auto p = CaseParameter::from_n(FamilyKind::Ree, n);
  const BigInt v = coset_index(p);
  const BigInt a = BigInt(3) * (p.q + 6);
  const BigInt b(8 * 2 * (2 * n + 1));
  for (auto _ : state)
    benchmark::DoNotOptimize(exp_compare(BigInt(2), a, v, b));
}
BENCHMARK(BM_ExpCompare)->DenseRange(1, 8);

void BM_Instantiate(benchmark::State &state) {
  const auto table = build_table(FamilyKind::Subfield);
  const auto p = CaseParameter::from_n(FamilyKind::Subfield, static_cast<std::uint32_t>(state.range(0)));
  for (auto _ : state)
    benchmark::DoNotOptimize(instantiate(table, p));
}
BENCHMARK(BM_Instantiate)->DenseRange(1, 6);

void BM_SymbolicMass(benchmark::State &state) {
  const auto table = build_table(FamilyKind::Subfield);
  for (auto _ : state)
    benchmark::DoNotOptimize(verify_mass_symbolic(table));
}
BENCHMARK(BM_SymbolicMass);

void BM_AnalyzeRee(benchmark::State &state) {
  AnalysisOptions o;
  o.parallel = state.range(0) != 0;
  for (auto _ : state)
    benchmark::DoNotOptimize(analyze(FamilyKind::Ree, 0, 8, o));
}
BENCHMARK(BM_AnalyzeRee)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
