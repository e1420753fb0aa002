#include "lefschetz/constructions/auroux.hpp"
#include "lefschetz/constructions/determinant.hpp"
#include "lefschetz/symplectic/analysis.hpp"

#include <benchmark/benchmark.h>

using namespace lefschetz;

namespace {

const char* kNil6 = "0,0,0,12,14,15+23+24";
const char* kSolv6 = "0,0,-13-25,14-26,-15,16";

SymplecticModel nil6_model() {
  const auto ls = parse_structure(kNil6);
  return SymplecticModel(ls, parse_form("16+25-34", 6, 2));
}

void BM_CohomologyNil6(benchmark::State& state) {
  const auto ls = parse_structure(kNil6);
  for (auto _ : state) benchmark::DoNotOptimize(cohomology(ls).betti());
}
BENCHMARK(BM_CohomologyNil6);

void BM_CohomologyTorus(benchmark::State& state) {
  std::string d = "0";
  for (int i = 1; i < state.range(0); ++i) d += ",0";
  const auto ls = parse_structure(d);
  for (auto _ : state) benchmark::DoNotOptimize(cohomology(ls).betti());
}
BENCHMARK(BM_CohomologyTorus)->DenseRange(4, 10, 2);

void BM_SymplecticModelSolv6(benchmark::State& state) {
  const auto ls = parse_structure(kSolv6);
  const auto w = parse_form("12+36+45", 6, 2);
  for (auto _ : state) benchmark::DoNotOptimize(SymplecticModel(ls, w).dim());
}
BENCHMARK(BM_SymplecticModelSolv6);

void BM_IdentitySuiteNil6(benchmark::State& state) {
  const auto m = nil6_model();
  for (auto _ : state) benchmark::DoNotOptimize(verify_operator_identities(m).basis_forms);
}
BENCHMARK(BM_IdentitySuiteNil6);

void BM_HarmonicProductRing(benchmark::State& state) {
  const auto x = kunneth(nil6_model().ring(), cp_ring(static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(harmonic_dims(x).betti_hr);
}
BENCHMARK(BM_HarmonicProductRing)->Arg(2)->Arg(4);

void BM_AurouxRankThree(benchmark::State& state) {
  const auto base = nil6_model().ring();
  const auto x = kunneth(base, cp_ring(4));
  const auto a = x.tensor(base.class_of(parse_form("26-45", 6, 2)), x.right_factor().unit());
  const auto c = whitney_sum(x, {a}, 1, {Scalar(-1) * a, x.cup(a, a)}, 2);
  for (auto _ : state) benchmark::DoNotOptimize(auroux_b3hr({x, 3, c}).b3hr);
}
BENCHMARK(BM_AurouxRankThree);

void BM_PairingDeterminant(benchmark::State& state) {
  const int mu = static_cast<int>(state.range(0));
  const auto a = Matrix<Scalar>::identity(2);
  for (auto _ : state) benchmark::DoNotOptimize(pairing_determinant_check({14, 6, 2 * mu, mu, a}).holds);
}
BENCHMARK(BM_PairingDeterminant)->DenseRange(1, 3);

}  // namespace

BENCHMARK_MAIN();
