#include "hss/jordan.hpp"
#include "hss/lm_map.hpp"
#include "hss/prng.hpp"
#include "hss/root_system.hpp"
#include "hss/tangent.hpp"

#include <benchmark/benchmark.h>

namespace {

void BM_PhiGrassmann44(benchmark::State& state) {
  const hss::HSSFamily f = hss::HSSFamily::grassmann(4, 4);
  hss::SplitMix64 rng(42);
  const hss::TangentVec v = hss::random_tangent_of_rank(f, 4, rng);
  for (auto _ : state) benchmark::DoNotOptimize(hss::phi_affine(f, v));
}
BENCHMARK(BM_PhiGrassmann44);

void BM_PhiFreudenthal(benchmark::State& state) {
  const hss::HSSFamily f = hss::HSSFamily::freudenthal();
  hss::SplitMix64 rng(42);
  const hss::TangentVec v = hss::random_tangent_of_rank(f, 3, rng);
  for (auto _ : state) benchmark::DoNotOptimize(hss::phi_affine(f, v));
}
BENCHMARK(BM_PhiFreudenthal);

void BM_BuildE7(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(hss::build_root_system_E7());
}
BENCHMARK(BM_BuildE7);

void BM_JordanAdj(benchmark::State& state) {
  hss::SplitMix64 rng(7);
  hss::RatVec coords(27);
  for (auto& c : coords) c = rng.small_int(5);
  const hss::JordanElem m = hss::jordan_from_coords(coords);
  for (auto _ : state) benchmark::DoNotOptimize(hss::jordan_adj(m));
}
BENCHMARK(BM_JordanAdj);

void BM_SubPfaffians8(benchmark::State& state) {
  const hss::HSSFamily f = hss::HSSFamily::orth_grassmann(8);
  hss::SplitMix64 rng(11);
  const hss::TangentVec v = hss::random_tangent_of_rank(f, 4, rng);
  const hss::RatMatrix& m = std::get<hss::RatMatrix>(v.payload);
  for (auto _ : state) benchmark::DoNotOptimize(hss::sub_pfaffians(m, 6));
}
BENCHMARK(BM_SubPfaffians8);

}  // namespace

BENCHMARK_MAIN();
