#include <benchmark/benchmark.h>

#include "orbsym/catalog.hpp"
#include "orbsym/genericity.hpp"
#include "orbsym/polarize.hpp"
#include "orbsym/rng.hpp"
#include "orbsym/stabilizer.hpp"

using namespace orbsym;

namespace {

const ToleranceConfig kTol{};

CMatrix random_matrix(Eigen::Index n, std::uint64_t seed) {
  SplitMix64 rng(seed);
  CMatrix m(n, n);
  for (Eigen::Index c = 0; c < n; ++c)
    for (Eigen::Index r = 0; r < n; ++r)
      m(r, c) = Cplx(rng.next_gaussian(), rng.next_gaussian());
  return m;
}

PointConfiguration certified_orbit(const std::vector<CMatrix>& gens,
                                   std::uint64_t seed) {
  const FiniteMatrixGroup g = close(gens, kTol);
  return orbit(g, random_unit_vector(g.n, substream_seed(seed, 0)), kTol);
}

void BM_CloseQ8(benchmark::State& state) {
  const auto gens = catalog::quaternion8();
  for (auto _ : state)
    benchmark::DoNotOptimize(close(gens, kTol));
}
BENCHMARK(BM_CloseQ8)->Unit(benchmark::kMicrosecond);

void BM_CloseD8(benchmark::State& state) {
  const auto gens = catalog::dihedral8();
  for (auto _ : state)
    benchmark::DoNotOptimize(close(gens, kTol));
}
BENCHMARK(BM_CloseD8)->Unit(benchmark::kMicrosecond);

void BM_Certify(benchmark::State& state) {
  const FiniteMatrixGroup g = close(catalog::quaternion8(), kTol);
  const CVector x = random_unit_vector(2, substream_seed(0, 0));
  for (auto _ : state)
    benchmark::DoNotOptimize(certify(g, x, kTol));
}
BENCHMARK(BM_Certify)->Unit(benchmark::kMicrosecond);

void BM_SetwiseStabilizer(benchmark::State& state) {
  const PointConfiguration orb = certified_orbit(catalog::quaternion8(), 1);
  for (auto _ : state)
    benchmark::DoNotOptimize(setwise_stabilizer(orb, kTol));
}
BENCHMARK(BM_SetwiseStabilizer)->Unit(benchmark::kMicrosecond);

void BM_BruteStabilizer(benchmark::State& state) {
  const PointConfiguration orb = certified_orbit(catalog::quaternion8(), 1);
  for (auto _ : state)
    benchmark::DoNotOptimize(brute_stabilizer(orb, kTol));
}
BENCHMARK(BM_BruteStabilizer)->Unit(benchmark::kMillisecond);

void BM_Polarize(benchmark::State& state) {
  const Eigen::Index n = state.range(0);
  const CMatrix m = random_matrix(n, 99);
  const auto q = quadratic_form(m);
  for (auto _ : state)
    benchmark::DoNotOptimize(polarize(q, n, kTol));
  state.SetComplexityN(n);
}
BENCHMARK(BM_Polarize)->DenseRange(1, 6)->Unit(benchmark::kMicrosecond)->Complexity();

void BM_VerifySample(benchmark::State& state) {
  const FiniteMatrixGroup g = close({catalog::rotation90()}, kTol);
  for (auto _ : state)
    benchmark::DoNotOptimize(sample(g, static_cast<std::size_t>(state.range(0)),
                                    42, kTol, true));
}
BENCHMARK(BM_VerifySample)->Arg(10)->Arg(100)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
