#include <benchmark/benchmark.h>

#include <random>

#include "philucas/bounds.hpp"
#include "philucas/lemmas.hpp"
#include "philucas/search.hpp"

using namespace philucas;

namespace {

std::vector<Int> random_ints(unsigned bits, std::size_t count) {
  std::mt19937_64 rng(12345);
  std::vector<Int> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    Int v = 1;
    for (unsigned b = 0; b < bits; b += 64) {
      v <<= 64;
      v |= Int(static_cast<unsigned long>(rng()));
    }
    v |= 1;
    out.push_back(v % (Int(1) << bits));
  }
  return out;
}

void BM_Factor64(benchmark::State& state) {
  const auto inputs = random_ints(63, 256);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(factor(inputs[i++ % inputs.size()]));
  }
}
BENCHMARK(BM_Factor64);

void BM_EulerPhiSmall(benchmark::State& state) {
  long n = 100'000;
  for (auto _ : state) {
    benchmark::DoNotOptimize(euler_phi(Int(n)));
    if (++n > 110'000) n = 100'000;
  }
}
BENCHMARK(BM_EulerPhiSmall);

void BM_RankOfApparition(benchmark::State& state) {
  const std::vector<long> primes = {99991, 99989, 99971, 99961, 99929};
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        rank_of_apparition(Int(3), Int(1), Int(primes[i++ % primes.size()])));
  }
}
BENCHMARK(BM_RankOfApparition);

void BM_Lemma36Row(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(lemma36_scan(3, 73, 173, 73));
  }
}
BENCHMARK(BM_Lemma36Row);

void BM_ZSolveSlice(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(z_solve(EquationId::E16, 12, 11, 9, 2, 23));
  }
}
BENCHMARK(BM_ZSolveSlice);

void BM_SweepTheorem14Box(benchmark::State& state) {
  SearchBox box;
  box.x_max = 12;
  box.m_max = 9;
  box.z_le_x_plus_y = true;
  box.z_exclusions = {2};
  box.coprime_mn_only = true;
  for (auto _ : state) {
    benchmark::DoNotOptimize(sweep(EquationId::E16, box));
  }
}
BENCHMARK(BM_SweepTheorem14Box);

void BM_FullBoundAudit(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(full_audit());
  }
}
BENCHMARK(BM_FullBoundAudit);

}  // namespace

BENCHMARK_MAIN();
