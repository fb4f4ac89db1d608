#include "randnilp/commutator.hpp"
#include "randnilp/experiments.hpp"
#include "randnilp/kcoeff.hpp"
#include "randnilp/stepcheck.hpp"
#include "randnilp/walks.hpp"

#include <benchmark/benchmark.h>

#include <algorithm>

using namespace randnilp;

namespace {

// Balanced pair of words of length d with equal norm.
std::pair<BitWord, BitWord> balanced_pair(int d, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<std::uint8_t> x(static_cast<std::size_t>(d), 0);
  std::fill(x.begin(), x.begin() + d / 2, 1);
  auto y = x;
  std::shuffle(x.begin(), x.end(), rng);
  std::shuffle(y.begin(), y.end(), rng);
  return {BitWord(x), BitWord(y)};
}

// Alternating words; random pairs mostly die at the norm gate.
void BM_KCoeff(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  std::vector<std::uint8_t> xb, yb;
  for (int i = 0; i < d; ++i) {
    xb.push_back(i % 2 == 0 ? 1 : 0);
    yb.push_back(i % 2 == 0 ? 0 : 1);
  }
  const BitWord x(xb), y(yb);
  KEngine engine;
  for (auto _ : state) benchmark::DoNotOptimize(engine(x, y));
  state.counters["states"] = static_cast<double>(engine.last_state_count());
}
BENCHMARK(BM_KCoeff)->Arg(50)->Arg(100)->Arg(200)->Arg(400)->Unit(benchmark::kMillisecond);

void BM_BandRecursion(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Rng rng(2);
  const auto pv = sample_profile(n, 10LL * n * n, rng);
  const auto pw = sample_profile(n, 10LL * n * n, rng);
  const auto x = balanced_pair(n - 1, 3).first;
  for (auto _ : state) benchmark::DoNotOptimize(top_entry(x, pv, pw));
}
BENCHMARK(BM_BandRecursion)->Arg(16)->Arg(64)->Arg(256)->Unit(benchmark::kMicrosecond);

void BM_Multiply(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Rng rng(4);
  const auto a = walk_to_matrix(sample_walk(n, 10LL * n * n, rng));
  const auto b = walk_to_matrix(sample_walk(n, 10LL * n * n, rng));
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_Multiply)->Arg(8)->Arg(16)->Arg(32)->Arg(64)->Unit(benchmark::kMicrosecond);

void BM_DecideFullStep(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto walks = trial_walks(5, n, 10LL * n * n, 0);
  const auto pv = superdiagonal(walks.v), pw = superdiagonal(walks.w);
  for (auto _ : state) benchmark::DoNotOptimize(decide_full_step(pv, pw));
}
BENCHMARK(BM_DecideFullStep)->Arg(12)->Arg(24)->Arg(48)->Unit(benchmark::kMicrosecond);

void BM_ExactStep(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto walks = trial_walks(6, n, 1LL * n * n, 0);
  const auto v = walk_to_matrix(walks.v), w = walk_to_matrix(walks.w);
  for (auto _ : state) benchmark::DoNotOptimize(exact_step(v, w));
}
BENCHMARK(BM_ExactStep)->Arg(6)->Arg(9)->Arg(12)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
