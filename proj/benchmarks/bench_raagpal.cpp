#include <benchmark/benchmark.h>

#include <random>
#include <string>
#include <vector>

#include "raagpal/automorphism.hpp"
#include "raagpal/factorization.hpp"
#include "raagpal/matrix.hpp"
#include "raagpal/sampling.hpp"

using namespace raagpal;

namespace {

GraphPtr square() { return Graph::create({"a", "b", "c", "d"}, {{"a", "b"}, {"b", "c"}, {"c", "d"}, {"d", "a"}}); }

GraphPtr edgeless(std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back("v" + std::to_string(i));
  return Graph::create(names, {});
}

}  // namespace

static void BM_ReduceRawWord(benchmark::State& state) {
  const GraphPtr g = square();
  std::mt19937_64 rng(1);
  std::vector<LetterSeq> raw;
  for (int i = 0; i < 256; ++i) raw.push_back(random_raw_word(*g, static_cast<std::size_t>(state.range(0)), rng));
  std::size_t k = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(Word::reduce(g, raw[k++ % raw.size()]));
  }
}
BENCHMARK(BM_ReduceRawWord)->RangeMultiplier(4)->Range(8, 512);

static void BM_IsPalindrome(benchmark::State& state) {
  const GraphPtr g = square();
  const Corpus c = random_suite(g, SuiteKind::Palindromic, 64, 2, static_cast<std::size_t>(state.range(0)));
  std::size_t k = 0;
  for (auto _ : state) {
    const auto& a = c.automorphisms[k++ % c.automorphisms.size()];
    for (Vertex v = 0; v < g->size(); ++v) benchmark::DoNotOptimize(is_palindrome(a.image(v)));
  }
}
BENCHMARK(BM_IsPalindrome)->DenseRange(2, 10, 4);

static void BM_ComposeProducts(benchmark::State& state) {
  const GraphPtr g = edgeless(static_cast<std::size_t>(state.range(0)));
  const Corpus c = random_suite(g, SuiteKind::Centralizer, 64, 3);
  std::size_t k = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(compose(c.automorphisms[k % 64], c.automorphisms[(k + 1) % 64]));
    ++k;
  }
}
BENCHMARK(BM_ComposeProducts)->DenseRange(3, 6);

static void BM_FactorTheta(benchmark::State& state) {
  const GraphPtr g = edgeless(static_cast<std::size_t>(state.range(0)));
  const Corpus c = random_suite(g, SuiteKind::Pure, 64, 4);
  std::vector<IntMatrix> ms;
  for (const auto& a : c.automorphisms) ms.push_back(phi(a));
  std::size_t k = 0;
  for (auto _ : state) benchmark::DoNotOptimize(factor_theta(ms[k++ % ms.size()], *g));
}
BENCHMARK(BM_FactorTheta)->DenseRange(3, 6);

static void BM_FactorPurePalindromic(benchmark::State& state) {
  const GraphPtr g = square();
  const Corpus c = random_suite(g, SuiteKind::Pure, 32, 5, static_cast<std::size_t>(state.range(0)));
  std::size_t k = 0;
  for (auto _ : state) benchmark::DoNotOptimize(factor_pure_palindromic(c.automorphisms[k++ % 32]));
}
BENCHMARK(BM_FactorPurePalindromic)->DenseRange(2, 8, 3);

static void BM_TorelliSearch(benchmark::State& state) {
  const GraphPtr g = edgeless(3);
  const Automorphism tau = compose(chi1(g, 0, 1, 2), chi1(g, 1, 0, 2));
  for (auto _ : state) benchmark::DoNotOptimize(factor_torelli_bfs(tau));
}
BENCHMARK(BM_TorelliSearch)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
