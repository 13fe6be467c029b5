#include <benchmark/benchmark.h>

#include <random>

#include "knotinv/corpus.hpp"
#include "knotinv/diagram.hpp"
#include "knotinv/exactlinalg.hpp"
#include "knotinv/linkform.hpp"
#include "knotinv/seifert.hpp"

using namespace knotinv;

namespace {

const std::vector<CorpusEntry>& corpus() {
  static const auto c = load_corpus(default_corpus_dir());
  return c;
}

// Knots with 3, 5, 7 and 9 crossings.
const char* knot_for(std::int64_t crossings) {
  switch (crossings) {
    case 3: return "3_1";
    case 5: return "5_2";
    case 7: return "7_4";
    default: return "9_42";
  }
}

IntegerSymmetricMatrix random_even(std::mt19937_64& rng, std::size_t n) {
  std::uniform_int_distribution<int> ent(-9, 9);
  IntegerMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    m(i, i) = 2 * ent(rng);
    for (std::size_t j = i + 1; j < n; ++j) m(i, j) = m(j, i) = ent(rng);
  }
  return IntegerSymmetricMatrix(std::move(m));
}

void BM_Bracket(benchmark::State& state) {
  const auto& d = *find_entry(corpus(), knot_for(state.range(0))).diagram;
  for (auto _ : state) benchmark::DoNotOptimize(jones_via_bracket(d, 22, 1));
}

void BM_QSkein(benchmark::State& state) {
  const auto& d = *find_entry(corpus(), knot_for(state.range(0))).diagram;
  for (auto _ : state) benchmark::DoNotOptimize(q_via_skein(d));
}

void BM_DeltaP(benchmark::State& state) {
  std::mt19937_64 rng(7);
  const auto m = random_even(rng, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(delta_p(m, 3));
}

void BM_WallDecompose(benchmark::State& state) {
  std::mt19937_64 rng(8);
  IntegerSymmetricMatrix m;
  do m = random_even(rng, static_cast<std::size_t>(state.range(0)));
  while (mpz_even_p(det_exact(m).get_mpz_t()));
  const LinkingFormPresentation form(m);
  for (auto _ : state) benchmark::DoNotOptimize(wall_decompose(form));
}

}  // namespace

BENCHMARK(BM_Bracket)->DenseRange(3, 9, 2);
BENCHMARK(BM_QSkein)->DenseRange(3, 9, 2);
BENCHMARK(BM_DeltaP)->RangeMultiplier(2)->Range(2, 16);
BENCHMARK(BM_WallDecompose)->RangeMultiplier(2)->Range(2, 8);

BENCHMARK_MAIN();
