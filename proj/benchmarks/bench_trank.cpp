#include <benchmark/benchmark.h>

#include <random>

#include "trank/abelian.hpp"
#include "trank/magnus.hpp"
#include "trank/novikov.hpp"
#include "trank/parser.hpp"
#include "trank/sigma.hpp"
#include "trank/smith.hpp"

using namespace trank;

namespace {

IntMatrix random_matrix(std::size_t n, int max_abs, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> entry(-max_abs, max_abs);
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m.at(i, j) = entry(rng);
  return m;
}

const Presentation& genus2() {
  static const Presentation p = parse_presentation("<a, b, c, d | [a,b] [c,d]>");
  return p;
}

}  // namespace

static void BM_SmithNormalForm(benchmark::State& state) {
  const IntMatrix m = random_matrix(static_cast<std::size_t>(state.range(0)), 9, 12345);
  for (auto _ : state) {
    benchmark::DoNotOptimize(smith_normal_form(m));
  }
}
BENCHMARK(BM_SmithNormalForm)->Arg(4)->Arg(6)->Arg(8);

static void BM_MagnusRewrite(benchmark::State& state) {
  const Presentation& p = genus2();
  const Character c{{1, -2, 3, 5}};
  for (auto _ : state) {
    benchmark::DoNotOptimize(tietze_simplify(magnus_rewrite(p, c)));
  }
}
BENCHMARK(BM_MagnusRewrite);

static void BM_NovikovB1(benchmark::State& state) {
  const Presentation& p = genus2();
  const Character c{{1, -2, 3, 5}};
  for (auto _ : state) {
    benchmark::DoNotOptimize(novikov_b1(p, c));
  }
}
BENCHMARK(BM_NovikovB1);

static void BM_CayleyBallFree(benchmark::State& state) {
  const Presentation p = parse_presentation("<a, b | >");
  const Oracle o(OracleKind::Free, p);
  for (auto _ : state) {
    benchmark::DoNotOptimize(cayley_ball(p, o, static_cast<int>(state.range(0))));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_CayleyBallFree)->DenseRange(3, 7)->Complexity();

static void BM_DehnNormalize(benchmark::State& state) {
  const Presentation& p = genus2();
  const Oracle o(OracleKind::Dehn, p);
  const Word r = p.relators()[0];
  const Word noisy = multiply(multiply(Word::single(2, 1), r), Word::single(0, -1));
  for (auto _ : state) {
    benchmark::DoNotOptimize(o.normalize(noisy));
  }
}
BENCHMARK(BM_DehnNormalize);

BENCHMARK_MAIN();
