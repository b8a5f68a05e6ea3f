#include <benchmark/benchmark.h>

#include "arrangealex/corpus.hpp"
#include "arrangealex/fox.hpp"
#include "arrangealex/poly_matrix.hpp"
#include "arrangealex/roots.hpp"

using namespace arrangealex;

static void BM_Presentation(benchmark::State& st) {
  const auto& c = corpus_case(st.range(0) ? "falk-a2" : "four-line-tree");
  for (auto _ : st) benchmark::DoNotOptimize(presentation(c.arrangement, c.seed));
}
BENCHMARK(BM_Presentation)->Arg(0)->Arg(1);

static void BM_Delta1Character(benchmark::State& st) {
  const auto& c = corpus_case("falk-a1");
  Presentation p = presentation(c.arrangement, c.seed);
  TwistSpec s = generic_character_twist(c.arrangement.size());
  for (auto _ : st) benchmark::DoNotOptimize(delta1(p, s));
}
BENCHMARK(BM_Delta1Character);

static void BM_Delta1RankTwo(benchmark::State& st) {
  const auto& c = corpus_case("parallel-pair-transversal");
  Presentation p = presentation(c.arrangement, c.seed);
  TwistSpec s = two_dimensional_twist(c.arrangement, p);
  for (auto _ : st) benchmark::DoNotOptimize(delta1(p, s));
}
BENCHMARK(BM_Delta1RankTwo);

static void BM_SmithNormalForm(benchmark::State& st) {
  const auto n = static_cast<std::size_t>(st.range(0));
  PolyMatrix m(n, n);
  LaurentPoly t = LaurentPoly::t();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = t.pow((i * 7 + j * 3) % 4) - LaurentPoly::t(0) * Scalar(long((i + j) % 3));
  for (auto _ : st) benchmark::DoNotOptimize(smith_normal_form(m));
}
BENCHMARK(BM_SmithNormalForm)->Arg(4)->Arg(8)->Arg(12);

static void BM_FalkSearch(benchmark::State& st) {
  const auto& a1 = corpus_case("falk-a1").arrangement;
  const auto& a2 = corpus_case("falk-a2").arrangement;
  FalkSearchOptions opt;
  opt.workers = 1;
  for (auto _ : st) benchmark::DoNotOptimize(falk_distinguish(a1, a2, opt));
}
BENCHMARK(BM_FalkSearch)->Unit(benchmark::kMillisecond);

static void BM_CyclotomicMultiply(benchmark::State& st) {
  const long n = st.range(0);
  Scalar x = Scalar::zeta(n) + Scalar(2), y = Scalar::zeta(n, 3) - Scalar::zeta(n, n - 1);
  for (auto _ : st) {
    x = x * y;
    benchmark::DoNotOptimize(x);
    if (st.iterations() % 64 == 0) x = Scalar::zeta(n) + Scalar(2);
  }
}
BENCHMARK(BM_CyclotomicMultiply)->Arg(7)->Arg(60);
BENCHMARK_MAIN();
