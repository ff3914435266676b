#include <benchmark/benchmark.h>

#include <string>
#include <utility>
#include <vector>

#include "qqkit/affine.hpp"
#include "qqkit/coefficient.hpp"
#include "qqkit/engine.hpp"
#include "qqkit/higgs.hpp"
#include "qqkit/quiver.hpp"
#include "qqkit/verify.hpp"

using namespace qq;

static void ExpandA1(benchmark::State& state) {
  const Quiver q = Quiver::builtin("A1");
  const WeightConfig w = WeightConfig::generic(q, {{"1", static_cast<int>(state.range(0))}});
  for (auto _ : state) {
    Character ch = expand(q, w);
    benchmark::DoNotOptimize(ch);
  }
}
BENCHMARK(ExpandA1)->DenseRange(2, 6)->Unit(benchmark::kMillisecond);

static void ExpandBC2(benchmark::State& state) {
  const Quiver q = Quiver::builtin("BC2");
  const WeightConfig w = WeightConfig::generic(q, {{"1", 2}, {"2", 0}});
  for (auto _ : state) {
    Character ch = expand(q, w);
    benchmark::DoNotOptimize(ch);
  }
}
BENCHMARK(ExpandBC2)->Unit(benchmark::kMillisecond);

static void HiggsKRA1(benchmark::State& state) {
  const Quiver q = Quiver::builtin("A1");
  const int w = static_cast<int>(state.range(0));
  const Character full = expand(q, WeightConfig::generic(q, {{"1", w}}));
  const Substitution sigma = parameter_substitution("1", kr_params(q, "1", w, 1));
  for (auto _ : state) {
    HiggsResult h = higgs(full, sigma);
    benchmark::DoNotOptimize(h);
  }
}
BENCHMARK(HiggsKRA1)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);

static void AffineA0(benchmark::State& state) {
  const Quiver q = Quiver::builtin("A0hat");
  const WeightConfig w = WeightConfig::generic(q, {{"0", 2}});
  for (auto _ : state) {
    Character ch = affine_character(q, w, static_cast<int>(state.range(0)), 1);
    benchmark::DoNotOptimize(ch);
  }
}
BENCHMARK(AffineA0)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

static void CoefficientEquality(benchmark::State& state) {
  const Monomial x1(Generator::x("1", 1)), x2(Generator::x("1", 2));
  Coefficient a = s_function(x2 / x1) * s_function_r(x1 / x2, 2) + Coefficient::monomial(Monomial::q1());
  Coefficient b = Coefficient::monomial(Monomial::q1()) + s_function_r(x1 / x2, 2) * s_function(x2 / x1);
  for (auto _ : state) benchmark::DoNotOptimize(a.equals(b));
}
BENCHMARK(CoefficientEquality);

static void VerifyCorpus(benchmark::State& state) {
  const std::vector<Fixture> corpus = load_corpus(QQKIT_FIXTURE_DIR);
  for (auto _ : state) {
    VerifyReport r = verify(corpus, 1);
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(VerifyCorpus)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
