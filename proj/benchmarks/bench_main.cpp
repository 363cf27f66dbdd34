#include <benchmark/benchmark.h>

#include "torideg/dataset.hpp"
#include "torideg/degeneration.hpp"
#include "torideg/io.hpp"
#include "torideg/tropical.hpp"
#include "torideg/valuation.hpp"

using namespace torideg;

namespace {

Ideal curve() { return parse_ideal("ring x,y,z\ny^2*z - x^3 + z^3\n"); }

Ideal twisted_cubic() { return parse_ideal("ring a,b,c,d\na*c - b^2\nb*d - c^2\na*d - b*c\n"); }

const Dataset& gr36() {
  static const Dataset d = Dataset::load("gr36");
  return d;
}

void BM_BuchbergerCurveLex(benchmark::State& state) {
  Ideal I = curve();
  for (auto _ : state) benchmark::DoNotOptimize(buchberger(I, TermOrder::lex()));
}
BENCHMARK(BM_BuchbergerCurveLex);

void BM_BuchbergerTwistedCubic(benchmark::State& state) {
  Ideal I = twisted_cubic();
  for (auto _ : state) benchmark::DoNotOptimize(buchberger(I, TermOrder::grevlex()));
}
BENCHMARK(BM_BuchbergerTwistedCubic);

void BM_BuchbergerGr36(benchmark::State& state) {
  const Ideal& I = gr36().ideal();
  for (auto _ : state) benchmark::DoNotOptimize(buchberger(I, TermOrder::grevlex()));
}
BENCHMARK(BM_BuchbergerGr36)->Unit(benchmark::kMillisecond);

void BM_GroebnerFanCurve(benchmark::State& state) {
  Ideal I = curve();
  for (auto _ : state) benchmark::DoNotOptimize(gfan_traverse(I));
}
BENCHMARK(BM_GroebnerFanCurve)->Unit(benchmark::kMillisecond);

void BM_TropicalizeTwistedCubic(benchmark::State& state) {
  Ideal I = twisted_cubic();
  for (auto _ : state) benchmark::DoNotOptimize(tropicalize(I));
}
BENCHMARK(BM_TropicalizeTwistedCubic)->Unit(benchmark::kMillisecond);

void BM_ConvexHull(benchmark::State& state) {
  const long n = state.range(0);
  QMatrix pts;
  std::uint64_t x = 12345;
  for (long k = 0; k < n; ++k) {
    QVector p;
    for (int j = 0; j < 3; ++j) {
      x = x * 6364136223846793005ULL + 1442695040888963407ULL;
      p.emplace_back(static_cast<long>((x >> 33) % 41) - 20);
    }
    pts.push_back(p);
  }
  for (auto _ : state) benchmark::DoNotOptimize(convex_hull(pts).facets().size());
}
BENCHMARK(BM_ConvexHull)->Arg(16)->Arg(64)->Unit(benchmark::kMillisecond);

void BM_InitialIdealGr36(benchmark::State& state) {
  const Dataset& d = gr36();
  QVector w = to_rational(d.resolve("g123456"));
  for (auto _ : state) benchmark::DoNotOptimize(initial_ideal(d.ideal(), w));
}
BENCHMARK(BM_InitialIdealGr36)->Unit(benchmark::kMillisecond);

void BM_CertifyCurveRay(benchmark::State& state) {
  Ideal I = curve();
  ZMatrix M = {{1, 1, 1}, {2, 3, 0}};
  for (auto _ : state) benchmark::DoNotOptimize(certify_prime_cone(I, M, 1));
}
BENCHMARK(BM_CertifyCurveRay)->Unit(benchmark::kMillisecond);

void BM_HilbertSliceCurveFiber(benchmark::State& state) {
  Ideal I = curve();
  LiftedIdeal L = lift_ideal(I, buchberger(I, TermOrder::grevlex()), {{2, 3, 0}, {1, 0, 1}});
  Ideal F = fiber(L, {Rational(2), Rational(3)});
  for (auto _ : state) benchmark::DoNotOptimize(hilbert_slice(F, {state.range(0)}));
}
BENCHMARK(BM_HilbertSliceCurveFiber)->Arg(4)->Arg(8);

}  // namespace
BENCHMARK_MAIN();
