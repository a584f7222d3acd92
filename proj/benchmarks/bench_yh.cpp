#include <yh/algebra.hpp>
#include <yh/esystem.hpp>
#include <yh/invariants.hpp>
#include <yh/quotients.hpp>
#include <yh/trace.hpp>

#include <benchmark/benchmark.h>

namespace {

using namespace yh;

const char* kWords[] = {"s1 s1 s1", "s1 -s2 s1 -s2", "s1 s2 s3 -s1 s2 -s3 s1 s2"};

void BM_MapToAlgebra(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  const BraidWord b = parse_braid(kWords[state.range(1)]);
  for (auto _ : state) benchmark::DoNotOptimize(map_to_algebra(b, d));
}
BENCHMARK(BM_MapToAlgebra)->ArgsProduct({{1, 2, 3}, {0, 1, 2}});

void BM_Product(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  const AlgebraElement a = map_to_algebra(parse_braid("t1 s1 s2 -s1 t3^2 s3"), d);
  const AlgebraElement b = map_to_algebra(parse_braid("s2 t2 -s3 s1 s2"), d);
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_Product)->Arg(1)->Arg(2)->Arg(3);

// A fresh engine each round, so no memo survives between iterations.
void BM_TraceCold(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  const AlgebraElement e = map_to_algebra(parse_braid(kWords[2]), d);
  const TraceParams params = specialized_params(build_solution(d, {0}));
  for (auto _ : state) {
    TraceEngine engine(params);
    benchmark::DoNotOptimize(engine.trace(e));
  }
}
BENCHMARK(BM_TraceCold)->Arg(1)->Arg(2)->Arg(3);

void BM_Invariant(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  const BraidWord b = parse_braid(kWords[state.range(1)]);
  for (auto _ : state) benchmark::DoNotOptimize(invariant(b, BraidKind::classical, d, {0}));
}
BENCHMARK(BM_Invariant)->ArgsProduct({{1, 3}, {0, 1, 2}});

void BM_Jones(benchmark::State& state) {
  const BraidWord b = parse_braid(kWords[state.range(0)]);
  for (auto _ : state) benchmark::DoNotOptimize(jones(b));
}
BENCHMARK(BM_Jones)->DenseRange(0, 2);

void BM_Skein(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  const BraidWord b = parse_braid("n=3 s1 -s2 s1 s2");
  for (auto _ : state) benchmark::DoNotOptimize(verify_skein(SkeinKind::framed, b, 1, d, {0}));
}
BENCHMARK(BM_Skein)->Arg(1)->Arg(2)->Arg(3);

void BM_EnumerateSolutions(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_solutions(d));
}
BENCHMARK(BM_EnumerateSolutions)->Arg(4)->Arg(6)->Arg(8);

void BM_QuotientCheck(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  const ESolution sol = build_solution(d, {0});
  const QuotientCheck check{QuotientKind::ytl, d, QuotientParams{RatFunc(-1), sol.x}};
  for (auto _ : state) benchmark::DoNotOptimize(trace_vanishes_on_ideal(check));
}
BENCHMARK(BM_QuotientCheck)->Arg(1)->Arg(2)->Arg(3);

void BM_IdealInclusion(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  const AlgebraElement g = quotient_generator(QuotientKind::ytl, d, 3, 1);
  const AlgebraElement r = quotient_generator(QuotientKind::ftl, d, 3, 1);
  for (auto _ : state) benchmark::DoNotOptimize(ideal_inclusion(r, g));
}
BENCHMARK(BM_IdealInclusion)->Arg(1)->Arg(2);

}  // namespace

BENCHMARK_MAIN();
