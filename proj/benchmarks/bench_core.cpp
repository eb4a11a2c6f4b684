#include <benchmark/benchmark.h>

#include "hilbnef/fib.hpp"
#include "hilbnef/fundomain.hpp"
#include "hilbnef/hilbwalls.hpp"
#include "hilbnef/nefcone2.hpp"

using namespace hilbnef;

namespace {

const Params kCayley{1, 2};

void BM_FibAt(benchmark::State& state) {
    FibSeq seq(1);
    const long m = state.range(0);
    for (auto _ : state) benchmark::DoNotOptimize(seq.at(m));
}
BENCHMARK(BM_FibAt)->Arg(64)->Arg(512);

void BM_BbfPair(benchmark::State& state) {
    DivClass p{Rat(7, 3), Rat(-2), Rat(2, 5), kCayley};
    DivClass q{Rat(1), Rat(-3, 7), Rat(4), kCayley};
    for (auto _ : state) benchmark::DoNotOptimize(bbf_pair(p, q));
}
BENCHMARK(BM_BbfPair);

void BM_QuadSign(benchmark::State& state) {
    QuadNum x(Int(5), Rat(987, 610), Rat(-377, 610));
    for (auto _ : state) benchmark::DoNotOptimize(x.sign());
}
BENCHMARK(BM_QuadSign);

void BM_Reduce(benchmark::State& state) {
    std::uint64_t st = 0xbe7c4;
    Word w = random_reduced_word(static_cast<int>(state.range(0)), st);
    DivClass p = apply_word(w, random_interior_pi_point(st));
    ReduceOptions opts;
    opts.validate = false;
    for (auto _ : state) benchmark::DoNotOptimize(reduce(p, opts));
}
BENCHMARK(BM_Reduce)->Arg(4)->Arg(8)->Arg(12);

void BM_OrbitWalls(benchmark::State& state) {
    const int K = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(orbit_walls(1, K));
}
BENCHMARK(BM_OrbitWalls)->Arg(4)->Arg(8);

void BM_InteriorsDisjoint(benchmark::State& state) {
    Cone3 a = pi_cone();
    Cone3 b = transformed(pi_cone(), word_isometry(Word({1, 2, 3, 1})).matrix());
    for (auto _ : state) benchmark::DoNotOptimize(interiors_disjoint(a, b));
}
BENCHMARK(BM_InteriorsDisjoint);

void BM_MinusDClasses(benchmark::State& state) {
    const long B = state.range(0);
    for (auto _ : state) benchmark::DoNotOptimize(minus_d_classes(1, 2, B));
}
BENCHMARK(BM_MinusDClasses)->Arg(10)->Arg(50);

void BM_CrDiv(benchmark::State& state) {
    LargeNConfig cfg(2, 10);
    for (auto _ : state) benchmark::DoNotOptimize(crdiv(cfg, 0, 0));
}
BENCHMARK(BM_CrDiv);

}  // namespace

BENCHMARK_MAIN();
