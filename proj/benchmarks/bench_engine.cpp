#include <benchmark/benchmark.h>

#include <random>

#include "concordia/complex.hpp"
#include "concordia/engine.hpp"
#include "concordia/gf2.hpp"
#include "concordia/knotexpr.hpp"
#include "concordia/laurent.hpp"
#include "concordia/poset.hpp"

using namespace concordia;

namespace {

void bm_parse(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(parse_expr("T(2,5) + 2*T(2,3) - C(2,5;T(2,3))"));
}
BENCHMARK(bm_parse);

void bm_torus_alexander(benchmark::State& state) {
    int q = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(torus_alexander(q - 1, q));
    state.SetLabel("T(q-1,q)");
}
BENCHMARK(bm_torus_alexander)->Arg(5)->Arg(9)->Arg(13);

void bm_staircase_v0(benchmark::State& state) {
    auto c = BifilteredComplex::staircase(torus_alexander(static_cast<int>(state.range(0)),
                                                          static_cast<int>(state.range(0)) + 1));
    for (auto _ : state) benchmark::DoNotOptimize(v_k(c, 0));
}
BENCHMARK(bm_staircase_v0)->Arg(3)->Arg(6)->Arg(9);

void bm_tensor_build(benchmark::State& state) {
    auto e = parse_expr("T(2,5)+2*T(2,3)-C(2,5;T(2,3))");
    for (auto _ : state) benchmark::DoNotOptimize(BifilteredComplex::of_expr(e));
}
BENCHMARK(bm_tensor_build);

void bm_tensor_v0(benchmark::State& state) {
    auto c = BifilteredComplex::of_expr(parse_expr("T(2,5)+2*T(2,3)-C(2,5;T(2,3))"));
    for (auto _ : state) benchmark::DoNotOptimize(v_k(c, 0));
    state.SetLabel(std::to_string(c.size()) + " generators");
}
BENCHMARK(bm_tensor_v0)->Unit(benchmark::kMillisecond);

void bm_mirror_heavy_v0(benchmark::State& state) {
    auto c = BifilteredComplex::of_expr(parse_expr("-T(2,3)-2*T(2,5)-2*T(3,4)"));
    for (auto _ : state) benchmark::DoNotOptimize(v_k(c, 0));
    state.SetLabel("1875 generators");
}
BENCHMARK(bm_mirror_heavy_v0)->Unit(benchmark::kMillisecond);

void bm_gf2_rank(benchmark::State& state) {
    std::size_t n = static_cast<std::size_t>(state.range(0));
    std::mt19937 rng(99);
    gf2::BitMatrix seed(n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c)
            if (rng() % 2) seed.set(r, c);
    for (auto _ : state) {
        gf2::BitMatrix m = seed;
        benchmark::DoNotOptimize(m.rank_destructive());
    }
}
BENCHMARK(bm_gf2_rank)->Arg(256)->Arg(1024);

void bm_leq(benchmark::State& state) {
    auto x = parse_expr("T(2,3)+T(2,5)");
    auto y = parse_expr("T(3,4)");
    for (auto _ : state) benchmark::DoNotOptimize(leq(x, y));
    state.SetLabel("memoized after first pass");
}
BENCHMARK(bm_leq);

}  // namespace

BENCHMARK_MAIN();
