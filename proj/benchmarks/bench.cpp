#include <benchmark/benchmark.h>

#include "bg/game.hpp"
#include "bg/goodness.hpp"
#include "bg/torus.hpp"
#include "bg/tuple.hpp"
#include "bg/word.hpp"

using namespace bg;

namespace {

Tuple4 eq9() {
    return derive_tuple(parse_real("1.99+sqrt(5)/2"), parse_real("-0.2"), std::nullopt);
}

Tuple4 eq10() {
    return derive_tuple(parse_real("8+(1+sqrt(5))/2"), std::nullopt, parse_real("-5*sqrt(7)/2"));
}

}  // namespace

static void BM_sequence_generation(benchmark::State& state) {
    for (auto _ : state) {
        Tuple4 t = eq9();
        t.ensure(state.range(0));
        benchmark::DoNotOptimize(t.b(state.range(0)));
    }
}
BENCHMARK(BM_sequence_generation)->Arg(10000)->Arg(100000)->Arg(1000000);

static void BM_exact_floor(benchmark::State& state) {
    Tuple4 t = eq10();
    long long n = 1;
    for (auto _ : state) {
        Real v = Real(mpz_ll(n)) * t.beta + t.delta;
        benchmark::DoNotOptimize(v.floor());
        ++n;
    }
}
BENCHMARK(BM_exact_floor);

static void BM_orbit_scan(benchmark::State& state) {
    Tuple4 t = eq9();
    // a deliberately small box so the scan runs long
    Rectangle rect{CircleInterval(parse_real("0.123"), parse_real("0.001")),
                   CircleInterval(parse_real("0.456"), parse_real("0.001"))};
    for (auto _ : state) {
        auto ans = orbit_hits(t, rect, 1, 5000000);
        benchmark::DoNotOptimize(ans.verdict);
    }
}
BENCHMARK(BM_orbit_scan);

static void BM_decide_good(benchmark::State& state) {
    Tuple4 t = eq10();
    for (auto _ : state) {
        auto v = decide_good(t);
        benchmark::DoNotOptimize(v.verdict);
    }
}
BENCHMARK(BM_decide_good);

static void BM_grid_solve(benchmark::State& state) {
    Tuple4 t = eq10();
    long long n = state.range(0);
    PSet p = build_pset(t, 2 * n);
    MoveSet m = MoveSet::maximal_from_pset(p, n);
    for (auto _ : state) {
        PGrid g = solve_pgrid(m, n);
        benchmark::DoNotOptimize(g.is_p(0, 0));
    }
}
BENCHMARK(BM_grid_solve)->Arg(150)->Arg(300)->Arg(600);

static void BM_verify_invariance(benchmark::State& state) {
    Tuple4 t = eq9();
    for (auto _ : state) {
        auto rep = verify_invariance(t, state.range(0));
        benchmark::DoNotOptimize(rep.match);
    }
}
BENCHMARK(BM_verify_invariance)->Arg(300);

BENCHMARK_MAIN();
