#include <benchmark/benchmark.h>

#include "pdesign/canonical.hpp"
#include "pdesign/closure.hpp"
#include "pdesign/enumeration.hpp"
#include "pdesign/ramsey.hpp"

using namespace pdesign;

namespace {

PartialDesign fano() {
    return make_design(make_params(3, 2, 1), 7,
                       {from_vertices({0, 1, 2}), from_vertices({0, 3, 4}),
                        from_vertices({0, 5, 6}), from_vertices({1, 3, 5}),
                        from_vertices({1, 4, 6}), from_vertices({2, 3, 6}),
                        from_vertices({2, 4, 5})});
}

void bm_closure(benchmark::State& state) {
    PartialDesign f = fano();
    for (auto _ : state)
        benchmark::DoNotOptimize(closure_of(f, from_vertices({0, 1, 3})));
}
BENCHMARK(bm_closure);

void bm_canonical_form(benchmark::State& state) {
    PartialDesign f = fano();
    for (auto _ : state)
        benchmark::DoNotOptimize(canonical_form(f));
}
BENCHMARK(bm_canonical_form);

void bm_census_n6(benchmark::State& state) {
    Params p = make_params(3, 2, 1);
    for (auto _ : state)
        benchmark::DoNotOptimize(enumerate_partial_designs(p, 6));
}
BENCHMARK(bm_census_n6)->Unit(benchmark::kMillisecond);

void bm_arrow_pigeonhole(benchmark::State& state) {
    Params p = make_params(3, 2, 1);
    OrderedDesign c = make_ordered(make_design(p, 5, {}));
    OrderedDesign b = make_ordered(make_design(p, 2, {}));
    OrderedDesign a = make_ordered(make_design(p, 1, {}));
    for (auto _ : state)
        benchmark::DoNotOptimize(arrow_check(c, b, a, 2));
}
BENCHMARK(bm_arrow_pigeonhole);

void bm_count_completions_7(benchmark::State& state) {
    PartialDesign empty7 = make_design(make_params(3, 2, 1), 7, {});
    for (auto _ : state)
        benchmark::DoNotOptimize(count_completions(empty7));
}
BENCHMARK(bm_count_completions_7);

} // namespace

BENCHMARK_MAIN();
