#include <benchmark/benchmark.h>

#include "rectline/rectify.hpp"
#include "rectline/topology.hpp"

using namespace rectline;

namespace {

void BM_rectify_corpus_entry(benchmark::State& state) {
    auto gc = random_coordinate(17, static_cast<int>(state.range(0)), 10, 64);
    for (auto _ : state) {
        Decision d = rectify(gc.p);
        benchmark::DoNotOptimize(d.is_coordinate);
    }
}
BENCHMARK(BM_rectify_corpus_entry)->Arg(2)->Arg(4)->Arg(8);

void BM_resultant_y(benchmark::State& state) {
    const int d = static_cast<int>(state.range(0));
    BiPoly q;
    for (int j = 0; j <= d; ++j) q.add_term((d - j) % 3, j, Rational(j + 1));
    BiPoly qy = partial_y(q);
    for (auto _ : state) {
        UniPoly r = resultant_y(q, qy);
        benchmark::DoNotOptimize(r.degree());
    }
}
BENCHMARK(BM_resultant_y)->Arg(4)->Arg(8)->Arg(12);

void BM_substitute_shear(benchmark::State& state) {
    auto gc = random_coordinate(23, 6, 10, 64);
    ElemAuto shear = JonquieresX{UniPoly::monomial(3, 4)};
    for (auto _ : state) {
        BiPoly r = apply_auto(shear, gc.p);
        benchmark::DoNotOptimize(r.total_degree());
    }
}
BENCHMARK(BM_substitute_shear);

}  // namespace

BENCHMARK_MAIN();
