#include <benchmark/benchmark.h>

#include "graydbl/coherence.hpp"
#include "graydbl/monoid.hpp"

using namespace gd;

namespace {

CatPtr share(DoubleCategory d) {
    d.finalize();
    return std::make_shared<const DoubleCategory>(std::move(d));
}

CatPtr byIndex(int i) {
    switch (i) {
        case 0: return share(freeArrowH());
        case 1: return share(generatorG());
        case 2: return share(isoCellH());
        default: return share(cartesianProduct(generatorG(), freeArrowH()));
    }
}

}  // namespace

static void BM_Validate(benchmark::State& st) {
    auto d = byIndex(static_cast<int>(st.range(0)));
    for (auto _ : st) benchmark::DoNotOptimize(validate(*d).ok());
    st.SetLabel(d->name);
}
BENCHMARK(BM_Validate)->DenseRange(0, 3);

static void BM_EnumerateFromG(benchmark::State& st) {
    auto g = share(generatorG());
    auto d = byIndex(static_cast<int>(st.range(0)));
    for (auto _ : st) benchmark::DoNotOptimize(enumerateDoubleFunctors(g, d).size());
    st.SetLabel(d->name);
}
BENCHMARK(BM_EnumerateFromG)->DenseRange(0, 3);

static void BM_HomBuild(benchmark::State& st) {
    auto a = byIndex(static_cast<int>(st.range(0)));
    for (auto _ : st) benchmark::DoNotOptimize(HomDouble::build(a, a)->cat->nSq());
    st.SetLabel(a->name);
}
BENCHMARK(BM_HomBuild)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);

static void BM_CountCones(benchmark::State& st) {
    auto g = share(generatorG()), h = share(freeArrowH());
    for (auto _ : st) {
        Budget b;
        benchmark::DoNotOptimize(countCones(g, g, h, b));
    }
}
BENCHMARK(BM_CountCones)->Unit(benchmark::kMillisecond);

static void BM_Realize(benchmark::State& st) {
    auto a = share(freeArrowH());
    for (auto _ : st) benchmark::DoNotOptimize(realizeTensor(a, a, 2).tensor.has_value());
}
BENCHMARK(BM_Realize)->Unit(benchmark::kMillisecond);

static void BM_AssocHomMap(benchmark::State& st) {
    auto h = share(freeArrowH()), g = share(generatorG());
    for (auto _ : st) {
        Budget b;
        HomCache c{b};
        TensorCache t{b};
        benchmark::DoNotOptimize(assocHomMap(c, t, h, c.one(), g).obj.size());
    }
}
BENCHMARK(BM_AssocHomMap)->Unit(benchmark::kMillisecond);

static void BM_MonoidCheck(benchmark::State& st) {
    // Z/n as a discrete monoid; every condition is enumerated.
    int n = static_cast<int>(st.range(0));
    std::vector<std::vector<int>> table(n, std::vector<int>(n));
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) table[x][y] = (x + y) % n;
    auto m = discreteMonoid(table, 0);
    for (auto _ : st) benchmark::DoNotOptimize(checkGrayMonoid(m).ok());
}
BENCHMARK(BM_MonoidCheck)->RangeMultiplier(2)->Range(2, 16);

BENCHMARK_MAIN();
