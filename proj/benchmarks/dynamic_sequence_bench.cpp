#include <benchmark/benchmark.h>

#include <algorithm>
#include <numeric>

#include "lislab/dynamic_sequence.hpp"
#include "lislab/random.hpp"

using namespace lislab;

namespace {

DynamicSequence filled(std::size_t n, std::vector<Handle>* handles = nullptr) {
    Rng rng(n);
    std::vector<Coord> ys(n);
    std::iota(ys.begin(), ys.end(), Coord{0});
    std::shuffle(ys.begin(), ys.end(), rng);
    DynamicSequence seq;
    for (std::size_t k = 0; k < n; ++k) {
        const Handle h = seq.insert({static_cast<Coord>(k), ys[k], uniform_weight(rng, 0, 20), std::nullopt});
        if (handles) handles->push_back(h);
    }
    return seq;
}

void BM_Insert(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) {
        auto seq = filled(n);
        benchmark::DoNotOptimize(seq.size());
    }
    state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * n));
}
BENCHMARK(BM_Insert)->RangeMultiplier(4)->Range(256, 16384);

void BM_UpdateWeight(benchmark::State& state) {
    std::vector<Handle> handles;
    auto seq = filled(static_cast<std::size_t>(state.range(0)), &handles);
    Rng rng(1);
    for (auto _ : state) {
        const Handle h = handles[rng() % handles.size()];
        benchmark::DoNotOptimize(seq.update_weight(h, uniform_weight(rng, 0, 20)));
    }
}
BENCHMARK(BM_UpdateWeight)->RangeMultiplier(4)->Range(256, 16384);

void BM_QueryRange(benchmark::State& state) {
    const auto n = static_cast<Coord>(state.range(0));
    const auto seq = filled(static_cast<std::size_t>(n));
    Rng rng(2);
    for (auto _ : state) {
        Coord lo = uniform_weight(rng, 0, n - 1);
        Coord hi = uniform_weight(rng, 0, n - 1);
        if (lo > hi) std::swap(lo, hi);
        benchmark::DoNotOptimize(seq.query_range(lo, hi));
    }
}
BENCHMARK(BM_QueryRange)->RangeMultiplier(4)->Range(256, 16384);

void BM_QueryViaSentinels(benchmark::State& state) {
    const auto n = static_cast<Coord>(state.range(0));
    auto seq = filled(static_cast<std::size_t>(n));
    Rng rng(3);
    for (auto _ : state) {
        Coord lo = uniform_weight(rng, 0, n - 1);
        Coord hi = uniform_weight(rng, 0, n - 1);
        if (lo > hi) std::swap(lo, hi);
        benchmark::DoNotOptimize(seq.query_range_via_sentinels(lo, hi));
    }
}
BENCHMARK(BM_QueryViaSentinels)->RangeMultiplier(4)->Range(256, 16384);

}  // namespace
