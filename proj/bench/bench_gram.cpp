#include "etso/spinor.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace etso;

namespace {

SampleMatrix random_samples(int f, int p, int c) {
    std::mt19937 gen(5);
    std::normal_distribution<double> d;
    SampleMatrix m(f, p, c);
    for (auto& v : m.data) v = {d(gen), d(gen)};
    return m;
}

void BM_AngularGram(benchmark::State& state, Exec exec) {
    const AngularGrid ang(64, 64);
    const auto a = random_samples(static_cast<int>(state.range(0)), ang.size(), 4);
    for (auto _ : state) benchmark::DoNotOptimize(gram(a, a, ang.weights(), exec));
}

void BM_SpinorGram3d(benchmark::State& state, Exec exec) {
    const int n_max = static_cast<int>(state.range(0));
    const auto set = emit_table(HalfInt::from_twice(1), n_max, RadialMarker::sto);
    const RadialFamily fam{RadialKind::sto, 0, 1.0};
    const AngularGrid ang(24, 24);
    const RadialGrid rad(32, 2.0);
    HarmonicTable table(max_orbital_l(set), ang);
    const auto shells = spinor_shells(set, fam, table);
    for (auto _ : state) benchmark::DoNotOptimize(gram_3d(shells, shells, 4, ang, rad, exec));
    state.counters["spinors"] = static_cast<double>(set.size());
}

}  // namespace

BENCHMARK_CAPTURE(BM_AngularGram, serial, Exec::serial)->Arg(40)->Arg(120)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_AngularGram, parallel, Exec::parallel)->Arg(40)->Arg(120)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_SpinorGram3d, serial, Exec::serial)->Arg(3)->Arg(5)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_SpinorGram3d, parallel, Exec::parallel)->Arg(3)->Arg(5)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
