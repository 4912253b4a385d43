// Serial vs OpenMP kernels on the instances the certificates actually use.

#include <benchmark/benchmark.h>

#include <random>

#include "zecap/cliques.hpp"
#include "zecap/mis.hpp"
#include "zecap/root_lattice.hpp"
#include "zecap/root_systems.hpp"
#include "zecap/symplectic.hpp"

namespace {

zecap::Graph sp6_graph() { return zecap::build_sp_graph(3).graph; }

zecap::Graph e8_ray_graph() {
    auto model = zecap::e8_symplectic_model();
    return zecap::e8_frame_partition(model).ray_graph;
}

zecap::Graph random_graph(int n, double p, unsigned seed) {
    std::mt19937 rng(seed);
    std::bernoulli_distribution edge(p);
    zecap::Graph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (edge(rng)) g.add_edge(i, j);
    return g;
}

void mis_sp6_serial(benchmark::State& state) {
    auto g = sp6_graph();
    for (auto _ : state) benchmark::DoNotOptimize(zecap::independence_number_serial(g));
}

void mis_sp6_parallel(benchmark::State& state) {
    auto g = sp6_graph();
    zecap::MisOptions opts;
    for (auto _ : state) benchmark::DoNotOptimize(zecap::independence_number(g, opts));
}

void mis_e8_serial(benchmark::State& state) {
    auto g = e8_ray_graph();
    for (auto _ : state) benchmark::DoNotOptimize(zecap::independence_number_serial(g));
}

void mis_e8_parallel(benchmark::State& state) {
    auto g = e8_ray_graph();
    zecap::MisOptions opts;
    for (auto _ : state) benchmark::DoNotOptimize(zecap::independence_number(g, opts));
}

void mis_random_serial(benchmark::State& state) {
    auto g = random_graph(int(state.range(0)), 0.5, 7);
    for (auto _ : state) benchmark::DoNotOptimize(zecap::independence_number_serial(g));
}

void mis_random_parallel(benchmark::State& state) {
    auto g = random_graph(int(state.range(0)), 0.5, 7);
    zecap::MisOptions opts;
    for (auto _ : state) benchmark::DoNotOptimize(zecap::independence_number(g, opts));
}

void cliques7_sp6_serial(benchmark::State& state) {
    auto g = sp6_graph();
    for (auto _ : state) benchmark::DoNotOptimize(zecap::cliques_of_size_serial(g, 7));
}

void cliques7_sp6_parallel(benchmark::State& state) {
    auto g = sp6_graph();
    for (auto _ : state) benchmark::DoNotOptimize(zecap::cliques_of_size(g, 7));
}

void cliques8_e8_serial(benchmark::State& state) {
    auto g = e8_ray_graph();
    for (auto _ : state) benchmark::DoNotOptimize(zecap::cliques_of_size_serial(g, 8));
}

void cliques8_e8_parallel(benchmark::State& state) {
    auto g = e8_ray_graph();
    for (auto _ : state) benchmark::DoNotOptimize(zecap::cliques_of_size(g, 8));
}

}  // namespace

BENCHMARK(mis_sp6_serial);
BENCHMARK(mis_sp6_parallel);
BENCHMARK(mis_e8_serial);
BENCHMARK(mis_e8_parallel);
BENCHMARK(mis_random_serial)->Arg(70)->Arg(90);
BENCHMARK(mis_random_parallel)->Arg(70)->Arg(90);
BENCHMARK(cliques7_sp6_serial);
BENCHMARK(cliques7_sp6_parallel);
BENCHMARK(cliques8_e8_serial);
BENCHMARK(cliques8_e8_parallel);

BENCHMARK_MAIN();
