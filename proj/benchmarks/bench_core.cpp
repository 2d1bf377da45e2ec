#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "ndl/graph.hpp"
#include "ndl/graphicality.hpp"
#include "ndl/io.hpp"
#include "ndl/oracle.hpp"
#include "ndl/realization.hpp"
#include "ndl/tableau.hpp"

using ndl::Graph;
using ndl::Partition;
using ndl::Tableau;

namespace {

Graph random_graph(int n, double p, unsigned seed) {
    std::mt19937 rng(seed);
    std::bernoulli_distribution coin(p);
    std::vector<ndl::Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng)) edges.push_back({u, v});
    return Graph(n, edges);
}

Graph cycle(int n) {
    std::vector<ndl::Edge> edges;
    for (int v = 0; v < n; ++v) edges.push_back({v, (v + 1) % n});
    return Graph(n, edges);
}

void bench_ndl_of(benchmark::State& state) {
    Graph g = random_graph((int)state.range(0), 0.2, 7);
    for (auto _ : state) benchmark::DoNotOptimize(ndl::ndl_of(g));
}
BENCHMARK(bench_ndl_of)->Arg(32)->Arg(128);

void bench_canonicalize(benchmark::State& state) {
    Tableau t = ndl::ndl_of(random_graph((int)state.range(0), 0.2, 7));
    for (auto _ : state) benchmark::DoNotOptimize(ndl::canonicalize(t));
}
BENCHMARK(bench_canonicalize)->Arg(128);

void bench_erdos_gallai(benchmark::State& state) {
    Graph g = random_graph((int)state.range(0), 0.2, 11);
    Partition p(ndl::degree_sequence(g));
    for (auto _ : state) benchmark::DoNotOptimize(ndl::erdos_gallai(p));
}
BENCHMARK(bench_erdos_gallai)->Arg(128)->Arg(1024);

void bench_conjugate(benchmark::State& state) {
    Graph g = random_graph((int)state.range(0), 0.2, 11);
    Partition p(ndl::degree_sequence(g));
    for (auto _ : state) benchmark::DoNotOptimize(ndl::conjugate(p));
}
BENCHMARK(bench_conjugate)->Arg(1024);

void bench_is_graphic_ndl(benchmark::State& state) {
    Tableau t = ndl::ndl_of(random_graph((int)state.range(0), 0.2, 7));
    for (auto _ : state) benchmark::DoNotOptimize(ndl::is_graphic_ndl(t));
}
BENCHMARK(bench_is_graphic_ndl)->Arg(32)->Arg(128);

void bench_canonical_realization(benchmark::State& state) {
    std::vector<int> demand = ndl::degree_sequence(
        random_graph((int)state.range(0), 0.2, 13));
    for (auto _ : state)
        benchmark::DoNotOptimize(ndl::canonical_realization(demand));
}
BENCHMARK(bench_canonical_realization)->Arg(64)->Arg(256);

void bench_realize_ndl(benchmark::State& state) {
    Tableau t = ndl::ndl_of(random_graph((int)state.range(0), 0.2, 7));
    for (auto _ : state) benchmark::DoNotOptimize(ndl::realize_ndl(t));
}
BENCHMARK(bench_realize_ndl)->Arg(32)->Arg(64);

void bench_enumerate_n_switches(benchmark::State& state) {
    Graph g = random_graph((int)state.range(0), 0.2, 17);
    for (auto _ : state) benchmark::DoNotOptimize(ndl::enumerate_n_switches(g));
}
BENCHMARK(bench_enumerate_n_switches)->Arg(32)->Arg(64);

void bench_switch_sequence(benchmark::State& state) {
    const int n = (int)state.range(0);
    Graph one = cycle(n);
    std::vector<ndl::Edge> edges;
    for (int v = 0; v < n / 2; ++v) edges.push_back({v, (v + 1) % (n / 2)});
    for (int v = 0; v < n / 2; ++v)
        edges.push_back({n / 2 + v, n / 2 + (v + 1) % (n / 2)});
    Graph two(n, edges);
    for (auto _ : state)
        benchmark::DoNotOptimize(ndl::switch_sequence(one, two));
}
BENCHMARK(bench_switch_sequence)->Arg(16)->Arg(48);

void bench_graph6_round_trip(benchmark::State& state) {
    Graph g = random_graph((int)state.range(0), 0.2, 19);
    for (auto _ : state)
        benchmark::DoNotOptimize(ndl::graph_from_graph6(ndl::to_graph6(g)));
}
BENCHMARK(bench_graph6_round_trip)->Arg(64)->Arg(256);

void bench_oracle_enumeration(benchmark::State& state) {
    Tableau t = ndl::ndl_of(cycle(6));
    for (auto _ : state) {
        auto all = ndl::oracle::enumerate_labeled_realizations(t);
        benchmark::DoNotOptimize(all.size());
    }
}
BENCHMARK(bench_oracle_enumeration);

}  // namespace

BENCHMARK_MAIN();
