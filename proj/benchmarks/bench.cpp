#include <benchmark/benchmark.h>

#include <fstream>
#include <sstream>

#include "toricgb/graph.hpp"
#include "toricgb/groebner.hpp"
#include "toricgb/linres.hpp"
#include "toricgb/toric.hpp"

namespace {

toric::Graph load_gstar() {
    std::ifstream f(std::string(TORICGB_DATA_DIR) + "/gstar.edges");
    std::ostringstream ss;
    ss << f.rdbuf();
    return toric::parse_graph(ss.str()).graph;
}

toric::Graph complete_graph(int n) {
    std::vector<toric::Edge> es;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) es.emplace_back(u, v);
    return toric::Graph(n, std::move(es));
}

void BM_GraverGstar(benchmark::State& state) {
    toric::Graph g = load_gstar();
    for (auto _ : state) {
        auto grav = toric::enumerate_graver(g);
        benchmark::DoNotOptimize(grav);
    }
}
BENCHMARK(BM_GraverGstar);

void BM_GraverK5(benchmark::State& state) {
    toric::Graph g = complete_graph(5);
    for (auto _ : state) {
        auto grav = toric::enumerate_graver(g);
        benchmark::DoNotOptimize(grav);
    }
}
BENCHMARK(BM_GraverK5);

void BM_ReducedGroebnerGstar(benchmark::State& state) {
    toric::Graph g = load_gstar();
    auto grav = toric::enumerate_graver(g);
    std::vector<int> vo{0, 1, 2, 3, 4, 5};
    toric::EdgeOrdering ord = toric::derive_edge_order(g, vo);
    toric::TermOrder tau =
        toric::TermOrder::lex(ord.sequence, toric::OrderProvenance::RevlexDerived, vo);
    for (auto _ : state) {
        auto gb = toric::reduced_groebner_basis(g, grav, tau);
        benchmark::DoNotOptimize(gb);
    }
}
BENCHMARK(BM_ReducedGroebnerGstar);

void BM_CircuitsGstar(benchmark::State& state) {
    toric::Graph g = load_gstar();
    for (auto _ : state) {
        auto c = toric::enumerate_circuits(g);
        benchmark::DoNotOptimize(c);
    }
}
BENCHMARK(BM_CircuitsGstar);

void BM_IdealPowerCube(benchmark::State& state) {
    toric::Graph g = load_gstar();
    toric::MonomialIdeal ideal = toric::edge_ideal(g);
    for (auto _ : state) {
        auto p = toric::ideal_power(ideal, 3);
        benchmark::DoNotOptimize(p);
    }
}
BENCHMARK(BM_IdealPowerCube);

}  // namespace

BENCHMARK_MAIN();
