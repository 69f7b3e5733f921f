#include <benchmark/benchmark.h>

#include "propchoose/bounds.hpp"
#include "propchoose/constructive.hpp"
#include "propchoose/enumerate.hpp"
#include "propchoose/list_assignment.hpp"
#include "propchoose/prop_solver.hpp"

using namespace propchoose;

namespace {

void bm_enumerate_k22_k3(benchmark::State& state) {
    Graph g = Graph::complete_multipartite({2, 2});
    for (auto _ : state) {
        std::uint64_t n = enumerate_support_multisets(
            g, 3, [](const SupportMultiset&) { return true; });
        benchmark::DoNotOptimize(n);
    }
}
BENCHMARK(bm_enumerate_k22_k3);

void bm_canonical_form(benchmark::State& state) {
    Graph g = Graph::complete_multipartite({2, 3});
    ListAssignment l = sample_assignment(g, 3, 7, 123);
    for (auto _ : state) {
        auto canon = canonical_form(g, l);
        benchmark::DoNotOptimize(canon);
    }
}
BENCHMARK(bm_canonical_form);

void bm_refute_witness_k44(benchmark::State& state) {
    Graph g = Graph::complete_multipartite({4, 4});
    ListAssignment w = even_case_witness({4, 4});
    for (auto _ : state) {
        auto f = find_proportional(g, w);
        benchmark::DoNotOptimize(f);
    }
}
BENCHMARK(bm_refute_witness_k44);

void bm_decide_k23_k3(benchmark::State& state) {
    Graph g = Graph::complete_multipartite({2, 3});
    for (auto _ : state) {
        Verdict v = decide_choosable(g, 3);
        benchmark::DoNotOptimize(v.outcome);
    }
}
BENCHMARK(bm_decide_k23_k3);

void bm_color_knm_k36(benchmark::State& state) {
    Graph g = Graph::complete_multipartite({3, 6});
    int seed = 0;
    for (auto _ : state) {
        ListAssignment l = sample_assignment(g, 7, 10, seed++);
        Coloring f = color_knm(g, l, 1);
        benchmark::DoNotOptimize(f);
    }
}
BENCHMARK(bm_color_knm_k36);

} // namespace

BENCHMARK_MAIN();
