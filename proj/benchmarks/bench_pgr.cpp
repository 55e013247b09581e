#include <random>

#include <benchmark/benchmark.h>

#include "pgr/isomorphism.hpp"
#include "pgr/match.hpp"
#include "pgr/rewrite.hpp"
#include "pgr/systems/dijkstra_scholten.hpp"
#include "pgr/systems/waitfor.hpp"

namespace {

pgr::Graph random_graph(std::size_t n, std::size_t m, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    pgr::Graph g;
    for (pgr::VertexId v = 0; v < n; ++v)
        g.add_vertex(v);
    for (std::size_t i = 0; i < m; ++i)
        g.add_edge(rng() % n, rng() % n, rng() % 2 ? "a" : "b");
    return g;
}

// Ring of processes, each waiting for its successor through a 1-of-1
// request. A broken ring leaves the last process free.
pgr::Graph ring_net(std::size_t n, bool broken)
{
    pgr::Graph g;
    for (pgr::VertexId p = 0; p < n; ++p)
        g.add_vertex(p);
    for (pgr::VertexId p = 0; p < (broken ? n - 1 : n); ++p) {
        pgr::VertexId q = n + p;
        g.add_vertex(q);
        g.add_edge(p, q, pgr::kUnlabeled);
        g.add_edge(q, (p + 1) % n, pgr::kUnlabeled);
        g.add_edge(q, q, pgr::kWaitZ);
        g.add_edge(q, q, pgr::kWaitS);
    }
    return g;
}

void BM_Embeddings(benchmark::State & state)
{
    pgr::Graph host = random_graph(static_cast<std::size_t>(state.range(0)), 3 * state.range(0), 1);
    pgr::Graph pattern;
    pattern.add_vertex(1);
    pattern.add_vertex(2);
    pattern.add_vertex(3);
    pattern.add_edge(1, 2, "a");
    pattern.add_edge(2, 3, "b");
    for (auto _ : state)
        benchmark::DoNotOptimize(pgr::find_pattern_embeddings(host, pattern));
}
BENCHMARK(BM_Embeddings)->Arg(8)->Arg(16)->Arg(32);

void BM_CanonicalKey(benchmark::State & state)
{
    pgr::Graph g = random_graph(static_cast<std::size_t>(state.range(0)), 2 * state.range(0), 2);
    for (auto _ : state)
        benchmark::DoNotOptimize(pgr::canonical_key(g));
}
BENCHMARK(BM_CanonicalKey)->Arg(8)->Arg(16)->Arg(32);

void BM_DeadlockRing(benchmark::State & state)
{
    pgr::Graph g = ring_net(static_cast<std::size_t>(state.range(0)), state.range(1) != 0);
    for (auto _ : state)
        benchmark::DoNotOptimize(pgr::detect_deadlock(g));
}
BENCHMARK(BM_DeadlockRing)->Args({4, 0})->Args({4, 1})->Args({8, 0})->Args({8, 1});

void BM_DsExploreLine(benchmark::State & state)
{
    std::vector<std::pair<pgr::VertexId, pgr::VertexId>> links;
    for (pgr::VertexId v = 1; v < static_cast<pgr::VertexId>(state.range(0)); ++v)
        links.emplace_back(v, v + 1);
    pgr::Graph start = pgr::ds_initial_network(links, 1);
    pgr::DsExploreOptions opts;
    opts.max_sends_per_process = 1;
    for (auto _ : state)
        benchmark::DoNotOptimize(pgr::ds_explore(start, opts));
}
BENCHMARK(BM_DsExploreLine)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
