#include <benchmark/benchmark.h>

#include <string>

#include "netgames/canonical.hpp"
#include "netgames/gamefile.hpp"
#include "netgames/reductions.hpp"
#include "netgames/solver.hpp"
#include "netgames/strategy.hpp"

namespace netgames {
namespace {

Game fixture(const char* name) { return parse_game(read_file(std::string(NETGAMES_FIXTURE_DIR) + "/" + name)); }

// Cycle on n blank vertices; every fifth is deleted and every third active one strong.
Network cycle(std::size_t n) {
    Network net;
    for (std::size_t i = 0; i < n; ++i) net.add_fresh_vertex(kBlank, i % 5 != 4, i % 3 == 0 && i % 5 != 4);
    for (std::size_t i = 0; i < n; ++i)
        net.add_edge(VertexId{static_cast<std::uint32_t>(i)}, VertexId{static_cast<std::uint32_t>((i + 1) % n)});
    return net;
}

void BM_CanonicalKeyWorkedExample(benchmark::State& state) {
    const Game g = fixture("paper-example.game");
    for (auto _ : state) benchmark::DoNotOptimize(canonical_key(g.initial, Actor::Destructor, false));
}
BENCHMARK(BM_CanonicalKeyWorkedExample);

void BM_CanonicalKeyCycle(benchmark::State& state) {
    const Network net = cycle(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(canonical_key(net, Actor::Destructor, false));
}
BENCHMARK(BM_CanonicalKeyCycle)->Arg(8)->Arg(16)->Arg(32);

void BM_SolveFiniteWorkedExample(benchmark::State& state) {
    const Game g = fixture("paper-example.game");
    for (auto _ : state) benchmark::DoNotOptimize(solve_finite(g));
}
BENCHMARK(BM_SolveFiniteWorkedExample)->Unit(benchmark::kMillisecond);

void BM_SolveBoundedSafetyWorkedExample(benchmark::State& state) {
    const Game g = fixture("paper-example.game");
    for (auto _ : state) benchmark::DoNotOptimize(solve_safety_bounded(g));
}
BENCHMARK(BM_SolveBoundedSafetyWorkedExample)->Unit(benchmark::kMillisecond);

void BM_ExploreCreateVariant(benchmark::State& state) {
    const Game g = fixture("paper-example-with-create.game");
    for (auto _ : state) benchmark::DoNotOptimize(explore(g));
}
BENCHMARK(BM_ExploreCreateVariant)->Unit(benchmark::kMillisecond);

void BM_SolveVertexCoverPath(benchmark::State& state) {
    // Path on n vertices; its minimum cover has floor(n / 2) vertices.
    const auto n = static_cast<std::size_t>(state.range(0));
    UndirectedGraphSpec path;
    for (std::size_t i = 0; i < n; ++i) path.vertices.push_back("p" + std::to_string(i));
    for (std::size_t i = 0; i + 1 < n; ++i) path.edges.emplace_back(path.vertices[i], path.vertices[i + 1]);
    const Game g = build_vertex_cover_game(path, n / 2);
    for (auto _ : state) benchmark::DoNotOptimize(solve_reachability_unlabeled(g));
}
BENCHMARK(BM_SolveVertexCoverPath)->Arg(3)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);

void BM_ExploreHaltingMachine(benchmark::State& state) {
    const Game g = build_tm_safety_game(parse_tm(read_file(std::string(NETGAMES_FIXTURE_DIR) + "/halt1.tm"))).game;
    for (auto _ : state) benchmark::DoNotOptimize(explore(g));
}
BENCHMARK(BM_ExploreHaltingMachine)->Unit(benchmark::kMillisecond);

void BM_VerifyWorkedExampleStrategy(benchmark::State& state) {
    const Game g = fixture("paper-example.game");
    const auto s = extract_strategy(g, solve_finite(g));
    for (auto _ : state) benchmark::DoNotOptimize(verify_strategy(g, *s));
}
BENCHMARK(BM_VerifyWorkedExampleStrategy)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace netgames

BENCHMARK_MAIN();
