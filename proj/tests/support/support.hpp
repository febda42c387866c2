#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "netgames/game.hpp"
#include "netgames/reductions.hpp"
#include "netgames/solver.hpp"

namespace netgames::testing {

std::string fixture_path(const std::string& name);
Game load_fixture(const std::string& name);
VertexId vertex(const Game& game, const std::string& name);

/// Vertices 0..n-1, all active and weak unless listed.
Network make_network(std::size_t n, const std::vector<std::pair<int, int>>& edges,
                     const std::vector<int>& strong = {}, const std::vector<int>& deleted = {});

struct RandomGameOptions {
    std::size_t max_vertices = 4;
    std::size_t max_labels = 2;
    std::size_t max_rules = 4;
    Objective objective = Objective::Safety;
    bool allow_relabel = true;
    bool allow_create = false;
};

/// A random game satisfying its objective's precondition.
Game random_game(std::mt19937_64& rng, const RandomGameOptions& options);
/// Unlabeled reachability game: blank labels, rule set {move(_,_)}.
Game random_unlabeled_reachability(std::mt19937_64& rng, std::size_t max_vertices);
Network random_network(std::mt19937_64& rng, std::size_t n, std::size_t labels);
/// Relabels vertex ids by a random permutation, keeping next_id.
Network permute(const Network& network, std::mt19937_64& rng);

/// Connected graphs on at most 5 vertices and at most 6 edges, pairwise
/// non-isomorphic up to vertex naming, in a fixed order.
std::vector<UndirectedGraphSpec> small_connected_graphs();
/// Graphs on 2 to 5 vertices with 1 to 6 edges, isolated vertices allowed,
/// pairwise non-isomorphic.
std::vector<UndirectedGraphSpec> small_graphs_with_edges();
/// A graph with shuffled vertex and edge order and at least one edge.
UndirectedGraphSpec random_graph(std::mt19937_64& rng, std::size_t max_vertices, std::size_t max_edges);

/// Rule count per family of build_tm_safety_game, from the ranges each
/// family quantifies over.
RuleManifest expected_tm_manifest(const TuringMachineSpec& tm);

/// Smallest vertex cover, by trying every vertex subset.
std::size_t min_vertex_cover(const UndirectedGraphSpec& graph);

/// Retrograde analysis over concrete networks, with no canonical forms and
/// no shared graph code. Non-expanding games only.
Winner naive_winner(const Game& game);
Winner naive_winner_from(const Game& game, const Network& start, Actor next);

}  // namespace netgames::testing
