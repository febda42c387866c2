#include "position_graph.hpp"

#include <deque>

namespace netgames::detail {

PositionGraph::PositionGraph(const Game& game, PlayModel model, bool prune_deleted)
    : game_(game), model_(model), prune_(prune_deleted) {}

std::uint32_t PositionGraph::intern(CanonicalKey key, const Network& network, std::uint32_t depth) {
    auto [it, inserted] = index_.try_emplace(std::move(key), static_cast<std::uint32_t>(entries_.size()));
    if (!inserted) return it->second;
    Entry e;
    e.key = &it->first;
    e.actor = it->first.actor();
    e.depth = depth;
    e.resolved = objective_resolved(game_.objective, network);
    e.safe_terminal = !e.resolved && model_.strict_destructor && e.actor == Actor::Destructor &&
                      network.weak_count() == 0;
    entries_.push_back(std::move(e));
    return it->second;
}

std::uint32_t PositionGraph::add_root(const Network& network, Actor next) {
    return intern(canonical_key(network, next, prune_), network, 0);
}

std::vector<HalfMove> PositionGraph::moves(std::uint32_t id) const {
    return enumerate_moves(representative(id), game_.rules, entries_[id].actor, model_);
}

void PositionGraph::expand(std::uint32_t id) {
    if (entries_[id].expanded) return;
    // Terminal positions have no outgoing moves in the solved game.
    if (entries_[id].resolved || entries_[id].safe_terminal) {
        entries_[id].expanded = true;
        return;
    }
    const Network rep = representative(id);
    const Actor actor = entries_[id].actor;
    const std::uint32_t depth = entries_[id].depth + 1;
    std::vector<std::uint32_t> successors;
    for (const HalfMove& m : enumerate_moves(rep, game_.rules, actor, model_)) {
        const Network next = apply_move(rep, game_.rules, m);
        successors.push_back(intern(canonical_key(next, opponent(actor), prune_), next, depth));
    }
    entries_[id].successors = std::move(successors);
    entries_[id].expanded = true;
}

GraphSolution solve_graph(const PositionGraph& graph, Actor reaching) {
    const auto n = static_cast<std::uint32_t>(graph.size());
    GraphSolution sol;
    sol.reach.assign(n, 0);
    sol.safe.assign(n, 0);
    sol.rank.assign(n, UINT32_MAX);
    sol.choice.assign(n, -1);

    std::vector<std::vector<std::uint32_t>> preds(n);
    for (std::uint32_t u = 0; u < n; ++u)
        for (auto s : graph.at(u).successors) preds[s].push_back(u);

    // Attractor of the reaching player to resolved positions.
    std::vector<std::uint32_t> pending(n, 0);
    for (std::uint32_t u = 0; u < n; ++u) pending[u] = static_cast<std::uint32_t>(graph.at(u).successors.size());
    std::deque<std::uint32_t> queue;
    for (std::uint32_t u = 0; u < n; ++u)
        if (graph.at(u).resolved) {
            sol.reach[u] = 1;
            sol.rank[u] = 0;
            queue.push_back(u);
        }
    while (!queue.empty()) {
        const auto s = queue.front();
        queue.pop_front();
        for (auto u : preds[s]) {
            if (sol.reach[u]) continue;
            const auto& e = graph.at(u);
            if (e.actor == reaching) {
                sol.reach[u] = 1;
            } else if (--pending[u] == 0 && e.expanded) {
                sol.reach[u] = 1;
            }
            if (sol.reach[u]) {
                sol.rank[u] = sol.rank[s] + 1;
                queue.push_back(u);
            }
        }
    }

    // Greatest trap for the reaching player among expanded positions.
    std::vector<std::uint32_t> inside(n, 0);
    for (std::uint32_t u = 0; u < n; ++u) sol.safe[u] = graph.at(u).expanded && !sol.reach[u];
    for (std::uint32_t u = 0; u < n; ++u)
        for (auto s : graph.at(u).successors)
            if (sol.safe[s]) ++inside[u];
    std::vector<std::uint32_t> work;
    for (std::uint32_t u = 0; u < n; ++u) {
        if (!sol.safe[u]) continue;
        const auto& e = graph.at(u);
        const bool leaks = e.actor == reaching ? inside[u] != e.successors.size()
                                               : (inside[u] == 0 && !e.successors.empty());
        if (leaks) work.push_back(u);
    }
    // Safety-player positions without moves do not occur: both players may
    // skip unless a model removes it, and then the position is terminal.
    while (!work.empty()) {
        const auto v = work.back();
        work.pop_back();
        if (!sol.safe[v]) continue;
        sol.safe[v] = 0;
        for (auto u : preds[v]) {
            if (!sol.safe[u]) continue;
            --inside[u];
            if (graph.at(u).actor == reaching || inside[u] == 0) work.push_back(u);
        }
    }

    for (std::uint32_t u = 0; u < n; ++u) {
        const auto& e = graph.at(u);
        if (sol.reach[u] && e.actor == reaching && !e.resolved) {
            for (std::size_t i = 0; i < e.successors.size(); ++i)
                if (sol.reach[e.successors[i]] && sol.rank[e.successors[i]] < sol.rank[u]) {
                    sol.choice[u] = static_cast<std::int32_t>(i);
                    break;
                }
        } else if (sol.safe[u] && e.actor != reaching) {
            for (std::size_t i = 0; i < e.successors.size(); ++i)
                if (sol.safe[e.successors[i]]) {
                    sol.choice[u] = static_cast<std::int32_t>(i);
                    break;
                }
        }
    }
    return sol;
}

}  // namespace netgames::detail
