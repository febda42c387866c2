#pragma once

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "netgames/canonical.hpp"
#include "netgames/game.hpp"
#include "netgames/moves.hpp"

namespace netgames::detail {

/// Lazily expanded graph of canonical positions. Each position stores only
/// its key; the representative network is decoded when it is expanded.
class PositionGraph {
public:
    struct Entry {
        const CanonicalKey* key = nullptr;
        Actor actor = Actor::Destructor;
        /// The objective's terminal condition holds here.
        bool resolved = false;
        /// Strict model only: Destructor to move with no weak node.
        bool safe_terminal = false;
        bool expanded = false;
        std::uint32_t depth = 0;
        /// Successor per enumerated move, in move order.
        std::vector<std::uint32_t> successors;
    };

    PositionGraph(const Game& game, PlayModel model, bool prune_deleted);

    std::uint32_t add_root(const Network& network, Actor next);
    void expand(std::uint32_t id);

    std::size_t size() const { return entries_.size(); }
    const Entry& at(std::uint32_t id) const { return entries_[id]; }
    const CanonicalKey& key(std::uint32_t id) const { return *entries_[id].key; }
    Network representative(std::uint32_t id) const { return decode_key(*entries_[id].key); }
    std::vector<HalfMove> moves(std::uint32_t id) const;

    const PlayModel& model() const { return model_; }
    bool prune_deleted() const { return prune_; }
    const Game& game() const { return game_; }

private:
    std::uint32_t intern(CanonicalKey key, const Network& network, std::uint32_t depth);

    const Game& game_;
    PlayModel model_;
    bool prune_;
    std::vector<Entry> entries_;
    std::unordered_map<CanonicalKey, std::uint32_t, CanonicalKeyHash> index_;
};

/// Result of solving a (possibly partially expanded) position graph.
/// `reach` marks positions from which the reaching player forces the
/// objective's terminal condition; `safe` marks a trap for the reaching
/// player consisting of expanded positions only. Positions in neither are
/// undetermined. `choice` holds the winning move index for the owner of
/// each decided position, or -1.
struct GraphSolution {
    std::vector<char> reach;
    std::vector<char> safe;
    std::vector<std::uint32_t> rank;
    std::vector<std::int32_t> choice;
};

GraphSolution solve_graph(const PositionGraph& graph, Actor reaching);

}  // namespace netgames::detail
