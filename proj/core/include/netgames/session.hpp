#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "netgames/game.hpp"
#include "netgames/moves.hpp"
#include "netgames/solver.hpp"
#include "netgames/strategy.hpp"

namespace netgames {

/// A game played by a human against an engine. The engine answers from a
/// strategy table when it covers the position and otherwise searches live
/// with explore_from.
class PlaySession {
public:
    PlaySession(const Game& game, Actor human, std::optional<PositionalStrategy> strategy, SearchLimits live_limits);

    const Network& network() const { return network_; }
    Actor next() const { return next_; }
    Actor human() const { return human_; }
    std::size_t turns() const { return moves_.size(); }
    const std::vector<HalfMove>& history() const { return moves_; }

    /// Set once the objective's terminal condition holds.
    std::optional<Winner> result() const { return result_; }
    bool over() const { return result_.has_value(); }

    std::vector<HalfMove> human_moves() const;
    /// Applies the human's move with the given index into human_moves().
    /// Returns false for an out-of-range index.
    bool play_human(std::size_t index);

    /// Chooses and applies the engine's move. Warnings (uncovered strategy
    /// position, live fallback) are appended to `notes`.
    HalfMove play_engine(std::vector<std::string>& notes);

    /// Multi-line view: vertices with flags, adjacency, connectivity, level.
    std::string render() const;

private:
    void apply(const HalfMove& m);

    const Game& game_;
    Actor human_;
    std::optional<PositionalStrategy> strategy_;
    SearchLimits live_limits_;
    Network network_;
    Actor next_ = Actor::Destructor;
    std::uint64_t budget_ = 0;
    std::vector<HalfMove> moves_;
    std::optional<Winner> result_;
};

}  // namespace netgames
