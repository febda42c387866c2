#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "netgames/game.hpp"

namespace netgames {

enum class MoveKind { Delete, Apply, Skip };

/// One half-turn. Bindings list concrete vertices:
///   Move rule:    {source, target}
///   Relabel rule: {u1, v1, u2, v2, ...}, one pair per step
///   Create rule:  {u1, ..., un}, one vertex per required label
struct HalfMove {
    Actor actor = Actor::Destructor;
    MoveKind kind = MoveKind::Skip;
    VertexId target{};
    std::size_t rule = 0;
    std::vector<VertexId> binding;

    static HalfMove skip(Actor a) { return HalfMove{a, MoveKind::Skip, {}, 0, {}}; }
    static HalfMove remove(VertexId v) { return HalfMove{Actor::Destructor, MoveKind::Delete, v, 0, {}}; }
    static HalfMove apply(std::size_t rule, std::vector<VertexId> binding) {
        return HalfMove{Actor::Constructor, MoveKind::Apply, {}, rule, std::move(binding)};
    }

    bool operator==(const HalfMove&) const = default;
};

/// Restrictions on the players used by the solvers. The unrestricted model
/// is the game as defined; the others are the winner-preserving
/// restrictions each solver relies on.
struct PlayModel {
    /// Destructor may skip only when no weak node exists. A Destructor turn
    /// with no weak node is then a Constructor win: she can skip forever.
    bool strict_destructor = false;
    /// Constructor never skips (reachability).
    bool constructor_never_skips = false;
    /// Constructor's Move rules are ignored.
    bool constructor_move_free = false;

    bool operator==(const PlayModel&) const = default;
};

std::vector<HalfMove> enumerate_destructor_moves(const Network& network);
std::vector<HalfMove> enumerate_constructor_moves(const Network& network, const std::vector<Rule>& rules);

/// Moves for `actor` under `model`, in canonical order.
std::vector<HalfMove> enumerate_moves(const Network& network, const std::vector<Rule>& rules, Actor actor,
                                      const PlayModel& model = {});

/// Returns the successor network. Throws IllegalMove with a reason when the
/// move is not legal in `network`.
Network apply_move(const Network& network, const std::vector<Rule>& rules, const HalfMove& move);

/// Sorts Create bindings within groups of interchangeable positions (equal
/// required and rewritten labels). Enumeration lists only normalized
/// bindings; apply_move accepts any order.
HalfMove normalize(const HalfMove& move, const std::vector<Rule>& rules);

/// Weak-node count, minus one when Constructor acts next (clamped at 0).
std::size_t level(const Network& network, Actor next);

std::string describe(const HalfMove& move, const Game& game);

}  // namespace netgames
