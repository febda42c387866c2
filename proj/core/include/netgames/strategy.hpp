#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "netgames/canonical.hpp"
#include "netgames/game.hpp"
#include "netgames/moves.hpp"
#include "netgames/solver.hpp"

namespace netgames {

/// How the positions of a strategy table are keyed and which restrictions
/// the opponent is held to.
struct StrategyMode {
    PlayModel model;
    bool prune_deleted = false;
    /// Budget of the reaching player at the initial position, for
    /// budget-indexed tables.
    std::optional<std::uint64_t> start_budget;

    bool budgeted() const { return start_budget.has_value(); }
    bool operator==(const StrategyMode&) const = default;
};

/// Table key. `budget` is the reaching player's remaining budget, and 0 in
/// tables that are not budget-indexed.
struct StrategyKey {
    CanonicalKey key;
    std::uint64_t budget = 0;

    bool operator==(const StrategyKey&) const = default;
    auto operator<=>(const StrategyKey&) const = default;
};

/// Moves are stored in the coordinates of each key's representative
/// network and transported to concrete networks on use.
struct PositionalStrategy {
    Actor owner = Actor::Constructor;
    Objective objective = Objective::Safety;
    StrategyMode mode;
    /// Label names the keys' label ids refer to.
    std::vector<std::string> alphabet;
    std::map<StrategyKey, HalfMove> table;

    bool operator==(const PositionalStrategy&) const = default;
};

/// Raised when a strategy cannot be checked against a game at all: owner or
/// objective inconsistent, or a keying mode the game does not support.
class StrategyMismatch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct ExtractLimits {
    std::uint64_t max_positions = 1'000'000;
};

/// Restricts a verdict's certificate to the positions reachable when the
/// winner follows it and the opponent plays every move its model allows.
/// nullopt for Unknown verdicts, verdicts without a certificate, or when
/// the limit is hit.
std::optional<PositionalStrategy> extract_strategy(const Game& game, const Verdict& verdict,
                                                   const ExtractLimits& limits = {});

struct VerifyLimits {
    std::uint64_t max_positions = 2'000'000;
};

struct Counterexample {
    /// Concrete moves from the initial position, the last one leading to
    /// (or being) the failure.
    std::vector<HalfMove> prefix;
    std::string reason;
};

struct VerifyResult {
    enum class Status { Ok, Counterexample, Inconclusive };
    Status status = Status::Ok;
    Counterexample counterexample;
    std::uint64_t positions = 0;

    bool ok() const { return status == Status::Ok; }
};

/// Plays every opponent move against the strategy, depth first in move
/// enumeration order, so the reported counterexample is deterministic.
/// Throws StrategyMismatch when owner, objective or mode do not fit the game.
VerifyResult verify_strategy(const Game& game, const PositionalStrategy& strategy, const VerifyLimits& limits = {});

/// The owner's move in a concrete position, or nullopt if uncovered.
std::optional<HalfMove> strategy_move(const PositionalStrategy& strategy, const Network& network, Actor next,
                                      std::uint64_t budget = 0);

}  // namespace netgames
