#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>

#include "netgames/budgets.hpp"
#include "netgames/canonical.hpp"
#include "netgames/game.hpp"
#include "netgames/moves.hpp"

namespace netgames {

enum class Winner { ConstructorWins, DestructorWins, Unknown };
enum class SolverId { Finite, BoundedSafety, NoMove, BoundedReach, Explore };
enum class CertificateKind { None, Attractor, Closure, BudgetTree };

std::string to_string(Winner w);
std::string to_string(SolverId s);
std::string to_string(CertificateKind k);
std::optional<SolverId> parse_solver_id(std::string_view name);

struct SearchLimits {
    std::uint64_t max_depth = 60;
    std::uint64_t max_states = 500'000;
    std::uint64_t max_millis = 30'000;
};

struct SolverStats {
    std::uint64_t states = 0;
    std::uint64_t max_depth = 0;
    std::uint64_t millis = 0;
    /// Closed-form budget bound, for the bounded solvers.
    std::optional<std::uint64_t> budget;
    /// Budget at which the search settled: for a budget-holder win, an
    /// upper bound on the deletions (safety) or moves (reachability) used.
    std::optional<std::uint64_t> budget_used;
};

/// Winning choices recorded by a solver, in canonical-representative
/// coordinates. Unbudgeted certificates map a position key to a move.
/// Budget-indexed ones store a threshold per key: the holder's move is
/// winning for every remaining budget >= threshold; the opponent's move for
/// every remaining budget <= threshold.
struct Certificate {
    struct Threshold {
        std::uint64_t budget = 0;
        HalfMove move;
    };

    Actor owner = Actor::Constructor;
    PlayModel model;
    bool prune_deleted = false;
    std::optional<std::uint64_t> start_budget;
    std::unordered_map<CanonicalKey, HalfMove, CanonicalKeyHash> moves;
    std::unordered_map<CanonicalKey, Threshold, CanonicalKeyHash> thresholds;

    std::optional<HalfMove> lookup(const CanonicalKey& key, std::uint64_t budget, Actor budget_holder) const;
};

struct Verdict {
    Winner winner = Winner::Unknown;
    SolverId solver = SolverId::Explore;
    CertificateKind kind = CertificateKind::None;
    std::shared_ptr<const Certificate> certificate;
    SolverStats stats;
};

/// Raised when a solver is asked to decide a game outside its fragment.
class FragmentMismatch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Exact solvers stop with Unknown past this many canonical positions.
struct ExactLimits {
    std::uint64_t max_states = 1'000'000;
};

/// Non-expanding games, either objective: attractor over the full position
/// graph.
Verdict solve_finite(const Game& game, const ExactLimits& limits = {});

/// Safety without weak creation: depth-first search against a strict
/// Destructor, truncated after safety_deletion_budget deletions.
Verdict solve_safety_bounded(const Game& game, const ExactLimits& limits = {});

/// Safety without Move rules: fixpoint over positions with deleted vertices
/// pruned (nothing can restore them).
Verdict solve_safety_no_move(const Game& game, const ExactLimits& limits = {});

/// Unlabeled reachability: depth-first search where Constructor never skips,
/// truncated after reachability_move_budget moves.
Verdict solve_reachability_unlabeled(const Game& game, const ExactLimits& limits = {});

/// Any game. Breadth-first exploration within limits; certifies the
/// reaching player by a forced finite horizon and the other player by a
/// frontier-closed trap. Otherwise Unknown.
Verdict explore(const Game& game, const SearchLimits& limits = {});
Verdict explore_from(const Game& game, const Network& start, Actor next, const SearchLimits& limits);

SolverId select_solver(const Game& game);
/// Throws FragmentMismatch if `solver` does not apply to `game`.
void check_fragment(const Game& game, SolverId solver);
Verdict solve(const Game& game, SolverId solver, const SearchLimits& limits = {});

}  // namespace netgames
