#include "netgames/solver.hpp"

#include <algorithm>
#include <chrono>
#include <limits>

#include "position_graph.hpp"

namespace netgames {

using detail::GraphSolution;
using detail::PositionGraph;

std::string to_string(Winner w) {
    switch (w) {
    case Winner::ConstructorWins: return "constructor";
    case Winner::DestructorWins: return "destructor";
    case Winner::Unknown: return "unknown";
    }
    return "unknown";
}

std::string to_string(SolverId s) {
    switch (s) {
    case SolverId::Finite: return "finite";
    case SolverId::BoundedSafety: return "bounded-safety";
    case SolverId::NoMove: return "no-move";
    case SolverId::BoundedReach: return "bounded-reach";
    case SolverId::Explore: return "explore";
    }
    return "explore";
}

std::string to_string(CertificateKind k) {
    switch (k) {
    case CertificateKind::None: return "none";
    case CertificateKind::Attractor: return "attractor";
    case CertificateKind::Closure: return "closure";
    case CertificateKind::BudgetTree: return "budget-tree";
    }
    return "none";
}

std::optional<SolverId> parse_solver_id(std::string_view name) {
    for (auto id : {SolverId::Finite, SolverId::BoundedSafety, SolverId::NoMove, SolverId::BoundedReach,
                    SolverId::Explore})
        if (to_string(id) == name) return id;
    return std::nullopt;
}

std::optional<HalfMove> Certificate::lookup(const CanonicalKey& key, std::uint64_t budget, Actor budget_holder) const {
    if (!start_budget) {
        auto it = moves.find(key);
        if (it == moves.end()) return std::nullopt;
        return it->second;
    }
    auto it = thresholds.find(key);
    if (it == thresholds.end()) return std::nullopt;
    const bool holder = owner == budget_holder;
    if (holder ? budget >= it->second.budget : budget <= it->second.budget) return it->second.move;
    return std::nullopt;
}

namespace {

using Clock = std::chrono::steady_clock;

std::uint64_t elapsed_ms(Clock::time_point start) {
    return static_cast<std::uint64_t>(
        std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count());
}

Winner winner_of(Actor a) {
    return a == Actor::Constructor ? Winner::ConstructorWins : Winner::DestructorWins;
}

void require_initial_objective(const Game& game) {
    const bool connected = is_connected(game.initial);
    if (game.objective == Objective::Safety && !connected)
        throw FragmentMismatch("safety games must start connected");
    if (game.objective == Objective::Reachability && connected)
        throw FragmentMismatch("reachability games must start disconnected");
}

// Builds the certificate of the player owning the decided initial position.
std::shared_ptr<Certificate> graph_certificate(const PositionGraph& graph, const GraphSolution& sol, Actor owner) {
    auto cert = std::make_shared<Certificate>();
    cert->owner = owner;
    cert->model = graph.model();
    cert->prune_deleted = graph.prune_deleted();
    for (std::uint32_t u = 0; u < graph.size(); ++u) {
        if (graph.at(u).actor != owner || sol.choice[u] < 0) continue;
        const auto moves = graph.moves(u);
        cert->moves.emplace(graph.key(u), moves[static_cast<std::size_t>(sol.choice[u])]);
    }
    return cert;
}

// Expands everything reachable from the root, up to a ceiling. Returns false
// when the ceiling was hit.
bool expand_all(PositionGraph& graph, std::uint64_t max_states, SolverStats& stats) {
    for (std::uint32_t u = 0; u < graph.size(); ++u) {
        if (graph.size() > max_states) return false;
        graph.expand(u);
        stats.max_depth = std::max<std::uint64_t>(stats.max_depth, graph.at(u).depth);
    }
    return true;
}

Verdict solve_whole_graph(const Game& game, PlayModel model, bool prune, SolverId id, const ExactLimits& limits) {
    const auto start = Clock::now();
    PositionGraph graph(game, model, prune);
    const auto root = graph.add_root(game.initial, Actor::Destructor);
    Verdict v;
    v.solver = id;
    const bool complete = expand_all(graph, limits.max_states, v.stats);
    v.stats.states = graph.size();
    if (complete) {
        const Actor reaching = reaching_player(game.objective);
        const auto sol = detail::solve_graph(graph, reaching);
        const Actor winner = sol.reach[root] ? reaching : opponent(reaching);
        v.winner = winner_of(winner);
        v.kind = sol.reach[root] ? CertificateKind::Attractor : CertificateKind::Closure;
        v.certificate = graph_certificate(graph, sol, winner);
    }
    v.stats.millis = elapsed_ms(start);
    return v;
}

// Depth-first search of the truncated game tree. The budget holder must
// reach the objective's terminal condition; each of its moves spends one
// unit, and an exhausted budget on its turn is a loss. Results are monotone
// in the budget, so the memo keeps, per position, the least budget known to
// win and the greatest known to lose. The remaining budget strictly falls
// along every path, so (position, budget) never repeats.
class BudgetedSearch {
public:
    BudgetedSearch(PositionGraph& graph, Actor holder, std::uint64_t max_states)
        : graph_(graph), holder_(holder), max_states_(max_states) {}

    static constexpr std::uint64_t kNone = std::numeric_limits<std::uint64_t>::max();

    /// nullopt when the state ceiling was reached.
    std::optional<bool> holder_wins(std::uint32_t root, std::uint64_t budget) {
        if (auto r = immediate(root, budget)) return *r;
        stack_.clear();
        push(root, budget);
        std::optional<bool> returned;
        while (!stack_.empty()) {
            const std::size_t top = stack_.size() - 1;
            if (returned) {
                const bool r = *returned;
                returned.reset();
                if (decisive(stack_[top], r)) {
                    returned = finish(top, r);
                    continue;
                }
                ++stack_[top].next;
            }
            bool descended = false;
            while (stack_[top].next < successors(top).size()) {
                Frame& f = stack_[top];
                const auto child = successors(top)[f.next];
                const auto cb = f.holder_turn ? f.budget - 1 : f.budget;
                if (auto r = immediate(child, cb)) {
                    if (decisive(f, *r)) break;
                    ++f.next;
                    continue;
                }
                if (graph_.size() > max_states_) return std::nullopt;
                push(child, cb);
                descended = true;
                break;
            }
            if (descended) continue;
            Frame& f = stack_[top];
            if (f.next < successors(top).size()) {
                returned = finish(top, f.holder_turn);
            } else {
                returned = finish(top, !f.holder_turn);
            }
        }
        return returned;
    }

    std::uint64_t win_at(std::uint32_t id) const { return id < win_at_.size() ? win_at_[id] : kNone; }

    std::shared_ptr<Certificate> certificate(Actor owner, std::uint64_t start_budget) const {
        auto cert = std::make_shared<Certificate>();
        cert->owner = owner;
        cert->model = graph_.model();
        cert->prune_deleted = graph_.prune_deleted();
        cert->start_budget = start_budget;
        const bool holder = owner == holder_;
        for (std::uint32_t u = 0; u < graph_.size() && u < win_at_.size(); ++u) {
            if (graph_.at(u).actor != owner) continue;
            const std::int32_t move = holder ? win_move_[u] : lose_move_[u];
            if (move < 0) continue;
            const std::uint64_t threshold = holder ? win_at_[u] : static_cast<std::uint64_t>(lose_at_[u]);
            cert->thresholds.emplace(graph_.key(u),
                                     Certificate::Threshold{threshold, graph_.moves(u)[static_cast<std::size_t>(move)]});
        }
        return cert;
    }

private:
    struct Frame {
        std::uint32_t pos;
        std::uint64_t budget;
        std::size_t next;
        bool holder_turn;
    };

    void grow() {
        if (win_at_.size() < graph_.size()) {
            win_at_.resize(graph_.size(), kNone);
            lose_at_.resize(graph_.size(), -1);
            win_move_.resize(graph_.size(), -1);
            lose_move_.resize(graph_.size(), -1);
        }
    }

    const std::vector<std::uint32_t>& successors(std::size_t frame) const {
        return graph_.at(stack_[frame].pos).successors;
    }

    std::optional<bool> immediate(std::uint32_t id, std::uint64_t budget) {
        grow();
        const auto& e = graph_.at(id);
        if (e.resolved) return true;
        if (e.safe_terminal) return false;
        if (e.actor == holder_ && budget == 0) return false;
        if (win_at_[id] <= budget) return true;
        if (lose_at_[id] >= 0 && budget <= static_cast<std::uint64_t>(lose_at_[id])) return false;
        return std::nullopt;
    }

    void push(std::uint32_t id, std::uint64_t budget) {
        graph_.expand(id);
        grow();
        stack_.push_back(Frame{id, budget, 0, graph_.at(id).actor == holder_});
    }

    static bool decisive(const Frame& f, bool holder_won) { return f.holder_turn == holder_won; }

    bool finish(std::size_t top, bool holder_won) {
        const Frame f = stack_[top];
        const auto move = static_cast<std::int32_t>(f.next);
        const bool chose = f.next < graph_.at(f.pos).successors.size();
        if (holder_won) {
            if (f.budget < win_at_[f.pos]) {
                win_at_[f.pos] = f.budget;
                win_move_[f.pos] = (f.holder_turn && chose) ? move : -1;
            }
        } else if (static_cast<std::int64_t>(f.budget) > lose_at_[f.pos]) {
            lose_at_[f.pos] = static_cast<std::int64_t>(f.budget);
            lose_move_[f.pos] = (!f.holder_turn && chose) ? move : -1;
        }
        stack_.pop_back();
        return holder_won;
    }

    PositionGraph& graph_;
    Actor holder_;
    std::uint64_t max_states_;
    std::vector<Frame> stack_;
    std::vector<std::uint64_t> win_at_;
    std::vector<std::int64_t> lose_at_;
    std::vector<std::int32_t> win_move_;
    std::vector<std::int32_t> lose_move_;
};

// Runs the truncated search with growing budgets; a win under a smaller
// budget is a win under the full one.
Verdict solve_budgeted(const Game& game, PlayModel model, SolverId id, std::uint64_t budget, const ExactLimits& limits) {
    const auto start = Clock::now();
    const Actor holder = reaching_player(game.objective);
    PositionGraph graph(game, model, false);
    const auto root = graph.add_root(game.initial, Actor::Destructor);
    BudgetedSearch search(graph, holder, limits.max_states);

    Verdict v;
    v.solver = id;
    v.stats.budget = budget;
    std::uint64_t b = std::min<std::uint64_t>(budget, 1);
    for (;;) {
        const auto r = search.holder_wins(root, b);
        if (!r) break;
        if (*r) {
            v.winner = winner_of(holder);
            v.kind = CertificateKind::BudgetTree;
            v.stats.budget_used = search.win_at(root);
            v.certificate = search.certificate(holder, b);
            break;
        }
        if (b >= budget) {
            v.winner = winner_of(opponent(holder));
            v.kind = CertificateKind::BudgetTree;
            v.stats.budget_used = budget;
            v.certificate = search.certificate(opponent(holder), budget);
            break;
        }
        b = b < 16 ? b + 1 : std::min(budget, 2 * b);
    }
    v.stats.states = graph.size();
    for (std::uint32_t u = 0; u < graph.size(); ++u)
        v.stats.max_depth = std::max<std::uint64_t>(v.stats.max_depth, graph.at(u).depth);
    v.stats.millis = elapsed_ms(start);
    return v;
}

// Breadth-first exploration in layers, re-solving the explored graph after
// each one. A position counts as decided only when the result cannot depend
// on the unexplored frontier.
class Explorer {
public:
    Explorer(const Game& game, PlayModel model, bool prune, const SearchLimits& limits, Clock::time_point deadline)
        : graph_(game, model, prune), limits_(limits), deadline_(deadline) {}

    Verdict run(const Network& start, Actor next, Objective objective) {
        const Actor reaching = reaching_player(objective);
        const auto root = graph_.add_root(start, next);
        Verdict v;
        v.solver = SolverId::Explore;
        std::vector<std::uint32_t> layer{root};
        std::uint64_t depth = 0;
        bool cut = false;
        auto decide = [&](const GraphSolution& sol) {
            if (sol.reach[root]) {
                v.winner = winner_of(reaching);
                v.kind = CertificateKind::Attractor;
                v.certificate = graph_certificate(graph_, sol, reaching);
                return true;
            }
            if (sol.safe[root]) {
                v.winner = winner_of(opponent(reaching));
                v.kind = CertificateKind::Closure;
                v.certificate = graph_certificate(graph_, sol, opponent(reaching));
                return true;
            }
            return false;
        };

        while (!layer.empty() && depth < limits_.max_depth && !cut) {
            std::vector<std::uint32_t> next_layer;
            for (auto u : layer) {
                if (graph_.size() >= limits_.max_states || Clock::now() >= deadline_) {
                    cut = true;
                    break;
                }
                const auto before = static_cast<std::uint32_t>(graph_.size());
                graph_.expand(u);
                for (auto id = before; id < graph_.size(); ++id) next_layer.push_back(id);
            }
            ++depth;
            v.stats.max_depth = depth;
            layer = std::move(next_layer);
            if (decide(detail::solve_graph(graph_, reaching))) break;
        }
        v.stats.states = graph_.size();
        return v;
    }

private:
    PositionGraph graph_;
    SearchLimits limits_;
    Clock::time_point deadline_;
};

}  // namespace

Verdict solve_finite(const Game& game, const ExactLimits& limits) {
    check_fragment(game, SolverId::Finite);
    return solve_whole_graph(game, PlayModel{}, false, SolverId::Finite, limits);
}

Verdict solve_safety_bounded(const Game& game, const ExactLimits& limits) {
    check_fragment(game, SolverId::BoundedSafety);
    auto budget = safety_deletion_budget(BudgetParameters::of(game.initial));
    // Without strongness nothing is ever restored or created, so the weak
    // supply bounds the deletions.
    if (game.initial.strong_count() == 0) budget = game.initial.weak_count();
    PlayModel model;
    model.strict_destructor = true;
    return solve_budgeted(game, model, SolverId::BoundedSafety, budget, limits);
}

Verdict solve_safety_no_move(const Game& game, const ExactLimits& limits) {
    check_fragment(game, SolverId::NoMove);
    PlayModel model;
    model.strict_destructor = true;
    return solve_whole_graph(game, model, true, SolverId::NoMove, limits);
}

Verdict solve_reachability_unlabeled(const Game& game, const ExactLimits& limits) {
    check_fragment(game, SolverId::BoundedReach);
    PlayModel model;
    model.constructor_never_skips = true;
    return solve_budgeted(game, model, SolverId::BoundedReach,
                          reachability_move_budget(BudgetParameters::of(game.initial)), limits);
}

Verdict explore_from(const Game& game, const Network& start, Actor next, const SearchLimits& limits) {
    const auto started = Clock::now();
    const auto deadline = started + std::chrono::milliseconds(limits.max_millis);
    const GameClass cls = classify(game);
    Verdict v;
    v.solver = SolverId::Explore;

    // With Move and weak creation the unpruned space grows without bound.
    // Constructor winning without ever moving is a win in the full game,
    // and without restorations deleted vertices are irrelevant, so that
    // restriction is tried first on a share of the limits.
    if (game.objective == Objective::Safety && cls.has_move && cls.has_weak_create && limits.max_depth > 0) {
        SearchLimits share = limits;
        share.max_states = std::max<std::uint64_t>(1, limits.max_states / 4);
        PlayModel restricted;
        restricted.constructor_move_free = true;
        Explorer first(game, restricted, true, share, started + std::chrono::milliseconds(limits.max_millis / 4));
        Verdict r = first.run(start, next, game.objective);
        v.stats.states += r.stats.states;
        if (r.winner == Winner::ConstructorWins) {
            r.stats.states = v.stats.states;
            r.stats.millis = elapsed_ms(started);
            return r;
        }
    }

    Explorer main(game, PlayModel{}, !cls.has_move, limits, deadline);
    Verdict r = main.run(start, next, game.objective);
    r.stats.states += v.stats.states;
    r.stats.millis = elapsed_ms(started);
    return r;
}

Verdict explore(const Game& game, const SearchLimits& limits) {
    return explore_from(game, game.initial, Actor::Destructor, limits);
}

SolverId select_solver(const Game& game) {
    const GameClass c = classify(game);
    if (c.is_unlabeled && game.objective == Objective::Reachability) return SolverId::BoundedReach;
    if (c.is_non_expanding) return SolverId::Finite;
    if (game.objective == Objective::Safety && !c.has_weak_create) return SolverId::BoundedSafety;
    if (game.objective == Objective::Safety && !c.has_move) return SolverId::NoMove;
    return SolverId::Explore;
}

void check_fragment(const Game& game, SolverId solver) {
    const GameClass c = classify(game);
    switch (solver) {
    case SolverId::Finite:
        if (!c.is_non_expanding) throw FragmentMismatch("finite solver needs a non-expanding game");
        break;
    case SolverId::BoundedSafety:
        if (game.objective != Objective::Safety) throw FragmentMismatch("bounded-safety solver needs a safety game");
        if (c.has_weak_create) throw FragmentMismatch("bounded-safety solver rejects weak creation rules");
        break;
    case SolverId::NoMove:
        if (game.objective != Objective::Safety) throw FragmentMismatch("no-move solver needs a safety game");
        if (c.has_move) throw FragmentMismatch("no-move solver rejects move rules");
        break;
    case SolverId::BoundedReach:
        if (game.objective != Objective::Reachability)
            throw FragmentMismatch("bounded-reach solver needs a reachability game");
        if (!c.is_unlabeled) throw FragmentMismatch("bounded-reach solver needs an unlabeled game");
        break;
    case SolverId::Explore:
        break;
    }
    require_initial_objective(game);
}

Verdict solve(const Game& game, SolverId solver, const SearchLimits& limits) {
    switch (solver) {
    case SolverId::Finite: return solve_finite(game);
    case SolverId::BoundedSafety: return solve_safety_bounded(game);
    case SolverId::NoMove: return solve_safety_no_move(game);
    case SolverId::BoundedReach: return solve_reachability_unlabeled(game);
    case SolverId::Explore: return explore(game, limits);
    }
    return explore(game, limits);
}

}  // namespace netgames
