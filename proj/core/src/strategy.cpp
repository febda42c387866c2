#include "netgames/strategy.hpp"

#include <deque>
#include <set>

namespace netgames {
namespace {

bool is_move_rule(const Game& game, const HalfMove& m) {
    return m.kind == MoveKind::Apply && m.rule < game.rules.size() &&
           std::holds_alternative<MoveRule>(game.rules[m.rule]);
}

// Why `m` is not available to `actor` under `model`, or empty if it is.
std::string model_violation(const Game& game, const Network& net, Actor actor, const PlayModel& model,
                            const HalfMove& m) {
    if (m.actor != actor) return "move belongs to the other player";
    if (actor == Actor::Destructor) {
        if (m.kind == MoveKind::Apply) return "Destructor cannot apply rules";
        if (model.strict_destructor && m.kind == MoveKind::Skip && net.weak_count() > 0)
            return "skip while a weak node exists";
    } else {
        if (m.kind == MoveKind::Delete) return "Constructor cannot delete";
        if (model.constructor_never_skips && m.kind == MoveKind::Skip) return "skip not allowed";
        if (model.constructor_move_free && is_move_rule(game, m)) return "move rules not allowed";
    }
    return {};
}

void check_consistent(const Game& game, const PositionalStrategy& s) {
    if (s.objective != game.objective)
        throw StrategyMismatch("strategy is for a " + to_string(s.objective) + " game, not " +
                               to_string(game.objective));
    if (!s.alphabet.empty() && s.alphabet != game.alphabet.names())
        throw StrategyMismatch("strategy labels differ from the game's alphabet");
    for (const auto& [k, m] : s.table) {
        if (k.key.actor() != s.owner || m.actor != s.owner)
            throw StrategyMismatch("strategy owner is " + to_string(s.owner) + " but its entries are not");
        if (!s.mode.budgeted() && k.budget != 0) throw StrategyMismatch("budget-indexed entry in an unbudgeted table");
    }
    if (s.mode.prune_deleted && classify(game).has_move &&
        !(s.owner == Actor::Constructor && s.mode.model.constructor_move_free))
        throw StrategyMismatch("tables that ignore deleted vertices need a game without move rules");
}

}  // namespace

std::optional<HalfMove> strategy_move(const PositionalStrategy& strategy, const Network& network, Actor next,
                                      std::uint64_t budget) {
    const CanonicalForm form = canonical_form(network, next, strategy.mode.prune_deleted);
    const auto it = strategy.table.find(StrategyKey{form.key, strategy.mode.budgeted() ? budget : 0});
    if (it == strategy.table.end()) return std::nullopt;
    return to_concrete(it->second, form);
}

std::optional<PositionalStrategy> extract_strategy(const Game& game, const Verdict& verdict,
                                                   const ExtractLimits& limits) {
    if (verdict.winner == Winner::Unknown || !verdict.certificate) return std::nullopt;
    const Certificate& cert = *verdict.certificate;
    const Actor owner = verdict.winner == Winner::ConstructorWins ? Actor::Constructor : Actor::Destructor;
    if (cert.owner != owner) return std::nullopt;
    const Actor holder = reaching_player(game.objective);

    PositionalStrategy s;
    s.owner = owner;
    s.objective = game.objective;
    s.mode.model = cert.model;
    s.mode.prune_deleted = cert.prune_deleted;
    s.mode.start_budget = cert.start_budget;
    s.alphabet = game.alphabet.names();
    const bool budgeted = s.mode.budgeted();

    std::set<StrategyKey> seen;
    std::deque<StrategyKey> queue;
    auto push = [&](StrategyKey k) {
        if (seen.insert(k).second) queue.push_back(std::move(k));
    };
    push(StrategyKey{canonical_key(game.initial, Actor::Destructor, cert.prune_deleted),
                     budgeted ? *cert.start_budget : 0});

    while (!queue.empty()) {
        if (seen.size() > limits.max_positions) return std::nullopt;
        const StrategyKey sk = queue.front();
        queue.pop_front();
        const Network rep = decode_key(sk.key);
        const Actor actor = sk.key.actor();
        if (objective_resolved(game.objective, rep)) continue;
        if (cert.model.strict_destructor && actor == Actor::Destructor && rep.weak_count() == 0) continue;
        if (budgeted && actor == holder && sk.budget == 0) continue;

        std::vector<HalfMove> moves;
        if (actor == owner) {
            auto m = cert.lookup(sk.key, sk.budget, holder);
            if (!m) return std::nullopt;
            s.table.emplace(sk, *m);
            moves.push_back(*m);
        } else {
            moves = enumerate_moves(rep, game.rules, actor, cert.model);
        }
        const std::uint64_t next_budget = budgeted && actor == holder ? sk.budget - 1 : sk.budget;
        for (const HalfMove& m : moves) {
            const Network next = apply_move(rep, game.rules, m);
            push(StrategyKey{canonical_key(next, opponent(actor), cert.prune_deleted), next_budget});
        }
    }
    return s;
}

VerifyResult verify_strategy(const Game& game, const PositionalStrategy& strategy, const VerifyLimits& limits) {
    check_consistent(game, strategy);
    const Actor owner = strategy.owner;
    const Actor holder = reaching_player(game.objective);
    const bool owner_reaches = owner == holder;
    const bool budgeted = strategy.mode.budgeted();
    const PlayModel& model = strategy.mode.model;

    struct Frame {
        Network net;
        Actor actor;
        std::uint64_t budget;
        StrategyKey key;
        std::vector<HalfMove> moves;
        std::size_t next = 0;
    };

    VerifyResult result;
    std::vector<Frame> stack;
    std::vector<HalfMove> prefix;
    std::set<StrategyKey> done;
    std::set<StrategyKey> on_path;

    enum class Entered { Leaf, Pushed, Failed, Limit };
    auto fail = [&](std::string reason) {
        result.status = VerifyResult::Status::Counterexample;
        result.counterexample = Counterexample{prefix, std::move(reason)};
        return Entered::Failed;
    };

    auto enter = [&](Network net, Actor actor, std::uint64_t budget) -> Entered {
        if (objective_resolved(game.objective, net))
            return owner_reaches ? Entered::Leaf : fail("objective violated");
        if (model.strict_destructor && actor == Actor::Destructor && net.weak_count() == 0)
            return owner == Actor::Constructor ? Entered::Leaf : fail("no weak node left to delete");
        if (budgeted && actor == holder && budget == 0)
            return owner_reaches ? fail("budget exhausted") : Entered::Leaf;

        const CanonicalForm form = canonical_form(net, actor, strategy.mode.prune_deleted);
        StrategyKey sk{form.key, budgeted ? budget : 0};
        if (done.count(sk)) return Entered::Leaf;
        if (on_path.count(sk))
            return owner_reaches && !budgeted ? fail("cycle without reaching the objective") : Entered::Leaf;
        if (++result.positions > limits.max_positions) {
            result.status = VerifyResult::Status::Inconclusive;
            return Entered::Limit;
        }

        std::vector<HalfMove> moves;
        if (actor == owner) {
            const auto it = strategy.table.find(sk);
            if (it == strategy.table.end()) return fail("uncovered position");
            HalfMove m;
            try {
                m = to_concrete(it->second, form);
            } catch (const IllegalMove& e) {
                prefix.push_back(it->second);
                return fail(std::string("illegal move: ") + e.what());
            }
            prefix.push_back(m);
            if (auto why = model_violation(game, net, actor, model, m); !why.empty()) return fail("illegal move: " + why);
            try {
                (void)apply_move(net, game.rules, m);
            } catch (const IllegalMove& e) {
                return fail(std::string("illegal move: ") + e.what());
            }
            prefix.pop_back();
            moves.push_back(m);
        } else {
            moves = enumerate_moves(net, game.rules, actor, model);
        }
        on_path.insert(sk);
        stack.push_back(Frame{std::move(net), actor, budget, std::move(sk), std::move(moves)});
        return Entered::Pushed;
    };

    switch (enter(game.initial, Actor::Destructor, budgeted ? *strategy.mode.start_budget : 0)) {
    case Entered::Failed:
    case Entered::Limit: return result;
    default: break;
    }

    while (!stack.empty()) {
        Frame& top = stack.back();
        if (top.next < top.moves.size()) {
            const HalfMove m = top.moves[top.next++];
            Network child = apply_move(top.net, game.rules, m);
            const Actor actor = opponent(top.actor);
            const std::uint64_t budget = budgeted && top.actor == holder ? top.budget - 1 : top.budget;
            prefix.push_back(m);
            const Entered r = enter(std::move(child), actor, budget);
            if (r == Entered::Failed || r == Entered::Limit) return result;
            if (r == Entered::Leaf) prefix.pop_back();
            continue;
        }
        done.insert(top.key);
        on_path.erase(top.key);
        stack.pop_back();
        if (!prefix.empty() && !stack.empty()) prefix.pop_back();
    }
    return result;
}

}  // namespace netgames
