#include "netgames/session.hpp"

#include <sstream>

namespace netgames {

PlaySession::PlaySession(const Game& game, Actor human, std::optional<PositionalStrategy> strategy,
                         SearchLimits live_limits)
    : game_(game), human_(human), strategy_(std::move(strategy)), live_limits_(live_limits), network_(game.initial) {
    if (strategy_ && strategy_->mode.start_budget) budget_ = *strategy_->mode.start_budget;
    if (objective_resolved(game_.objective, network_))
        result_ = reaching_player(game_.objective) == Actor::Constructor ? Winner::ConstructorWins
                                                                          : Winner::DestructorWins;
}

std::vector<HalfMove> PlaySession::human_moves() const {
    if (over() || next_ != human_) return {};
    return enumerate_moves(network_, game_.rules, human_);
}

bool PlaySession::play_human(std::size_t index) {
    const auto moves = human_moves();
    if (index >= moves.size()) return false;
    apply(moves[index]);
    return true;
}

void PlaySession::apply(const HalfMove& m) {
    network_ = apply_move(network_, game_.rules, m);
    if (next_ == reaching_player(game_.objective) && budget_ > 0) --budget_;
    moves_.push_back(m);
    next_ = opponent(next_);
    if (objective_resolved(game_.objective, network_))
        result_ = reaching_player(game_.objective) == Actor::Constructor ? Winner::ConstructorWins
                                                                          : Winner::DestructorWins;
}

HalfMove PlaySession::play_engine(std::vector<std::string>& notes) {
    const Actor engine = opponent(human_);
    std::optional<HalfMove> choice;
    if (strategy_) {
        if (auto m = strategy_move(*strategy_, network_, engine, budget_)) {
            try {
                (void)apply_move(network_, game_.rules, *m);
                choice = m;
            } catch (const IllegalMove&) {
                notes.push_back("strategy move is illegal here; searching live");
            }
        } else {
            notes.push_back("position not covered by the strategy; searching live");
        }
    }
    if (!choice) {
        const Verdict v = explore_from(game_, network_, engine, live_limits_);
        const Winner mine = engine == Actor::Constructor ? Winner::ConstructorWins : Winner::DestructorWins;
        if (v.winner == mine && v.certificate) {
            const CanonicalForm form = canonical_form(network_, engine, v.certificate->prune_deleted);
            if (auto it = v.certificate->moves.find(form.key); it != v.certificate->moves.end())
                choice = to_concrete(it->second, form);
        }
        if (!choice) {
            const auto moves = enumerate_moves(network_, game_.rules, engine);
            choice = moves.front();
            notes.push_back("no forced win found; playing the first legal move");
        }
    }
    apply(*choice);
    return *choice;
}

std::string PlaySession::render() const {
    std::ostringstream out;
    out << "vertices:";
    for (const Node& n : network_.nodes()) {
        out << ' ' << game_.vertex_name(n.id) << ':' << game_.alphabet.name(n.label);
        if (n.strong) out << '*';
        if (!n.active) out << '~';
    }
    out << "\nadjacency:";
    for (std::uint32_t p = 0; p < network_.size(); ++p) {
        if (!network_.node_at(p).active) continue;
        out << "\n  " << game_.vertex_name(network_.node_at(p).id) << ":";
        for (auto q : network_.neighbors_at(p))
            if (network_.node_at(q).active) out << ' ' << game_.vertex_name(network_.node_at(q).id);
    }
    out << "\nstatus: " << (is_connected(network_) ? "connected" : "disconnected") << ", level "
        << level(network_, next_) << ", " << to_string(next_) << " to move\n";
    return out.str();
}

}  // namespace netgames
