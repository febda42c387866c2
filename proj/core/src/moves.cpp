#include "netgames/moves.hpp"

#include <algorithm>
#include <numeric>

namespace netgames {
namespace {

void enumerate_relabel(const Network& net, const RelabelRule& rule, std::size_t rule_index, std::size_t step,
                       std::vector<LabelId>& labels, std::vector<VertexId>& binding, std::vector<HalfMove>& out) {
    if (step == rule.steps.size()) {
        out.push_back(HalfMove::apply(rule_index, binding));
        return;
    }
    const RelabelStep& s = rule.steps[step];
    for (std::uint32_t p = 0; p < net.size(); ++p) {
        if (!net.node_at(p).active || labels[p] != s.from_u) continue;
        for (auto q : net.neighbors_at(p)) {
            if (!net.node_at(q).active || labels[q] != s.from_v) continue;
            const LabelId old_p = labels[p], old_q = labels[q];
            labels[p] = s.to_u;
            labels[q] = s.to_v;
            binding.push_back(net.node_at(p).id);
            binding.push_back(net.node_at(q).id);
            enumerate_relabel(net, rule, rule_index, step + 1, labels, binding, out);
            binding.resize(binding.size() - 2);
            labels[q] = old_q;
            labels[p] = old_p;
        }
    }
}

// Positions i and j of a create rule are interchangeable iff both their
// required and rewritten labels agree.
bool interchangeable(const CreateRule& rule, std::size_t i, std::size_t j) {
    return rule.required[i] == rule.required[j] && rule.rewritten[i] == rule.rewritten[j];
}

void enumerate_create(const Network& net, const CreateRule& rule, std::size_t rule_index, std::size_t slot,
                      std::vector<char>& used, std::vector<std::uint32_t>& chosen, std::vector<HalfMove>& out) {
    if (slot == rule.required.size()) {
        std::vector<VertexId> binding;
        binding.reserve(chosen.size());
        for (auto p : chosen) binding.push_back(net.node_at(p).id);
        out.push_back(HalfMove::apply(rule_index, std::move(binding)));
        return;
    }
    std::uint32_t lower = 0;
    for (std::size_t j = slot; j-- > 0;) {
        if (interchangeable(rule, j, slot)) {
            lower = chosen[j] + 1;
            break;
        }
    }
    for (std::uint32_t p = lower; p < net.size(); ++p) {
        const Node& n = net.node_at(p);
        if (used[p] || !n.strong || n.label != rule.required[slot]) continue;
        used[p] = 1;
        chosen.push_back(p);
        enumerate_create(net, rule, rule_index, slot + 1, used, chosen, out);
        chosen.pop_back();
        used[p] = 0;
    }
}

[[noreturn]] void reject(const std::string& why) {
    throw IllegalMove(why);
}

std::uint32_t bound_position(const Network& net, VertexId id) {
    auto p = net.position(id);
    if (!p) reject("binding references unknown vertex " + std::to_string(to_index(id)));
    return *p;
}

}  // namespace

std::vector<HalfMove> enumerate_destructor_moves(const Network& network) {
    std::vector<HalfMove> out;
    for (const Node& n : network.nodes())
        if (n.weak()) out.push_back(HalfMove::remove(n.id));
    out.push_back(HalfMove::skip(Actor::Destructor));
    return out;
}

std::vector<HalfMove> enumerate_constructor_moves(const Network& network, const std::vector<Rule>& rules) {
    std::vector<HalfMove> out;
    for (std::size_t r = 0; r < rules.size(); ++r) {
        if (const auto* move = std::get_if<MoveRule>(&rules[r])) {
            for (std::uint32_t p = 0; p < network.size(); ++p) {
                const Node& src = network.node_at(p);
                if (!src.strong || src.label != move->from) continue;
                for (auto q : network.neighbors_at(p)) {
                    const Node& dst = network.node_at(q);
                    if (dst.strong || dst.label != move->to) continue;
                    out.push_back(HalfMove::apply(r, {src.id, dst.id}));
                }
            }
        } else if (const auto* relabel = std::get_if<RelabelRule>(&rules[r])) {
            std::vector<LabelId> labels;
            labels.reserve(network.size());
            for (const Node& n : network.nodes()) labels.push_back(n.label);
            std::vector<VertexId> binding;
            enumerate_relabel(network, *relabel, r, 0, labels, binding, out);
        } else {
            const auto& create = std::get<CreateRule>(rules[r]);
            std::vector<char> used(network.size(), 0);
            std::vector<std::uint32_t> chosen;
            enumerate_create(network, create, r, 0, used, chosen, out);
        }
    }
    out.push_back(HalfMove::skip(Actor::Constructor));
    return out;
}

std::vector<HalfMove> enumerate_moves(const Network& network, const std::vector<Rule>& rules, Actor actor,
                                      const PlayModel& model) {
    if (actor == Actor::Destructor) {
        auto moves = enumerate_destructor_moves(network);
        if (model.strict_destructor && moves.size() > 1) moves.pop_back();
        return moves;
    }
    auto moves = enumerate_constructor_moves(network, rules);
    if (model.constructor_never_skips) moves.pop_back();
    if (model.constructor_move_free) {
        std::erase_if(moves, [&](const HalfMove& m) {
            return m.kind == MoveKind::Apply && std::holds_alternative<MoveRule>(rules[m.rule]);
        });
    }
    return moves;
}

Network apply_move(const Network& network, const std::vector<Rule>& rules, const HalfMove& move) {
    if (move.kind == MoveKind::Skip) return network;

    if (move.kind == MoveKind::Delete) {
        if (move.actor != Actor::Destructor) reject("only Destructor deletes");
        const auto p = bound_position(network, move.target);
        const Node& n = network.node_at(p);
        if (!n.active) reject("vertex is already deleted");
        if (n.strong) reject("strong vertices cannot be deleted");
        Network next = network;
        next.node_at(p).active = false;
        return next;
    }

    if (move.actor != Actor::Constructor) reject("only Constructor applies rules");
    if (move.rule >= rules.size()) reject("rule index out of range");
    const Rule& rule = rules[move.rule];
    Network next = network;

    if (const auto* m = std::get_if<MoveRule>(&rule)) {
        if (move.binding.size() != 2) reject("move rule binds exactly two vertices");
        const auto p = bound_position(network, move.binding[0]);
        const auto q = bound_position(network, move.binding[1]);
        const Node& src = network.node_at(p);
        const Node& dst = network.node_at(q);
        if (!src.strong) reject("move source is not strong");
        if (dst.strong) reject("move target is already strong");
        if (src.label != m->from || dst.label != m->to) reject("label mismatch");
        if (!network.adjacent(src.id, dst.id)) reject("move target is not adjacent to the source");
        next.node_at(p).strong = false;
        next.node_at(q).strong = true;
        next.node_at(q).active = true;
        return next;
    }

    if (const auto* r = std::get_if<RelabelRule>(&rule)) {
        if (move.binding.size() != 2 * r->steps.size()) reject("relabel rule binds one pair per step");
        for (std::size_t s = 0; s < r->steps.size(); ++s) {
            const auto p = bound_position(next, move.binding[2 * s]);
            const auto q = bound_position(next, move.binding[2 * s + 1]);
            Node& u = next.node_at(p);
            Node& v = next.node_at(q);
            if (!u.active || !v.active) reject("relabel step binds a deleted vertex");
            if (p == q || !next.adjacent(u.id, v.id)) reject("relabel step binds non-adjacent vertices");
            if (u.label != r->steps[s].from_u || v.label != r->steps[s].from_v) reject("label mismatch");
            u.label = r->steps[s].to_u;
            v.label = r->steps[s].to_v;
        }
        return next;
    }

    const auto& c = std::get<CreateRule>(rule);
    if (move.binding.size() != c.required.size()) reject("create rule binds one vertex per required label");
    std::vector<std::uint32_t> positions;
    for (std::size_t i = 0; i < move.binding.size(); ++i) {
        const auto p = bound_position(network, move.binding[i]);
        if (std::find(positions.begin(), positions.end(), p) != positions.end()) reject("create binding repeats a vertex");
        const Node& n = network.node_at(p);
        if (!n.strong) reject("create binding uses a non-strong vertex");
        if (n.label != c.required[i]) reject("label mismatch");
        positions.push_back(p);
    }
    const VertexId fresh = next.add_fresh_vertex(c.created, true, c.strong);
    for (std::size_t i = 0; i < positions.size(); ++i) {
        next.node_at(positions[i]).label = c.rewritten[i];
        next.add_edge(fresh, network.node_at(positions[i]).id);
    }
    return next;
}

HalfMove normalize(const HalfMove& move, const std::vector<Rule>& rules) {
    if (move.kind != MoveKind::Apply || move.rule >= rules.size()) return move;
    const auto* c = std::get_if<CreateRule>(&rules[move.rule]);
    if (!c || move.binding.size() != c->required.size()) return move;
    HalfMove out = move;
    const std::size_t n = c->required.size();
    std::vector<char> done(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        if (done[i]) continue;
        std::vector<std::size_t> group;
        for (std::size_t j = i; j < n; ++j)
            if (!done[j] && interchangeable(*c, i, j)) {
                group.push_back(j);
                done[j] = 1;
            }
        std::vector<VertexId> ids;
        for (auto j : group) ids.push_back(move.binding[j]);
        std::sort(ids.begin(), ids.end(), [](VertexId a, VertexId b) { return to_index(a) < to_index(b); });
        for (std::size_t k = 0; k < group.size(); ++k) out.binding[group[k]] = ids[k];
    }
    return out;
}

std::size_t level(const Network& network, Actor next) {
    const auto weak = network.weak_count();
    if (next == Actor::Destructor) return weak;
    return weak == 0 ? 0 : weak - 1;
}

std::string describe(const HalfMove& move, const Game& game) {
    switch (move.kind) {
    case MoveKind::Skip:
        return "skip";
    case MoveKind::Delete:
        return "delete " + game.vertex_name(move.target);
    case MoveKind::Apply:
        break;
    }
    std::string out = "rule " + std::to_string(move.rule);
    const Rule* rule = move.rule < game.rules.size() ? &game.rules[move.rule] : nullptr;
    if (rule && std::holds_alternative<MoveRule>(*rule) && move.binding.size() == 2)
        return out + ": move " + game.vertex_name(move.binding[0]) + " -> " + game.vertex_name(move.binding[1]);
    if (rule && std::holds_alternative<CreateRule>(*rule)) out += ": create on";
    else if (rule) out += ": relabel";
    for (std::size_t i = 0; i < move.binding.size(); ++i) {
        out += (i == 0 ? " " : ",");
        out += game.vertex_name(move.binding[i]);
    }
    return out;
}

}  // namespace netgames
