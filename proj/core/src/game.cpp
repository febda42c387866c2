#include "netgames/game.hpp"

#include <algorithm>
#include <unordered_map>

namespace netgames {

std::string to_string(Actor a) {
    return a == Actor::Destructor ? "destructor" : "constructor";
}

std::string to_string(Objective o) {
    return o == Objective::Safety ? "safety" : "reachability";
}

std::string Game::vertex_name(VertexId id) const {
    const auto i = to_index(id);
    if (i < names.size() && !names[i].empty()) return names[i];
    return "#" + std::to_string(i);
}

NamedNetwork assemble_network(std::vector<NamedNode> nodes,
                              const std::vector<std::pair<std::string, std::string>>& edges) {
    std::sort(nodes.begin(), nodes.end(), [](const NamedNode& a, const NamedNode& b) { return a.name < b.name; });
    NamedNetwork out;
    std::unordered_map<std::string, VertexId> ids;
    for (const auto& n : nodes) {
        const VertexId id{static_cast<std::uint32_t>(out.names.size())};
        if (!ids.emplace(n.name, id).second) throw std::invalid_argument("duplicate vertex name '" + n.name + "'");
        out.network.add_vertex(Node{id, n.label, n.active, n.strong});
        out.names.push_back(n.name);
    }
    for (const auto& [a, b] : edges) {
        const auto ia = ids.find(a);
        const auto ib = ids.find(b);
        if (ia == ids.end()) throw std::invalid_argument("edge names unknown vertex '" + a + "'");
        if (ib == ids.end()) throw std::invalid_argument("edge names unknown vertex '" + b + "'");
        out.network.add_edge(ia->second, ib->second);
    }
    return out;
}

bool objective_resolved(Objective objective, const Network& network) {
    const bool connected = is_connected(network);
    return objective == Objective::Safety ? !connected : connected;
}

GameClass classify(const Game& game) {
    GameClass c;
    for (const auto& rule : game.rules) {
        if (std::holds_alternative<RelabelRule>(rule)) c.has_relabel = true;
        if (std::holds_alternative<MoveRule>(rule)) c.has_move = true;
        if (const auto* create = std::get_if<CreateRule>(&rule)) {
            if (create->strong) c.has_strong_create = true;
            else c.has_weak_create = true;
        }
    }
    c.is_non_expanding = !c.has_weak_create && !c.has_strong_create;

    const bool blank_nodes = std::all_of(game.initial.nodes().begin(), game.initial.nodes().end(),
                                         [](const Node& n) { return n.label == kBlank; });
    const MoveRule blank_move{kBlank, kBlank};
    const bool only_blank_move =
        !game.rules.empty() && std::all_of(game.rules.begin(), game.rules.end(), [&](const Rule& r) {
            const auto* m = std::get_if<MoveRule>(&r);
            return m && *m == blank_move;
        });
    c.is_unlabeled = blank_nodes && only_blank_move;
    return c;
}

std::vector<Violation> validate_rules(const std::vector<Rule>& rules, const Alphabet& alphabet) {
    std::vector<Violation> out;
    auto check = [&](LabelId l, std::size_t index) {
        if (!alphabet.contains(l)) out.push_back({"rule " + std::to_string(index) + " uses a label outside the alphabet"});
    };
    for (std::size_t i = 0; i < rules.size(); ++i) {
        const auto tag = "rule " + std::to_string(i);
        if (const auto* r = std::get_if<RelabelRule>(&rules[i])) {
            if (r->steps.empty()) out.push_back({tag + ": relabel rule needs at least one step"});
            for (const auto& s : r->steps) {
                check(s.from_u, i);
                check(s.from_v, i);
                check(s.to_u, i);
                check(s.to_v, i);
            }
        } else if (const auto* m = std::get_if<MoveRule>(&rules[i])) {
            check(m->from, i);
            check(m->to, i);
        } else {
            const auto& c = std::get<CreateRule>(rules[i]);
            if (c.required.empty()) out.push_back({tag + ": create rule needs arity >= 1"});
            if (c.required.size() != c.rewritten.size())
                out.push_back({tag + ": create rule required/rewritten lengths differ"});
            for (auto l : c.required) check(l, i);
            for (auto l : c.rewritten) check(l, i);
            check(c.created, i);
        }
    }
    return out;
}

}  // namespace netgames
