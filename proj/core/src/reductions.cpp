#include "netgames/reductions.hpp"

#include <algorithm>
#include <set>

namespace netgames {
namespace {

constexpr char kAux[] = {'0', '1', '<', '>'};
constexpr const char* kMarkers[] = {"|", "]"};

bool bad_name(const std::string& s) {
    return s.empty() || s.find_first_of("(),|] \t\n") != std::string::npos;
}

std::string join(const std::vector<std::string>& errors) {
    std::string out;
    for (const auto& e : errors) out += (out.empty() ? "" : "; ") + e;
    return out;
}

class TmRuleBuilder {
public:
    TmRuleBuilder(const TuringMachineSpec& tm, Game& game, RuleManifest& manifest)
        : tm_(tm), game_(game), manifest_(manifest) {}

    LabelId label(const std::string& name) { return game_.alphabet.intern(name); }
    LabelId cell(const std::string& a, const std::string& head, const std::string& marker) {
        return label(cell_label(a, head, marker));
    }

    void create(const std::string& family, std::vector<LabelId> required, std::vector<LabelId> rewritten,
                LabelId created) {
        game_.rules.push_back(CreateRule{std::move(required), std::move(rewritten), created, false});
        ++manifest_[family];
    }
    void move(const std::string& family, LabelId from, LabelId to) {
        game_.rules.push_back(MoveRule{from, to});
        ++manifest_[family];
    }
    void relabel(const std::string& family, std::vector<RelabelStep> steps) {
        game_.rules.push_back(RelabelRule{std::move(steps)});
        ++manifest_[family];
    }

    void build() {
        const LabelId top = label("top");
        const LabelId bot = label("bot");
        const LabelId plus = label("+");
        const LabelId bang = label("!");
        // The whole composite alphabet, in a fixed order.
        for (const auto& a : tm_.tape) {
            for (const char* m : kMarkers) {
                cell(a, "L", m);
                cell(a, "R", m);
                for (const auto& q : tm_.states)
                    for (char z : kAux) cell(a, head_label(q, z), m);
            }
        }

        create("escape", {bang, top, bot}, {bang, top, bot}, plus);

        shift("shift-right", '>', top, bot, plus);
        shift("shift-left", '<', top, bot, plus);

        for (const auto& a : tm_.tape)
            for (const auto& b : tm_.tape)
                for (const auto& c : tm_.tape)
                    for (const auto& q : tm_.states)
                        for (char z : {'<', '>'})
                            for (const char* m : kMarkers)
                                relabel("punish", {RelabelStep{cell(a, "L", "|"), cell(b, head_label(q, z), "|"),
                                                               bang, bang},
                                                   RelabelStep{bang, cell(c, "R", m), bang, bang}});

        for (const auto& t : tm_.transitions) {
            const std::string p0 = head_label(t.next, '0');
            for (const auto& c : tm_.tape)
                for (char z : {'0', '1'})
                    for (const char* m : kMarkers) {
                        const std::string qz = head_label(t.state, z);
                        if (t.move == Direction::Right)
                            create("transition", {cell(t.read, qz, "|"), cell(c, "R", m), top, bot},
                                   {cell(t.write, "L", "|"), cell(c, p0, m), top, bot}, plus);
                        else
                            create("transition", {cell(c, "L", "|"), cell(t.read, qz, m), top, bot},
                                   {cell(c, p0, "|"), cell(t.write, "R", m), top, bot}, plus);
                    }
        }

        const LabelId fresh_end = cell(std::string(kBlankName), "R", "]");
        for (const auto& q : tm_.states)
            for (const auto& a : tm_.tape)
                create("tape-extension", {bot, cell(a, head_label(q, '0'), "]")}, {bot, cell(a, head_label(q, '0'), "|")},
                       fresh_end);
    }

private:
    // Shifting the two strong cells one step: mark the head, hand the
    // head's strongness outward, pull the trailing strongness onto the
    // head, then commit to a transition.
    void shift(const std::string& family, char dir, LabelId top, LabelId bot, LabelId plus) {
        const bool right = dir == '>';
        for (const auto& q : tm_.states)
            for (const auto& a : tm_.tape)
                create(family + "-1", {cell(a, head_label(q, '0'), "|"), top, bot},
                       {cell(a, head_label(q, dir), "|"), top, bot}, plus);
        for (const auto& q : tm_.states)
            for (const auto& a : tm_.tape)
                for (const auto& b : tm_.tape) {
                    if (right) {
                        for (const char* m : kMarkers) move(family + "-2", cell(a, head_label(q, dir), "|"), cell(b, "R", m));
                    } else {
                        move(family + "-2", cell(a, head_label(q, dir), "|"), cell(b, "L", "|"));
                    }
                }
        for (const auto& q : tm_.states)
            for (const auto& a : tm_.tape)
                for (const auto& b : tm_.tape) {
                    if (right) {
                        move(family + "-3", cell(a, "L", "|"), cell(b, head_label(q, dir), "|"));
                    } else {
                        for (const char* m : kMarkers) move(family + "-3", cell(a, "R", m), cell(b, head_label(q, dir), "|"));
                    }
                }
        for (const auto& q : tm_.states)
            for (const auto& a : tm_.tape)
                create(family + "-4", {cell(a, head_label(q, dir), "|"), top, bot},
                       {cell(a, head_label(q, '1'), "|"), top, bot}, plus);
    }

    const TuringMachineSpec& tm_;
    Game& game_;
    RuleManifest& manifest_;
};

}  // namespace

std::string cell_label(const std::string& symbol, const std::string& head, const std::string& marker) {
    return "(" + symbol + "," + head + "," + marker + ")";
}

std::string head_label(const std::string& state, char aux) {
    return "(" + state + "," + std::string(1, aux) + ")";
}

std::vector<std::string> validate(const TuringMachineSpec& tm) {
    std::vector<std::string> errors;
    const std::set<std::string> states(tm.states.begin(), tm.states.end());
    const std::set<std::string> tape(tm.tape.begin(), tm.tape.end());
    if (tm.states.empty()) errors.push_back("no states");
    if (states.size() != tm.states.size()) errors.push_back("duplicate state");
    if (tape.size() != tm.tape.size()) errors.push_back("duplicate tape symbol");
    if (!tape.count(std::string(kBlankName))) errors.push_back("tape alphabet lacks the blank '_'");
    for (const auto& s : tm.states)
        if (bad_name(s)) errors.push_back("invalid state name '" + s + "'");
    for (const auto& s : tm.tape)
        if (bad_name(s)) errors.push_back("invalid tape symbol '" + s + "'");
    if (!states.count(tm.initial)) errors.push_back("unknown initial state '" + tm.initial + "'");
    if (!states.count(tm.stop)) errors.push_back("unknown stop state '" + tm.stop + "'");

    std::set<std::pair<std::string, std::string>> domain;
    for (const auto& t : tm.transitions) {
        if (!states.count(t.state) || !states.count(t.next)) errors.push_back("transition names an unknown state");
        if (!tape.count(t.read) || !tape.count(t.write)) errors.push_back("transition names an unknown tape symbol");
        if (t.state == tm.stop) errors.push_back("the stop state has an outgoing transition");
        if (!domain.emplace(t.state, t.read).second)
            errors.push_back("two transitions for (" + t.state + "," + t.read + ")");
    }
    for (const auto& q : tm.states) {
        if (q == tm.stop) continue;
        for (const auto& a : tm.tape)
            if (!domain.count({q, a})) errors.push_back("no transition for (" + q + "," + a + ")");
    }
    return errors;
}

std::vector<std::string> validate(const UndirectedGraphSpec& graph) {
    std::vector<std::string> errors;
    const std::set<std::string> vertices(graph.vertices.begin(), graph.vertices.end());
    if (vertices.size() != graph.vertices.size()) errors.push_back("duplicate vertex");
    for (const auto& v : graph.vertices)
        if (v.empty()) errors.push_back("empty vertex name");
    std::set<std::pair<std::string, std::string>> seen;
    for (const auto& [a, b] : graph.edges) {
        if (!vertices.count(a) || !vertices.count(b)) errors.push_back("edge {" + a + "," + b + "} names an unknown vertex");
        if (a == b) errors.push_back("self-loop at " + a);
        if (!seen.insert(std::minmax(a, b)).second) errors.push_back("duplicate edge {" + a + "," + b + "}");
    }
    return errors;
}

TmGame build_tm_safety_game(const TuringMachineSpec& tm) {
    if (auto errors = validate(tm); !errors.empty()) throw InvalidSpec("invalid machine: " + join(errors));
    TmGame out;
    Game& game = out.game;
    game.objective = Objective::Safety;
    TmRuleBuilder builder(tm, game, out.manifest);
    builder.build();

    const auto top = builder.label("top");
    const auto bot = builder.label("bot");
    const auto plus = builder.label("+");
    std::vector<NamedNode> nodes{
        {"top", top, true, true},
        {"bot", bot, true, true},
        {"plus1", plus, true, false},
        {"plus2", plus, true, false},
        {"plus3", plus, true, false},
        {"cell0", builder.cell(std::string(kBlankName), head_label(tm.initial, '0'), "|"), true, true},
        {"cell1", builder.cell(std::string(kBlankName), "R", "]"), true, true},
    };
    std::vector<std::pair<std::string, std::string>> edges{
        {"top", "plus1"}, {"top", "plus2"}, {"top", "plus3"}, {"bot", "plus1"}, {"bot", "plus2"},
        {"bot", "plus3"}, {"bot", "cell0"}, {"bot", "cell1"}, {"cell0", "cell1"},
    };
    auto named = assemble_network(std::move(nodes), edges);
    game.initial = std::move(named.network);
    game.names = std::move(named.names);
    return out;
}

Game build_vertex_cover_game(const UndirectedGraphSpec& graph, std::size_t k) {
    if (k == 0) throw InvalidSpec("k must be at least 1");
    if (graph.edges.empty()) throw InvalidSpec("graph has no edges");
    if (auto errors = validate(graph); !errors.empty()) throw InvalidSpec("invalid graph: " + join(errors));

    std::vector<NamedNode> nodes;
    std::vector<std::pair<std::string, std::string>> edges;
    for (const auto& v : graph.vertices) nodes.push_back({"v:" + v, kBlank, false, false});
    for (std::size_t i = 0; i < graph.edges.size(); ++i) {
        const std::string name = "e:" + std::to_string(i);
        nodes.push_back({name, kBlank, true, false});
        edges.emplace_back(name, "v:" + graph.edges[i].first);
        edges.emplace_back(name, "v:" + graph.edges[i].second);
    }
    for (std::size_t i = 0; i < k; ++i) {
        const std::string name = "s:" + std::to_string(i);
        nodes.push_back({name, kBlank, true, true});
        for (const auto& v : graph.vertices) edges.emplace_back(name, "v:" + v);
    }

    Game game;
    game.objective = Objective::Reachability;
    game.rules.push_back(MoveRule{kBlank, kBlank});
    auto named = assemble_network(std::move(nodes), edges);
    game.initial = std::move(named.network);
    game.names = std::move(named.names);
    return game;
}

Network subdivide_edges(const Network& network, const SubdivisionConfig& config) {
    Network out;
    for (const Node& n : network.nodes()) out.add_vertex(n);
    out.reserve_ids_up_to(network.next_id());
    for (const auto& [u, v] : network.edges()) {
        const VertexId x = out.add_fresh_vertex(config.label, true, config.strong);
        out.add_edge(u, x);
        out.add_edge(x, v);
    }
    return out;
}

}  // namespace netgames
