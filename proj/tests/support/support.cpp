#include "support.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <unordered_map>

#include "netgames/gamefile.hpp"
#include "netgames/moves.hpp"

namespace netgames::testing {

std::string fixture_path(const std::string& name) { return std::string(NETGAMES_FIXTURE_DIR) + "/" + name; }

Game load_fixture(const std::string& name) { return parse_game(read_file(fixture_path(name))); }

VertexId vertex(const Game& game, const std::string& name) {
    for (std::size_t i = 0; i < game.names.size(); ++i)
        if (game.names[i] == name) return VertexId{static_cast<std::uint32_t>(i)};
    throw std::invalid_argument("no vertex named " + name);
}

Network make_network(std::size_t n, const std::vector<std::pair<int, int>>& edges, const std::vector<int>& strong,
                     const std::vector<int>& deleted) {
    Network net;
    for (std::size_t i = 0; i < n; ++i) {
        const int v = static_cast<int>(i);
        const bool is_strong = std::find(strong.begin(), strong.end(), v) != strong.end();
        const bool is_deleted = std::find(deleted.begin(), deleted.end(), v) != deleted.end();
        net.add_vertex(Node{VertexId{static_cast<std::uint32_t>(i)}, kBlank, !is_deleted, is_strong});
    }
    for (auto [a, b] : edges) net.add_edge(VertexId{static_cast<std::uint32_t>(a)}, VertexId{static_cast<std::uint32_t>(b)});
    return net;
}

namespace {

std::size_t pick(std::mt19937_64& rng, std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

bool coin(std::mt19937_64& rng, double p) { return std::bernoulli_distribution(p)(rng); }

LabelId random_label(std::mt19937_64& rng, std::size_t labels) { return LabelId{static_cast<std::uint32_t>(pick(rng, 0, labels - 1))}; }

Alphabet make_alphabet(std::size_t labels) {
    Alphabet a;
    for (std::size_t i = 1; i < labels; ++i) a.intern(std::string(1, static_cast<char>('a' + i - 1)));
    return a;
}

std::vector<std::string> numbered_names(std::size_t n) {
    std::vector<std::string> names;
    for (std::size_t i = 0; i < n; ++i) names.push_back("n" + std::to_string(i));
    return names;
}

}  // namespace

Network random_network(std::mt19937_64& rng, std::size_t n, std::size_t labels) {
    Network net;
    for (std::size_t i = 0; i < n; ++i) {
        const bool active = coin(rng, 0.8);
        const bool strong = active && coin(rng, 0.4);
        net.add_vertex(Node{VertexId{static_cast<std::uint32_t>(i)}, random_label(rng, labels), active, strong});
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (coin(rng, 0.5)) net.add_edge(VertexId{static_cast<std::uint32_t>(i)}, VertexId{static_cast<std::uint32_t>(j)});
    return net;
}

Game random_game(std::mt19937_64& rng, const RandomGameOptions& o) {
    Game game;
    game.objective = o.objective;
    const std::size_t labels = pick(rng, 1, o.max_labels);
    game.alphabet = make_alphabet(labels);
    for (;;) {
        const std::size_t n = pick(rng, 1, o.max_vertices);
        game.initial = random_network(rng, n, labels);
        if (objective_resolved(game.objective, game.initial)) continue;
        game.names = numbered_names(n);
        break;
    }
    const std::size_t rules = pick(rng, 0, o.max_rules);
    for (std::size_t r = 0; r < rules; ++r) {
        const std::size_t kinds = 1 + (o.allow_relabel ? 1 : 0) + (o.allow_create ? 1 : 0);
        std::size_t kind = pick(rng, 0, kinds - 1);
        if (kind == 1 && !o.allow_relabel) kind = 2;
        if (kind == 0) {
            game.rules.push_back(MoveRule{random_label(rng, labels), random_label(rng, labels)});
        } else if (kind == 1) {
            RelabelRule rule;
            const std::size_t steps = pick(rng, 1, 2);
            for (std::size_t s = 0; s < steps; ++s)
                rule.steps.push_back(RelabelStep{random_label(rng, labels), random_label(rng, labels),
                                                 random_label(rng, labels), random_label(rng, labels)});
            game.rules.push_back(std::move(rule));
        } else {
            CreateRule rule;
            const std::size_t arity = pick(rng, 1, 2);
            for (std::size_t i = 0; i < arity; ++i) {
                rule.required.push_back(random_label(rng, labels));
                rule.rewritten.push_back(random_label(rng, labels));
            }
            rule.created = random_label(rng, labels);
            rule.strong = coin(rng, 0.3);
            game.rules.push_back(std::move(rule));
        }
    }
    return game;
}

Game random_unlabeled_reachability(std::mt19937_64& rng, std::size_t max_vertices) {
    Game game;
    game.objective = Objective::Reachability;
    game.rules.push_back(MoveRule{kBlank, kBlank});
    for (;;) {
        const std::size_t n = pick(rng, 2, max_vertices);
        game.initial = random_network(rng, n, 1);
        if (is_connected(game.initial)) continue;
        game.names = numbered_names(n);
        return game;
    }
}

Network permute(const Network& network, std::mt19937_64& rng) {
    const std::size_t n = network.size();
    std::vector<std::uint32_t> image(n);
    std::iota(image.begin(), image.end(), 0u);
    std::shuffle(image.begin(), image.end(), rng);
    std::vector<Node> nodes(n);
    for (std::size_t p = 0; p < n; ++p) {
        Node node = network.node_at(static_cast<std::uint32_t>(p));
        node.id = VertexId{image[p]};
        nodes[image[p]] = node;
    }
    Network out;
    for (const Node& node : nodes) out.add_vertex(node);
    for (const auto& [u, v] : network.edges()) out.add_edge(VertexId{image[to_index(u)]}, VertexId{image[to_index(v)]});
    return out;
}

namespace {

using EdgeSet = std::vector<std::pair<int, int>>;

bool connected(int n, const EdgeSet& edges) {
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (auto [a, b] : edges) parent[find(a)] = find(b);
    for (int i = 1; i < n; ++i)
        if (find(i) != find(0)) return false;
    return true;
}

// Least sorted edge list over all vertex permutations.
EdgeSet canonical_edges(int n, const EdgeSet& edges) {
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    EdgeSet best;
    bool first = true;
    do {
        EdgeSet e;
        for (auto [a, b] : edges) e.emplace_back(std::min(perm[a], perm[b]), std::max(perm[a], perm[b]));
        std::sort(e.begin(), e.end());
        if (first || e < best) best = e;
        first = false;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

}  // namespace

namespace {

std::vector<UndirectedGraphSpec> small_graphs(bool connected_only) {
    std::vector<UndirectedGraphSpec> out;
    for (int n = 2; n <= 5; ++n) {
        EdgeSet all;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) all.emplace_back(i, j);
        std::set<EdgeSet> seen;
        for (std::uint32_t mask = 1; mask < (1u << all.size()); ++mask) {
            EdgeSet e;
            for (std::size_t i = 0; i < all.size(); ++i)
                if (mask & (1u << i)) e.push_back(all[i]);
            if (e.size() > 6 || (connected_only && !connected(n, e))) continue;
            if (!seen.insert(canonical_edges(n, e)).second) continue;
            UndirectedGraphSpec g;
            for (int i = 0; i < n; ++i) g.vertices.push_back(std::string(1, static_cast<char>('a' + i)));
            for (auto [a, b] : e) g.edges.emplace_back(g.vertices[a], g.vertices[b]);
            out.push_back(std::move(g));
        }
    }
    return out;
}

}  // namespace

std::vector<UndirectedGraphSpec> small_connected_graphs() { return small_graphs(true); }

std::vector<UndirectedGraphSpec> small_graphs_with_edges() { return small_graphs(false); }

UndirectedGraphSpec random_graph(std::mt19937_64& rng, std::size_t max_vertices, std::size_t max_edges) {
    for (;;) {
        const std::size_t n = pick(rng, 2, max_vertices);
        UndirectedGraphSpec g;
        for (std::size_t i = 0; i < n; ++i) g.vertices.push_back("x" + std::to_string(i));
        std::shuffle(g.vertices.begin(), g.vertices.end(), rng);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                if (coin(rng, 0.4)) g.edges.emplace_back(g.vertices[i], g.vertices[j]);
        std::shuffle(g.edges.begin(), g.edges.end(), rng);
        if (!g.edges.empty() && g.edges.size() <= max_edges) return g;
    }
}

RuleManifest expected_tm_manifest(const TuringMachineSpec& tm) {
    const std::size_t q = tm.states.size(), g = tm.tape.size(), d = tm.transitions.size();
    // Markers range over {|, ]}, transition aux symbols over {0, 1}, shift
    // marks over {<, >}.
    return {
        {"escape", 1},
        {"punish", g * g * g * q * 2 * 2},
        {"shift-left-1", q * g},
        {"shift-left-2", q * g * g},
        {"shift-left-3", q * g * g * 2},
        {"shift-left-4", q * g},
        {"shift-right-1", q * g},
        {"shift-right-2", q * g * g * 2},
        {"shift-right-3", q * g * g},
        {"shift-right-4", q * g},
        {"tape-extension", q * g},
        {"transition", d * g * 2 * 2},
    };
}

std::size_t min_vertex_cover(const UndirectedGraphSpec& graph) {
    const std::size_t n = graph.vertices.size();
    std::map<std::string, std::size_t> index;
    for (std::size_t i = 0; i < n; ++i) index[graph.vertices[i]] = i;
    std::size_t best = n;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        const bool covers = std::all_of(graph.edges.begin(), graph.edges.end(), [&](const auto& e) {
            return (mask >> index[e.first] & 1) || (mask >> index[e.second] & 1);
        });
        if (covers) best = std::min<std::size_t>(best, static_cast<std::size_t>(__builtin_popcount(mask)));
    }
    return best;
}

namespace {

std::string state_string(const Network& net, Actor actor) {
    std::string s(1, actor == Actor::Destructor ? 'D' : 'C');
    for (const Node& n : net.nodes()) {
        s += std::to_string(to_index(n.label));
        s += n.strong ? 'S' : (n.active ? 'A' : 'X');
    }
    return s;
}

}  // namespace

Winner naive_winner(const Game& game) { return naive_winner_from(game, game.initial, Actor::Destructor); }

Winner naive_winner_from(const Game& game, const Network& start, Actor next) {
    if (!classify(game).is_non_expanding) throw std::invalid_argument("naive_winner needs a non-expanding game");
    struct State {
        Actor actor;
        bool terminal;
        std::vector<std::size_t> next;
    };
    std::vector<State> states;
    std::unordered_map<std::string, std::size_t> index;
    std::vector<Network> nets;
    auto intern = [&](const Network& net, Actor actor) {
        auto [it, inserted] = index.emplace(state_string(net, actor), states.size());
        if (inserted) {
            states.push_back(State{actor, objective_resolved(game.objective, net), {}});
            nets.push_back(net);
        }
        return it->second;
    };
    intern(start, next);
    for (std::size_t i = 0; i < states.size(); ++i) {
        if (states[i].terminal) continue;
        const Network net = nets[i];
        const Actor actor = states[i].actor;
        for (const HalfMove& m : enumerate_moves(net, game.rules, actor)) {
            const auto j = intern(apply_move(net, game.rules, m), opponent(actor));
            states[i].next.push_back(j);
        }
    }

    // Sweep until stable: the reaching player wins where it can force a
    // terminal state.
    const Actor reaching = reaching_player(game.objective);
    std::vector<char> win(states.size(), 0);
    for (std::size_t i = 0; i < states.size(); ++i) win[i] = states[i].terminal;
    for (bool changed = true; changed;) {
        changed = false;
        for (std::size_t i = 0; i < states.size(); ++i) {
            if (win[i] || states[i].next.empty()) continue;
            const auto& nx = states[i].next;
            const bool w = states[i].actor == reaching
                               ? std::any_of(nx.begin(), nx.end(), [&](std::size_t j) { return win[j] != 0; })
                               : std::all_of(nx.begin(), nx.end(), [&](std::size_t j) { return win[j] != 0; });
            if (w) {
                win[i] = 1;
                changed = true;
            }
        }
    }
    const bool reached = win[0] != 0;
    return (reaching == Actor::Constructor) == reached ? Winner::ConstructorWins : Winner::DestructorWins;
}

}  // namespace netgames::testing
