#pragma once

#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "netgames/game.hpp"

namespace netgames {

enum class Direction { Left, Right };

struct Transition {
    std::string state;
    std::string read;
    std::string next;
    std::string write;
    Direction move = Direction::Right;

    bool operator==(const Transition&) const = default;
};

/// A deterministic Turing machine. The tape alphabet must contain the blank
/// "_"; the transition map must be total on (states without stop) x tape.
struct TuringMachineSpec {
    std::vector<std::string> states;
    std::vector<std::string> tape;
    std::vector<Transition> transitions;
    std::string initial;
    std::string stop;

    bool operator==(const TuringMachineSpec&) const = default;
};

struct UndirectedGraphSpec {
    std::vector<std::string> vertices;
    std::vector<std::pair<std::string, std::string>> edges;

    bool operator==(const UndirectedGraphSpec&) const = default;
};

class InvalidSpec : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Empty when the machine is well formed.
std::vector<std::string> validate(const TuringMachineSpec& tm);
std::vector<std::string> validate(const UndirectedGraphSpec& graph);

/// Rule family name -> number of generated rules.
using RuleManifest = std::map<std::string, std::size_t>;

struct TmGame {
    Game game;
    RuleManifest manifest;
};

/// Safety game that Destructor wins iff the machine halts on the empty tape.
/// Cell labels are "(a,X,m)" with X one of L, R or "(q,z)", z in {0,1,<,>}
/// (< and > mark a pending left or right shift) and m one of | and ].
/// The other labels are "top", "bot", "+" and "!". Throws InvalidSpec.
TmGame build_tm_safety_game(const TuringMachineSpec& tm);

/// Cell label text, e.g. cell_label("_", "(q0,0)", "|") == "(_,(q0,0),|)".
std::string cell_label(const std::string& symbol, const std::string& head, const std::string& marker);
std::string head_label(const std::string& state, char aux);

/// Unlabeled reachability game Constructor wins iff the graph has a vertex
/// cover of size at most k. Throws InvalidSpec for k = 0, an empty edge
/// set or a malformed graph.
Game build_vertex_cover_game(const UndirectedGraphSpec& graph, std::size_t k);

struct SubdivisionConfig {
    LabelId label = kBlank;
    bool strong = false;
};

/// Replaces each edge {u, v} by a path u - x - v through a fresh active
/// vertex x. Fresh ids follow the existing ones in edge order.
Network subdivide_edges(const Network& network, const SubdivisionConfig& config = {});

}  // namespace netgames
