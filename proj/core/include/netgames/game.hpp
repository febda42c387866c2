#pragma once

#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "netgames/network.hpp"

namespace netgames {

/// One relabeling step: adjacent active u, v labeled (from_u, from_v)
/// become (to_u, to_v).
struct RelabelStep {
    LabelId from_u{}, from_v{}, to_u{}, to_v{};
    bool operator==(const RelabelStep&) const = default;
};

struct RelabelRule {
    std::vector<RelabelStep> steps;
    bool operator==(const RelabelRule&) const = default;
};

/// Shift strongness from a strong `from`-labeled node to an adjacent
/// non-strong `to`-labeled node, restoring it if deleted.
struct MoveRule {
    LabelId from{}, to{};
    bool operator==(const MoveRule&) const = default;
};

/// Create a node labeled `created` attached to n distinct strong nodes
/// carrying `required`; those nodes are then relabeled to `rewritten`.
struct CreateRule {
    std::vector<LabelId> required;
    std::vector<LabelId> rewritten;
    LabelId created{};
    bool strong = false;
    bool operator==(const CreateRule&) const = default;
};

using Rule = std::variant<RelabelRule, MoveRule, CreateRule>;

enum class Objective { Safety, Reachability };
enum class Actor { Destructor, Constructor };

constexpr Actor opponent(Actor a) {
    return a == Actor::Destructor ? Actor::Constructor : Actor::Destructor;
}

/// The player who wants to reach the objective's terminal condition:
/// Destructor (disconnect) in safety games, Constructor (connect) in
/// reachability games.
constexpr Actor reaching_player(Objective o) {
    return o == Objective::Safety ? Actor::Destructor : Actor::Constructor;
}

std::string to_string(Actor a);
std::string to_string(Objective o);

struct Game {
    Network initial;
    std::vector<Rule> rules;
    Objective objective = Objective::Safety;
    Alphabet alphabet;
    /// Display names indexed by vertex id; fresh vertices have none.
    std::vector<std::string> names;

    std::string vertex_name(VertexId id) const;
    bool operator==(const Game&) const = default;
};

/// A vertex described by display name, for building games from files and
/// generators.
struct NamedNode {
    std::string name;
    LabelId label = kBlank;
    bool active = true;
    bool strong = false;
};

struct NamedNetwork {
    Network network;
    /// Display names indexed by vertex id.
    std::vector<std::string> names;
};

/// Assigns vertex ids in name order. Throws std::invalid_argument on a
/// duplicate name or an edge naming an unknown vertex.
NamedNetwork assemble_network(std::vector<NamedNode> nodes,
                              const std::vector<std::pair<std::string, std::string>>& edges);

/// Whether the objective's terminal condition holds: a disconnected network
/// in a safety game, a connected one in a reachability game.
bool objective_resolved(Objective objective, const Network& network);

struct GameClass {
    bool has_weak_create = false;
    bool has_strong_create = false;
    bool has_move = false;
    bool has_relabel = false;
    bool is_unlabeled = false;
    bool is_non_expanding = false;
    bool operator==(const GameClass&) const = default;
};

GameClass classify(const Game& game);

std::vector<Violation> validate_rules(const std::vector<Rule>& rules, const Alphabet& alphabet);

class IllegalMove : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace netgames
