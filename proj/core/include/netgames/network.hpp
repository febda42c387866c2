#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace netgames {

enum class VertexId : std::uint32_t {};
enum class LabelId : std::uint32_t {};

constexpr std::uint32_t to_index(VertexId v) { return static_cast<std::uint32_t>(v); }
constexpr std::uint32_t to_index(LabelId l) { return static_cast<std::uint32_t>(l); }

inline constexpr LabelId kBlank{0};
inline constexpr std::string_view kBlankName = "_";

/// Finite label alphabet. Id 0 is always the blank symbol, spelled "_".
class Alphabet {
public:
    Alphabet();

    LabelId intern(std::string_view name);
    std::optional<LabelId> find(std::string_view name) const;
    const std::string& name(LabelId id) const { return names_.at(to_index(id)); }
    bool contains(LabelId id) const { return to_index(id) < names_.size(); }
    std::size_t size() const { return names_.size(); }
    const std::vector<std::string>& names() const { return names_; }

    bool operator==(const Alphabet& other) const { return names_ == other.names_; }

private:
    std::vector<std::string> names_;
    std::unordered_map<std::string, LabelId> index_;
};

struct Node {
    VertexId id{};
    LabelId label = kBlank;
    bool active = true;
    bool strong = false;

    bool weak() const { return active && !strong; }
    bool operator==(const Node&) const = default;
};

/// A network (V, E, A, S, labeling). Vertices are kept sorted by identifier;
/// adjacency lists hold positions into that order. Deleted vertices keep
/// their edges and label so that strongness can later restore them.
class Network {
public:
    Network() = default;

    /// Adds a vertex. Identifiers must be added in increasing order.
    std::uint32_t add_vertex(Node node);
    /// Adds a vertex with the next fresh identifier.
    VertexId add_fresh_vertex(LabelId label, bool active, bool strong);
    /// Adds an undirected edge; throws std::invalid_argument on unknown ids.
    /// Self-loops and parallel edges are stored as given so that validate()
    /// can report them.
    void add_edge(VertexId a, VertexId b);

    std::size_t size() const { return nodes_.size(); }
    const std::vector<Node>& nodes() const { return nodes_; }
    const Node& node_at(std::uint32_t pos) const { return nodes_[pos]; }
    Node& node_at(std::uint32_t pos) { return nodes_[pos]; }
    std::span<const std::uint32_t> neighbors_at(std::uint32_t pos) const { return adjacency_[pos]; }

    std::optional<std::uint32_t> position(VertexId id) const;
    std::uint32_t position_or_throw(VertexId id) const;
    const Node& node(VertexId id) const { return nodes_[position_or_throw(id)]; }
    bool adjacent(VertexId a, VertexId b) const;

    /// Unordered edges as (lower id, higher id), sorted.
    std::vector<std::pair<VertexId, VertexId>> edges() const;
    std::size_t edge_count() const;

    std::size_t active_count() const;
    std::size_t strong_count() const;
    std::size_t weak_count() const;

    VertexId next_id() const { return next_id_; }
    void reserve_ids_up_to(VertexId next);

    /// Copy with deleted vertices and their incident edges removed.
    /// Surviving identifiers are unchanged.
    Network without_deleted() const;

    bool operator==(const Network& other) const;

private:
    std::vector<Node> nodes_;
    std::vector<std::vector<std::uint32_t>> adjacency_;
    VertexId next_id_{0};
};

struct Violation {
    std::string what;
};

std::vector<Violation> validate(const Network& network);
std::vector<Violation> validate(const Network& network, const Alphabet& alphabet);

/// True iff the subgraph induced by active vertices is connected. Networks
/// with at most one active vertex are connected.
bool is_connected(const Network& network);

}  // namespace netgames
