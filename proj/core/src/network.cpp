#include "netgames/network.hpp"

#include <algorithm>
#include <stdexcept>

namespace netgames {

Alphabet::Alphabet() {
    intern(kBlankName);
}

LabelId Alphabet::intern(std::string_view name) {
    if (auto found = find(name)) return *found;
    LabelId id{static_cast<std::uint32_t>(names_.size())};
    names_.emplace_back(name);
    index_.emplace(std::string(name), id);
    return id;
}

std::optional<LabelId> Alphabet::find(std::string_view name) const {
    auto it = index_.find(std::string(name));
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

std::uint32_t Network::add_vertex(Node node) {
    if (!nodes_.empty() && to_index(node.id) <= to_index(nodes_.back().id))
        throw std::invalid_argument("vertex ids must be added in increasing order");
    nodes_.push_back(node);
    adjacency_.emplace_back();
    if (to_index(node.id) >= to_index(next_id_)) next_id_ = VertexId{to_index(node.id) + 1};
    return static_cast<std::uint32_t>(nodes_.size() - 1);
}

VertexId Network::add_fresh_vertex(LabelId label, bool active, bool strong) {
    const VertexId id = next_id_;
    add_vertex(Node{id, label, active, strong});
    return id;
}

void Network::add_edge(VertexId a, VertexId b) {
    const auto pa = position_or_throw(a);
    const auto pb = position_or_throw(b);
    auto insert_sorted = [](std::vector<std::uint32_t>& list, std::uint32_t value) {
        list.insert(std::upper_bound(list.begin(), list.end(), value), value);
    };
    insert_sorted(adjacency_[pa], pb);
    if (pa != pb) insert_sorted(adjacency_[pb], pa);
}

std::optional<std::uint32_t> Network::position(VertexId id) const {
    auto it = std::lower_bound(nodes_.begin(), nodes_.end(), id,
                               [](const Node& n, VertexId v) { return to_index(n.id) < to_index(v); });
    if (it == nodes_.end() || it->id != id) return std::nullopt;
    return static_cast<std::uint32_t>(it - nodes_.begin());
}

std::uint32_t Network::position_or_throw(VertexId id) const {
    if (auto p = position(id)) return *p;
    throw std::invalid_argument("unknown vertex id " + std::to_string(to_index(id)));
}

bool Network::adjacent(VertexId a, VertexId b) const {
    auto pa = position(a);
    auto pb = position(b);
    if (!pa || !pb) return false;
    const auto& list = adjacency_[*pa];
    return std::binary_search(list.begin(), list.end(), *pb);
}

std::vector<std::pair<VertexId, VertexId>> Network::edges() const {
    std::vector<std::pair<VertexId, VertexId>> out;
    for (std::uint32_t p = 0; p < nodes_.size(); ++p)
        for (auto q : adjacency_[p])
            if (p <= q) out.emplace_back(nodes_[p].id, nodes_[q].id);
    return out;
}

std::size_t Network::edge_count() const {
    std::size_t twice = 0;
    for (std::uint32_t p = 0; p < nodes_.size(); ++p)
        for (auto q : adjacency_[p]) twice += (p == q) ? 2 : 1;
    return twice / 2;
}

std::size_t Network::active_count() const {
    return static_cast<std::size_t>(std::count_if(nodes_.begin(), nodes_.end(), [](const Node& n) { return n.active; }));
}

std::size_t Network::strong_count() const {
    return static_cast<std::size_t>(std::count_if(nodes_.begin(), nodes_.end(), [](const Node& n) { return n.strong; }));
}

std::size_t Network::weak_count() const {
    return static_cast<std::size_t>(std::count_if(nodes_.begin(), nodes_.end(), [](const Node& n) { return n.weak(); }));
}

void Network::reserve_ids_up_to(VertexId next) {
    if (to_index(next) > to_index(next_id_)) next_id_ = next;
}

Network Network::without_deleted() const {
    Network out;
    std::vector<std::uint32_t> remap(nodes_.size(), UINT32_MAX);
    for (std::uint32_t p = 0; p < nodes_.size(); ++p) {
        if (!nodes_[p].active) continue;
        remap[p] = out.add_vertex(nodes_[p]);
    }
    for (std::uint32_t p = 0; p < nodes_.size(); ++p) {
        if (remap[p] == UINT32_MAX) continue;
        auto& list = out.adjacency_[remap[p]];
        for (auto q : adjacency_[p])
            if (remap[q] != UINT32_MAX) list.push_back(remap[q]);
    }
    out.next_id_ = next_id_;
    return out;
}

bool Network::operator==(const Network& other) const {
    return nodes_ == other.nodes_ && adjacency_ == other.adjacency_ && next_id_ == other.next_id_;
}

std::vector<Violation> validate(const Network& network) {
    std::vector<Violation> out;
    for (std::uint32_t p = 0; p < network.size(); ++p) {
        const Node& n = network.node_at(p);
        const auto id = std::to_string(to_index(n.id));
        if (n.strong && !n.active) out.push_back({"strong ⊄ active: vertex " + id + " is strong but deleted"});
        const auto nbrs = network.neighbors_at(p);
        for (std::size_t i = 0; i < nbrs.size(); ++i) {
            if (nbrs[i] == p) out.push_back({"self-loop at vertex " + id});
            if (i > 0 && nbrs[i] == nbrs[i - 1] && p < nbrs[i])
                out.push_back({"parallel edge " + id + "-" + std::to_string(to_index(network.node_at(nbrs[i]).id))});
        }
    }
    return out;
}

std::vector<Violation> validate(const Network& network, const Alphabet& alphabet) {
    auto out = validate(network);
    for (const Node& n : network.nodes())
        if (!alphabet.contains(n.label))
            out.push_back({"label of vertex " + std::to_string(to_index(n.id)) + " not in alphabet"});
    return out;
}

bool is_connected(const Network& network) {
    const auto n = static_cast<std::uint32_t>(network.size());
    std::uint32_t start = n;
    std::size_t active = 0;
    for (std::uint32_t p = 0; p < n; ++p) {
        if (!network.node_at(p).active) continue;
        ++active;
        if (start == n) start = p;
    }
    if (active <= 1) return true;

    std::vector<char> seen(n, 0);
    std::vector<std::uint32_t> stack{start};
    seen[start] = 1;
    std::size_t reached = 1;
    while (!stack.empty()) {
        const auto p = stack.back();
        stack.pop_back();
        for (auto q : network.neighbors_at(p)) {
            if (seen[q] || !network.node_at(q).active) continue;
            seen[q] = 1;
            ++reached;
            stack.push_back(q);
        }
    }
    return reached == active;
}

}  // namespace netgames
