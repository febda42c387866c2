#include "netgames/canonical.hpp"

#include <algorithm>
#include <numeric>

namespace netgames {
namespace {

void put_varint(std::string& out, std::uint32_t v) {
    while (v >= 0x80) {
        out.push_back(static_cast<char>((v & 0x7f) | 0x80));
        v >>= 7;
    }
    out.push_back(static_cast<char>(v));
}

std::uint32_t get_varint(const std::string& in, std::size_t& pos) {
    std::uint32_t v = 0;
    for (int shift = 0; shift < 35; shift += 7) {
        if (pos >= in.size()) throw MalformedKey("truncated key");
        const auto byte = static_cast<unsigned char>(in[pos++]);
        v |= static_cast<std::uint32_t>(byte & 0x7f) << shift;
        if (!(byte & 0x80)) return v;
    }
    throw MalformedKey("oversized integer in key");
}

// Individualization-refinement search for the lexicographically least
// adjacency encoding over all discrete refinements of the equitable
// partition. Transpositions of twins are automorphisms that fix every
// other vertex, so only one twin per cell is ever individualized.
class Canonizer {
public:
    Canonizer(const Network& net, bool prune) : net_(net) {
        for (std::uint32_t p = 0; p < net.size(); ++p)
            if (!prune || net.node_at(p).active) local_to_pos_.push_back(p);
        n_ = static_cast<std::uint32_t>(local_to_pos_.size());
        std::vector<std::uint32_t> pos_to_local(net.size(), UINT32_MAX);
        for (std::uint32_t i = 0; i < n_; ++i) pos_to_local[local_to_pos_[i]] = i;
        adj_.resize(n_);
        for (std::uint32_t i = 0; i < n_; ++i) {
            for (auto q : net.neighbors_at(local_to_pos_[i]))
                if (pos_to_local[q] != UINT32_MAX) adj_[i].push_back(pos_to_local[q]);
            std::sort(adj_[i].begin(), adj_[i].end());
        }
    }

    CanonicalForm run(Actor next) {
        prefix_.clear();
        prefix_.push_back(next == Actor::Destructor ? '\0' : '\1');
        put_varint(prefix_, n_);

        std::vector<std::uint64_t> attr(n_);
        for (std::uint32_t i = 0; i < n_; ++i) {
            const Node& node = net_.node_at(local_to_pos_[i]);
            attr[i] = (static_cast<std::uint64_t>(to_index(node.label)) << 2) | (node.active ? 1u : 0u) |
                      (node.strong ? 2u : 0u);
        }
        std::vector<std::uint64_t> distinct = attr;
        std::sort(distinct.begin(), distinct.end());
        distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
        std::vector<std::uint32_t> colors(n_);
        for (std::uint32_t i = 0; i < n_; ++i)
            colors[i] = static_cast<std::uint32_t>(std::lower_bound(distinct.begin(), distinct.end(), attr[i]) -
                                                   distinct.begin());

        search(refine(std::move(colors)));

        CanonicalForm form;
        form.key.bytes = std::move(best_);
        form.order.reserve(n_);
        for (auto local : best_order_) form.order.push_back(net_.node_at(local_to_pos_[local]).id);
        return form;
    }

private:
    std::vector<std::uint32_t> refine(std::vector<std::uint32_t> colors) const {
        std::vector<std::uint32_t> idx(n_);
        std::vector<std::vector<std::uint32_t>> sig(n_);
        std::size_t classes = count_classes(colors);
        for (;;) {
            for (std::uint32_t v = 0; v < n_; ++v) {
                auto& s = sig[v];
                s.clear();
                s.push_back(colors[v]);
                for (auto w : adj_[v]) s.push_back(colors[w]);
                std::sort(s.begin() + 1, s.end());
            }
            std::iota(idx.begin(), idx.end(), 0u);
            std::sort(idx.begin(), idx.end(), [&](std::uint32_t a, std::uint32_t b) { return sig[a] < sig[b]; });
            std::vector<std::uint32_t> next(n_);
            std::uint32_t rank = 0;
            for (std::uint32_t k = 0; k < n_; ++k) {
                if (k > 0 && sig[idx[k]] != sig[idx[k - 1]]) ++rank;
                next[idx[k]] = rank;
            }
            const std::size_t next_classes = n_ == 0 ? 0 : rank + 1;
            colors = std::move(next);
            if (next_classes == classes) return colors;
            classes = next_classes;
        }
    }

    static std::size_t count_classes(const std::vector<std::uint32_t>& colors) {
        std::vector<std::uint32_t> c = colors;
        std::sort(c.begin(), c.end());
        return static_cast<std::size_t>(std::unique(c.begin(), c.end()) - c.begin());
    }

    bool twins(std::uint32_t a, std::uint32_t b) const {
        auto without = [](const std::vector<std::uint32_t>& list, std::uint32_t skip) {
            std::vector<std::uint32_t> out;
            out.reserve(list.size());
            for (auto x : list)
                if (x != skip) out.push_back(x);
            return out;
        };
        return without(adj_[a], b) == without(adj_[b], a);
    }

    void search(const std::vector<std::uint32_t>& colors) {
        // Cell sizes by color; colors are dense ranks.
        std::vector<std::uint32_t> size(n_, 0);
        for (auto c : colors) ++size[c];
        std::uint32_t target = UINT32_MAX;
        for (std::uint32_t c = 0; c < n_; ++c)
            if (size[c] > 1) {
                target = c;
                break;
            }
        if (target == UINT32_MAX) {
            leaf(colors);
            return;
        }
        std::vector<std::uint32_t> tried;
        for (std::uint32_t v = 0; v < n_; ++v) {
            if (colors[v] != target) continue;
            if (std::any_of(tried.begin(), tried.end(), [&](std::uint32_t w) { return twins(v, w); })) continue;
            tried.push_back(v);
            std::vector<std::uint32_t> split(n_);
            for (std::uint32_t u = 0; u < n_; ++u)
                split[u] = 2 * colors[u] + ((colors[u] == target && u != v) ? 1 : 0);
            search(refine(std::move(split)));
        }
    }

    void leaf(const std::vector<std::uint32_t>& colors) {
        std::vector<std::uint32_t> order(n_);
        for (std::uint32_t v = 0; v < n_; ++v) order[colors[v]] = v;
        std::string enc = prefix_;
        for (auto v : order) {
            const Node& node = net_.node_at(local_to_pos_[v]);
            put_varint(enc, to_index(node.label));
            enc.push_back(static_cast<char>((node.active ? 1 : 0) | (node.strong ? 2 : 0)));
        }
        const std::size_t bits = static_cast<std::size_t>(n_) * (n_ == 0 ? 0 : n_ - 1) / 2;
        std::string packed((bits + 7) / 8, '\0');
        std::size_t bit = 0;
        for (std::uint32_t i = 0; i < n_; ++i) {
            const auto& row = adj_[order[i]];
            for (std::uint32_t j = i + 1; j < n_; ++j, ++bit)
                if (std::binary_search(row.begin(), row.end(), order[j]))
                    packed[bit / 8] = static_cast<char>(packed[bit / 8] | (1 << (bit % 8)));
        }
        enc += packed;
        if (!have_best_ || enc < best_) {
            best_ = std::move(enc);
            best_order_ = std::move(order);
            have_best_ = true;
        }
    }

    const Network& net_;
    std::vector<std::uint32_t> local_to_pos_;
    std::vector<std::vector<std::uint32_t>> adj_;
    std::uint32_t n_ = 0;
    std::string prefix_;
    std::string best_;
    std::vector<std::uint32_t> best_order_;
    bool have_best_ = false;
};

}  // namespace

Actor CanonicalKey::actor() const {
    return !bytes.empty() && bytes[0] == '\1' ? Actor::Constructor : Actor::Destructor;
}

CanonicalForm canonical_form(const Network& network, Actor next, bool prune_deleted) {
    return Canonizer(network, prune_deleted).run(next);
}

CanonicalKey canonical_key(const Network& network, Actor next, bool prune_deleted) {
    return canonical_form(network, next, prune_deleted).key;
}

Network decode_key(const CanonicalKey& key) {
    const std::string& b = key.bytes;
    if (b.empty() || (b[0] != '\0' && b[0] != '\1')) throw MalformedKey("bad actor tag");
    std::size_t pos = 1;
    const auto n = get_varint(b, pos);
    if (n > b.size()) throw MalformedKey("vertex count exceeds key length");
    Network net;
    for (std::uint32_t i = 0; i < n; ++i) {
        const auto label = get_varint(b, pos);
        if (pos >= b.size()) throw MalformedKey("truncated key");
        const auto flags = static_cast<unsigned char>(b[pos++]);
        if (flags > 3 || flags == 2) throw MalformedKey("bad vertex flags");
        net.add_vertex(Node{VertexId{i}, LabelId{label}, (flags & 1) != 0, (flags & 2) != 0});
    }
    const std::size_t bits = static_cast<std::size_t>(n) * (n == 0 ? 0 : n - 1) / 2;
    if (b.size() - pos != (bits + 7) / 8) throw MalformedKey("adjacency length mismatch");
    std::size_t bit = 0;
    for (std::uint32_t i = 0; i < n; ++i)
        for (std::uint32_t j = i + 1; j < n; ++j, ++bit)
            if (static_cast<unsigned char>(b[pos + bit / 8]) & (1 << (bit % 8))) net.add_edge(VertexId{i}, VertexId{j});
    if (bits % 8 != 0 && (static_cast<unsigned char>(b.back()) >> (bits % 8)) != 0)
        throw MalformedKey("padding bits set");
    return net;
}

std::string to_hex(const CanonicalKey& key) {
    static constexpr char digits[] = "0123456789abcdef";
    std::string out;
    out.reserve(key.bytes.size() * 2);
    for (unsigned char c : key.bytes) {
        out.push_back(digits[c >> 4]);
        out.push_back(digits[c & 15]);
    }
    return out;
}

CanonicalKey key_from_hex(std::string_view hex) {
    auto nibble = [](char c) -> int {
        if (c >= '0' && c <= '9') return c - '0';
        if (c >= 'a' && c <= 'f') return c - 'a' + 10;
        throw MalformedKey("non-hex digit in key");
    };
    if (hex.size() % 2 != 0) throw MalformedKey("odd-length key");
    CanonicalKey key;
    key.bytes.reserve(hex.size() / 2);
    for (std::size_t i = 0; i < hex.size(); i += 2)
        key.bytes.push_back(static_cast<char>(nibble(hex[i]) * 16 + nibble(hex[i + 1])));
    return key;
}

namespace {

template <typename Map>
HalfMove remap(const HalfMove& move, Map&& map) {
    HalfMove out = move;
    if (out.kind == MoveKind::Delete) out.target = map(out.target);
    for (auto& v : out.binding) v = map(v);
    return out;
}

}  // namespace

HalfMove to_concrete(const HalfMove& canonical_move, const CanonicalForm& form) {
    return remap(canonical_move, [&](VertexId v) {
        const auto i = to_index(v);
        if (i >= form.order.size()) throw IllegalMove("canonical vertex out of range");
        return form.order[i];
    });
}

HalfMove to_canonical(const HalfMove& concrete_move, const CanonicalForm& form) {
    return remap(concrete_move, [&](VertexId v) {
        auto it = std::find(form.order.begin(), form.order.end(), v);
        if (it == form.order.end()) throw IllegalMove("vertex not part of the canonical form");
        return VertexId{static_cast<std::uint32_t>(it - form.order.begin())};
    });
}

}  // namespace netgames
