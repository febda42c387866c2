#pragma once

#include <cstddef>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "netgames/moves.hpp"

namespace netgames {

/// Isomorphism-invariant encoding of a position (network plus next actor).
/// Two positions get equal keys iff they are related by a renaming of
/// vertex identifiers. The bytes are the canonical adjacency encoding
/// itself, not a hash, so equal keys never come from a collision.
struct CanonicalKey {
    std::string bytes;

    Actor actor() const;
    bool operator==(const CanonicalKey&) const = default;
    auto operator<=>(const CanonicalKey&) const = default;
};

struct CanonicalKeyHash {
    std::size_t operator()(const CanonicalKey& k) const { return std::hash<std::string>{}(k.bytes); }
};

struct CanonicalForm {
    CanonicalKey key;
    /// order[i] is the concrete vertex placed at canonical position i.
    std::vector<VertexId> order;
};

/// With prune_deleted, deleted vertices and their edges are dropped first.
CanonicalForm canonical_form(const Network& network, Actor next, bool prune_deleted);
CanonicalKey canonical_key(const Network& network, Actor next, bool prune_deleted);

class MalformedKey : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Rebuilds the representative network of a key: vertex ids 0..n-1 in
/// canonical order. Throws MalformedKey on truncated or inconsistent bytes.
Network decode_key(const CanonicalKey& key);

std::string to_hex(const CanonicalKey& key);
/// Throws MalformedKey on non-hex input.
CanonicalKey key_from_hex(std::string_view hex);

/// Maps a move expressed on a key's representative onto a concrete network
/// with that key, using the concrete network's canonical order.
HalfMove to_concrete(const HalfMove& canonical_move, const CanonicalForm& concrete_form);
/// The inverse mapping: concrete move onto representative coordinates.
HalfMove to_canonical(const HalfMove& concrete_move, const CanonicalForm& concrete_form);

}  // namespace netgames
