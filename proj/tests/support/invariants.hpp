#pragma once

#include <cstdint>
#include <string>

namespace netgames::testing {

// Randomized invariant checks shared by the unit tests and the acceptance
// run. Each returns an empty string on success and a description of the
// first failure otherwise.

/// Random plays over random games with every rule kind: each enumerated
/// move applies cleanly, is listed once, is normalized, and keeps the
/// network valid with the per-kind effects.
std::string check_rule_invariants(std::uint64_t seed, int games);

/// Strict Destructor against a Constructor limited to Move and Skip: the
/// level of Destructor-next positions never rises before reaching 0, nor
/// does the level of Constructor-next positions.
std::string check_level_monotone(std::uint64_t seed, int games);

/// canonical_key is unchanged by random vertex renamings, for both actors
/// and both pruning modes, and decode_key reproduces the key.
std::string check_permutation_invariance(std::uint64_t seed, int permutations);

/// parse(serialize(g)) == g and serialization is a fixpoint, for random
/// games and for strategies extracted from them.
std::string check_serialization_round_trips(std::uint64_t seed, int games);

}  // namespace netgames::testing
