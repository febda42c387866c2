#pragma once

#include <cstdint>

#include "netgames/network.hpp"

namespace netgames {

/// Counts the search-depth bounds are computed from. The safety bound reads
/// `active_count` (active nodes of the initial network) while the
/// reachability bound reads `vertex_count` (all vertices).
struct BudgetParameters {
    std::uint64_t active_count = 0;
    std::uint64_t strong_count = 0;
    std::uint64_t vertex_count = 0;
    std::uint64_t level_nodes = 0;
    std::uint64_t level_deactivated = 0;

    static BudgetParameters of(const Network& initial);
};

/// How often one strongness can be shifted within a single level: n_l * d_l.
std::uint64_t per_level_shift_bound(const BudgetParameters& p);

/// Deletions after which a winning strict Destructor must have disconnected
/// the network: |S| * (2|V| - |S|)^3.
std::uint64_t safety_deletion_budget(const BudgetParameters& p);

/// Constructor moves after which a winning Constructor must have connected
/// an unlabeled network: 2 * |S| * |V|^2 - 1, and 0 when |S| = 0.
std::uint64_t reachability_move_budget(const BudgetParameters& p);

}  // namespace netgames
