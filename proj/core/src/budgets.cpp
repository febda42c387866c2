#include "netgames/budgets.hpp"

#include <limits>

namespace netgames {
namespace {

constexpr std::uint64_t kMax = std::numeric_limits<std::uint64_t>::max();

std::uint64_t mul(std::uint64_t a, std::uint64_t b) {
    if (a != 0 && b > kMax / a) return kMax;
    return a * b;
}

}  // namespace

BudgetParameters BudgetParameters::of(const Network& initial) {
    BudgetParameters p;
    p.active_count = initial.active_count();
    p.strong_count = initial.strong_count();
    p.vertex_count = initial.size();
    p.level_nodes = initial.size();
    p.level_deactivated = initial.size() - initial.active_count();
    return p;
}

std::uint64_t per_level_shift_bound(const BudgetParameters& p) {
    return mul(p.level_nodes, p.level_deactivated);
}

std::uint64_t safety_deletion_budget(const BudgetParameters& p) {
    const std::uint64_t s = p.strong_count;
    if (s == 0) return 0;
    const std::uint64_t base = 2 * p.active_count - s;
    return mul(s, mul(base, mul(base, base)));
}

std::uint64_t reachability_move_budget(const BudgetParameters& p) {
    if (p.strong_count == 0) return 0;
    const auto product = mul(2 * p.strong_count, mul(p.vertex_count, p.vertex_count));
    return product == kMax ? kMax : product - 1;
}

}  // namespace netgames
